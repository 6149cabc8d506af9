"""Seeded synthetic layouts for tests: jittered-grid positions, short-biased edges.

Node positions sit on a shuffled grid with random jitter, which keeps nodes
well separated, and edges prefer nearby node pairs, which keeps morph
durations and crossing counts in the range a force-directed drawing of the
same size would have.
"""

from __future__ import annotations

import math
import random

from edgemorph import EdgeSpec, GraphLayout, NodeSpec, validate_layout
from edgemorph.errors import ValidationError


def synth_layout(
    seed: int,
    n_nodes: int | None = None,
    density: float | None = None,
    spacing: float = 130.0,
    jitter: float = 0.42,
    bias: float = 2.5,
) -> GraphLayout:
    rng = random.Random(seed)
    n = n_nodes if n_nodes is not None else rng.randint(10, 60)
    max_density = (n - 1) / 2.0
    d = density if density is not None else rng.uniform(2.0, min(5.5, max_density))
    d = min(d, max_density)
    m = max(1, min(round(d * n), n * (n - 1) // 2))

    cols = math.ceil(math.sqrt(n))
    cells = [(i % cols, i // cols) for i in range(cols * cols)]
    rng.shuffle(cells)
    nodes = []
    for i, (cx, cy) in enumerate(cells[:n]):
        x = cx * spacing + rng.uniform(-jitter, jitter) * spacing
        y = cy * spacing + rng.uniform(-jitter, jitter) * spacing
        nodes.append(NodeSpec(f"n{i:02d}", round(x, 3), round(y, 3)))

    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            dx = nodes[i].x - nodes[j].x
            dy = nodes[i].y - nodes[j].y
            pairs.append((dx * dx + dy * dy, nodes[i].id, nodes[j].id))
    pairs.sort()

    chosen: list[EdgeSpec] = []
    chosen_keys: set[tuple[str, str]] = set()
    accept = min(1.0, bias * m / len(pairs))
    for _, a, b in pairs:
        if len(chosen) == m:
            break
        if rng.random() < accept:
            edge = EdgeSpec(a, b)
            chosen.append(edge)
            chosen_keys.add(edge.key)
    for _, a, b in pairs:  # deterministic top-up if the biased pass fell short
        if len(chosen) == m:
            break
        edge = EdgeSpec(a, b)
        if edge.key not in chosen_keys:
            chosen.append(edge)
            chosen_keys.add(edge.key)
    return GraphLayout(tuple(nodes), tuple(chosen))


def valid_synth_layout(seed: int, **kwargs) -> GraphLayout:
    """Synthetic layout that passes full validation; reseeds on degeneracy."""
    for attempt in range(5):
        layout = synth_layout(seed + 1_000_003 * attempt, **kwargs)
        try:
            validate_layout(layout)
            return layout
        except ValidationError:
            continue
    raise AssertionError(f"could not build a valid layout from seed {seed}")


def paper_scale_layout(seed: int) -> GraphLayout:
    """Layout in the 40..58 node, density 2..5.5 class on a desktop-sized box.

    Wider spacing and a weaker short-edge bias than the default keep edge
    lengths in the range a force-directed embedding of this size produces.
    """
    rng = random.Random(seed)
    n = rng.randint(40, 58)
    d = rng.uniform(2.0, 5.5)
    return valid_synth_layout(seed, n_nodes=n, density=d, spacing=200.0, bias=1.5)


def two_segment_cross() -> GraphLayout:
    """Two perpendicular 400 px edges crossing at both midpoints."""
    nodes = (
        NodeSpec("a", 0.0, 0.0),
        NodeSpec("b", 400.0, 0.0),
        NodeSpec("c", 200.0, -200.0),
        NodeSpec("d", 200.0, 200.0),
    )
    edges = (EdgeSpec("a", "b"), EdgeSpec("c", "d"))
    return GraphLayout(nodes, edges)


def k4_square() -> GraphLayout:
    """Complete graph on the corners of a square, diagonals included."""
    nodes = (
        NodeSpec("p", 0.0, 0.0),
        NodeSpec("q", 100.0, 0.0),
        NodeSpec("r", 100.0, 100.0),
        NodeSpec("s", 0.0, 100.0),
    )
    edges = tuple(
        EdgeSpec(a, b)
        for a, b in (("p", "q"), ("q", "r"), ("r", "s"), ("p", "s"), ("p", "r"), ("q", "s"))
    )
    return GraphLayout(nodes, edges)
