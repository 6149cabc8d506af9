"""Graph layouts with fixed node positions and symmetric edge stubs.

A layout is an embedded simple graph: nodes carry pixel coordinates (screen
convention, y grows downward) and an optional highlight role, edges are
unordered pairs of node ids. Every edge can be shown partially as two stubs
of equal length, one incident to each endpoint; the stub length ratio is the
stub length divided by the edge length and tops out at 1/2, where the two
stubs meet at the midpoint and the edge is fully drawn.

All values are immutable after construction and safe to share across threads.
Construction checks the cheap structural invariants; :func:`parse_layout` and
:func:`validate_layout` additionally reject pairs of collinear edges that
overlap in more than one point, whose crossing would be a whole segment.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ParseError, RangeError, ValidationError

COLOR_ROLES = ("plain", "blue", "orange")

Point = tuple[float, float]


@dataclass(frozen=True)
class NodeSpec:
    id: str
    x: float
    y: float
    color_role: str = "plain"

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValidationError(f"node id must be a non-empty string, got {self.id!r}")
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValidationError(f"node {self.id!r} has non-finite position")
        if self.color_role not in COLOR_ROLES:
            raise ValidationError(
                f"node {self.id!r} has unknown color role {self.color_role!r}"
            )

    @property
    def position(self) -> Point:
        return (self.x, self.y)


@dataclass(frozen=True)
class EdgeSpec:
    """Unordered node pair; endpoints are stored in lexicographic order."""

    source: str
    target: str

    def __post_init__(self) -> None:
        if self.source == self.target:
            raise ValidationError(f"self-loop at node {self.source!r}")
        if self.source > self.target:
            a, b = self.target, self.source
            object.__setattr__(self, "source", a)
            object.__setattr__(self, "target", b)

    @property
    def key(self) -> tuple[str, str]:
        return (self.source, self.target)


@dataclass(frozen=True)
class GraphLayout:
    nodes: tuple[NodeSpec, ...]
    edges: tuple[EdgeSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))
        seen_ids: set[str] = set()
        for node in self.nodes:
            if node.id in seen_ids:
                raise ValidationError(f"duplicate node id {node.id!r}")
            seen_ids.add(node.id)
        positions: dict[Point, str] = {}
        for node in self.nodes:
            other = positions.get(node.position)
            if other is not None:
                raise ValidationError(
                    f"nodes {other!r} and {node.id!r} coincide at {node.position}"
                )
            positions[node.position] = node.id
        seen_edges: set[tuple[str, str]] = set()
        for edge in self.edges:
            for endpoint in edge.key:
                if endpoint not in seen_ids:
                    raise ValidationError(
                        f"edge {edge.key} references unknown node {endpoint!r}"
                    )
            if edge.key in seen_edges:
                raise ValidationError(f"duplicate edge {edge.key}")
            seen_edges.add(edge.key)

    @cached_property
    def nodes_by_id(self) -> dict[str, NodeSpec]:
        return {node.id: node for node in self.nodes}

    @cached_property
    def edge_keys(self) -> frozenset[tuple[str, str]]:
        return frozenset(edge.key for edge in self.edges)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        grow: dict[str, set[str]] = {node.id: set() for node in self.nodes}
        for edge in self.edges:
            grow[edge.source].add(edge.target)
            grow[edge.target].add(edge.source)
        return {nid: frozenset(neigh) for nid, neigh in grow.items()}

    def node(self, node_id: str) -> NodeSpec:
        try:
            return self.nodes_by_id[node_id]
        except KeyError:
            raise LookupError(f"unknown node {node_id!r}") from None

    def has_edge(self, a: str, b: str) -> bool:
        return tuple(sorted((a, b))) in self.edge_keys

    def endpoints(self, edge: EdgeSpec) -> tuple[Point, Point]:
        """Positions of the lexicographically smaller endpoint, then the larger."""
        return self.node(edge.source).position, self.node(edge.target).position


@dataclass(frozen=True)
class StubPair:
    """The two drawn fragments of one edge at a given stub length ratio.

    ``segment_source`` runs from the lexicographically smaller endpoint toward
    the larger one, ``segment_target`` the other way; both have length
    ratio * edge length and lie on the supporting line of the edge.
    """

    edge: EdgeSpec
    ratio: float
    segment_source: tuple[Point, Point]
    segment_target: tuple[Point, Point]


def _require_edge(layout: GraphLayout, edge: EdgeSpec | tuple[str, str]) -> EdgeSpec:
    if isinstance(edge, tuple):
        edge = EdgeSpec(*edge)
    if edge.key not in layout.edge_keys:
        raise LookupError(f"edge {edge.key} not in layout")
    return edge


def edge_length(layout: GraphLayout, edge: EdgeSpec | tuple[str, str]) -> float:
    """Euclidean length of the edge segment in pixels."""
    edge = _require_edge(layout, edge)
    (x1, y1), (x2, y2) = layout.endpoints(edge)
    return math.hypot(x2 - x1, y2 - y1)


def _lerp(a: Point, b: Point, t: float) -> Point:
    # Affine form keeps r = 0 and r = 1/2 exact: both stub tips evaluate to
    # the identical midpoint expression at 1/2.
    return ((1.0 - t) * a[0] + t * b[0], (1.0 - t) * a[1] + t * b[1])


def stub_pair(
    layout: GraphLayout, edge: EdgeSpec | tuple[str, str], ratio: float
) -> StubPair:
    """Both stubs of an edge at the given stub length ratio.

    The source stub spans parameter [0, ratio] of source to target, the target
    stub spans [1 - ratio, 1]. At ratio 1/2 the two tips meet exactly at the
    midpoint. Ratios above 1/2 or at or below 0 are rejected; the resting
    lower bound is the caller's animation configuration, not known here.
    """
    edge = _require_edge(layout, edge)
    if not 0.0 < ratio <= 0.5:
        raise RangeError(f"stub ratio {ratio} outside (0, 1/2]")
    p_source, p_target = layout.endpoints(edge)
    return StubPair(
        edge=edge,
        ratio=ratio,
        segment_source=(p_source, _lerp(p_source, p_target, ratio)),
        segment_target=(p_target, _lerp(p_target, p_source, ratio)),
    )


def _collinear_overlap(
    a: Point, b: Point, c: Point, d: Point
) -> bool:
    """True if segments ab and cd lie on one line and share more than a point."""
    rx, ry = b[0] - a[0], b[1] - a[1]
    length = math.hypot(rx, ry)
    if length == 0.0:
        return False
    sx, sy = d[0] - c[0], d[1] - c[1]
    if abs(rx * sy - ry * sx) > 1e-9 * length * math.hypot(sx, sy):
        return False
    qx, qy = c[0] - a[0], c[1] - a[1]
    if abs(rx * qy - ry * qx) > 1e-9 * length * max(math.hypot(qx, qy), length):
        return False
    # Same supporting line: compare 1-D extents along ab.
    denom = length * length
    t0 = (qx * rx + qy * ry) / denom
    t1 = t0 + (sx * rx + sy * ry) / denom
    lo, hi = min(t0, t1), max(t0, t1)
    return min(hi, 1.0) - max(lo, 0.0) > 1e-9


def validate_layout(layout: GraphLayout) -> None:
    """Re-check all layout invariants, including the O(m^2) geometric ones."""
    GraphLayout(layout.nodes, layout.edges)  # structural invariants
    segments = [layout.endpoints(edge) for edge in layout.edges]
    for i in range(len(segments)):
        (a, b) = segments[i]
        for j in range(i + 1, len(segments)):
            (c, d) = segments[j]
            if _collinear_overlap(a, b, c, d):
                raise ValidationError(
                    f"edges {layout.edges[i].key} and {layout.edges[j].key} "
                    "are collinear and overlap"
                )


def parse_layout(raw: bytes | str) -> GraphLayout:
    """Parse and fully validate a layout interchange document.

    Format: {"nodes": [{"id", "x", "y", "color"?}], "edges": [{"source",
    "target"}]} with pixel coordinates and optional color roles. Node and edge
    order is preserved, so identical bytes give identical layouts.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"layout is not valid UTF-8: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"layout is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("layout document must be a JSON object")
    for key in ("nodes", "edges"):
        if not isinstance(doc.get(key), list):
            raise ParseError(f"layout needs a {key!r} array")

    nodes = []
    for i, entry in enumerate(doc["nodes"]):
        if not isinstance(entry, dict):
            raise ParseError(f"node #{i} is not an object")
        try:
            node_id = entry["id"]
            x, y = entry["x"], entry["y"]
        except KeyError as exc:
            raise ParseError(f"node #{i} is missing field {exc}") from exc
        if not isinstance(node_id, str):
            raise ParseError(f"node #{i} id must be a string")
        if not isinstance(x, (int, float)) or not isinstance(y, (int, float)):
            raise ParseError(f"node {node_id!r} coordinates must be numbers")
        color = entry.get("color", "plain")
        if color not in COLOR_ROLES:
            raise ParseError(f"node {node_id!r} has unknown color {color!r}")
        nodes.append(NodeSpec(node_id, float(x), float(y), color))

    edges = []
    for i, entry in enumerate(doc["edges"]):
        if not isinstance(entry, dict):
            raise ParseError(f"edge #{i} is not an object")
        try:
            source, target = entry["source"], entry["target"]
        except KeyError as exc:
            raise ParseError(f"edge #{i} is missing field {exc}") from exc
        if not isinstance(source, str) or not isinstance(target, str):
            raise ParseError(f"edge #{i} endpoints must be node id strings")
        edges.append(EdgeSpec(source, target))

    layout = GraphLayout(tuple(nodes), tuple(edges))
    validate_layout(layout)
    return layout


def layout_to_dict(layout: GraphLayout) -> dict:
    """JSON-ready form in the interchange format, preserving order."""
    return {
        "nodes": [
            {"id": n.id, "x": n.x, "y": n.y, "color": n.color_role}
            for n in layout.nodes
        ],
        "edges": [{"source": e.source, "target": e.target} for e in layout.edges],
    }


def layout_to_json(layout: GraphLayout) -> str:
    return json.dumps(layout_to_dict(layout), indent=2)


def with_color_roles(
    layout: GraphLayout, blue: Iterable[str] = (), orange: Iterable[str] = ()
) -> GraphLayout:
    """Copy of the layout with highlight roles applied to the given nodes."""
    blue_set, orange_set = set(blue), set(orange)
    overlap = blue_set & orange_set
    if overlap:
        raise ValidationError(f"nodes {sorted(overlap)} cannot be blue and orange")
    for node_id in blue_set | orange_set:
        layout.node(node_id)  # raises LookupError for unknown ids
    nodes = tuple(
        NodeSpec(
            n.id,
            n.x,
            n.y,
            "blue" if n.id in blue_set else "orange" if n.id in orange_set else "plain",
        )
        for n in layout.nodes
    )
    return GraphLayout(nodes, layout.edges)
