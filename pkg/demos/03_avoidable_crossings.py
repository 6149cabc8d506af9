"""
Avoidable crossings
===================

A crossing is avoidable when, on both edges, the intersection lies strictly
farther than the resting stub ratio from the nearer endpoint: the resting
drawing hides it, and scheduling decides whether the stubs ever meet there.
Crossings inside the resting stubs are permanent and not schedulable away.
"""

from pathlib import Path

from edgemorph import EdgeSpec, GraphLayout, NodeSpec, find_avoidable_crossings, parse_layout

# Complete graph on a square: the two diagonals cross at the center, the four
# boundary edges only touch at shared nodes.
corners = (
    NodeSpec("p", 0.0, 0.0),
    NodeSpec("q", 100.0, 0.0),
    NodeSpec("r", 100.0, 100.0),
    NodeSpec("s", 0.0, 100.0),
)
pairs = (("p", "q"), ("q", "r"), ("r", "s"), ("p", "s"), ("p", "r"), ("q", "s"))
k4 = GraphLayout(corners, tuple(EdgeSpec(a, b) for a, b in pairs))

for crossing in find_avoidable_crossings(k4, 0.25):
    print(
        f"{crossing.edge_a.key} x {crossing.edge_b.key} at "
        f"({crossing.point[0]:.0f}, {crossing.point[1]:.0f}), "
        f"ratios {crossing.ratio_a:.2f}/{crossing.ratio_b:.2f}"
    )

# A lower resting ratio exposes more of each edge, so more crossings become
# avoidable; a higher one hides them at rest.
sample = parse_layout(
    (Path(__file__).resolve().parent.parent / "data" / "sample_dense_40.json").read_bytes()
)
for delta0 in (0.15, 0.25, 0.35):
    count = len(find_avoidable_crossings(sample, delta0))
    print(f"40-node sample, resting ratio {delta0}: {count} avoidable crossings")
