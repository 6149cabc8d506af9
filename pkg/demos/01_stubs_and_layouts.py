"""
Layouts and stub geometry
=========================

A drawing is an embedded graph: nodes with fixed pixel positions and
undirected edges. Each edge is shown as two symmetric stubs whose length is a
ratio of the edge length; at ratio 1/2 the stubs meet at the midpoint.
"""

import json

from edgemorph import ValidationError, edge_length, parse_layout, stub_pair

document = json.dumps(
    {
        "nodes": [
            {"id": "left", "x": 0, "y": 0},
            {"id": "right", "x": 100, "y": 0},
            {"id": "top", "x": 50, "y": -80, "color": "blue"},
        ],
        "edges": [
            {"source": "left", "target": "right"},
            {"source": "left", "target": "top"},
        ],
    }
)

layout = parse_layout(document)
print(f"parsed {len(layout.nodes)} nodes, {len(layout.edges)} edges")
print(f"left-right measures {edge_length(layout, ('left', 'right')):.1f} px")
print(f"left-top measures {edge_length(layout, ('left', 'top')):.3f} px")

# Stubs at a quarter of the edge length, then at the meeting point.
for ratio in (0.25, 0.5):
    pair = stub_pair(layout, ("left", "right"), ratio)
    print(f"ratio {ratio}: {pair.segment_source} and {pair.segment_target}")

# Validation rejects inputs the stub model cannot represent.
bad = json.dumps(
    {
        "nodes": [{"id": "a", "x": 0, "y": 0}],
        "edges": [{"source": "a", "target": "a"}],
    }
)
try:
    parse_layout(bad)
except ValidationError as exc:
    print(f"rejected: {exc}")
