"""
Task trials and answer scoring
==============================

Five reading tasks can be asked about any layout, from "are these two nodes
adjacent" to "how many edges join these two regions". Trials pick highlighted
nodes under a seed, store the correct answer, and user answers are scored:
booleans right or wrong, counts by how far off they are.
"""

from pathlib import Path

from edgemorph import (
    bounded_path_exists,
    common_neighbors,
    make_trial,
    parse_layout,
    score_answer,
    trial_to_json,
)

sample = parse_layout(
    (Path(__file__).resolve().parent.parent / "data" / "sample_dense_40.json").read_bytes()
)

# Direct queries.
ids = [n.id for n in sample.nodes]
a, b = ids[0], ids[7]
print(f"common neighbors of {a} and {b}: {common_neighbors(sample, a, b)}")
print(f"path of at most 2 edges from {a} to {b}: {bounded_path_exists(sample, a, b, 2)}")

# Seeded trials are reproducible documents with the truth embedded.
for task in ("T1", "T2", "T3", "T4", "T5"):
    trial = make_trial(sample, task, rng_seed=2024)
    print(f"{task}: ground truth {trial.ground_truth!r}")
print()
print("a full trial document:")
print(trial_to_json(make_trial(sample, "T3", rng_seed=2024)))

# Counting errors grow smoothly with the distance from the truth.
print("answer off by 0/1/2/5:", [
    score_answer("T2", 10 + off, 10) for off in (0, 1, 2, 5)
])
