"""The four worked example graphs, as transition tables."""

from __future__ import annotations

from .graph import BinaryGraph


def _named(row0, row1) -> BinaryGraph:
    return BinaryGraph.from_rows(row0, row1, names=[f"q{i}" for i in range(len(row0))])


# Letter 0 sends every node to q0 and letter 1 to q1: no leaves, a cycle.
G1 = _named([0, 0], [1, 1])
# Acyclic, but q4 has two parents.
G2 = _named([1, 3, 4, 3, 4, 6, 6], [2, 4, 5, 3, 4, 5, 6])
# A forest with two trees, rooted at q0 and q5.
G3 = _named([1, 3, 2, 3, 4, 6, 6, 7], [2, 4, 2, 3, 4, 7, 6, 7])
# A tree rooted at q0.
G4 = _named([1, 3, 2, 3], [2, 1, 2, 3])

SAMPLES = {"G1": G1, "G2": G2, "G3": G3, "G4": G4}
