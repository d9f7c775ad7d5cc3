"""Binary automata, pointed binary graphs and transition systems.

Morphisms between these structures are plain node maps, stored as tuples
``f[q] = image of q``; source and target travel alongside them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Mapping, Sequence

from .errors import InputError, PreconditionError
from .forest import graph_morphisms, is_graph_morphism
from .graph import BinaryGraph, NodeId, act, all_graphs, leaves
from .words import LETTERS, Letter, Word, enumerate_words

NodeMap = tuple[NodeId, ...]


@dataclass(frozen=True)
class PointedBinaryGraph:
    graph: BinaryGraph
    base: NodeId

    def __post_init__(self):
        self.graph.check_node(self.base)


@dataclass(frozen=True)
class BinaryAutomaton:
    graph: BinaryGraph
    start: NodeId
    final: frozenset[NodeId] = frozenset()

    def __post_init__(self):
        self.graph.check_node(self.start)
        final = frozenset(self.final)
        for q in final:
            self.graph.check_node(q)
        object.__setattr__(self, "final", final)


def stationary_states(m: BinaryAutomaton) -> frozenset[NodeId]:
    return leaves(m.graph)


def is_admissible(m: BinaryAutomaton) -> bool:
    return m.final == stationary_states(m)


def accepts(m: BinaryAutomaton, w: Word) -> bool:
    return act(m.graph, m.start, w) in m.final


def check_ideal_property(m: BinaryAutomaton, max_len: int) -> bool:
    """Accepted words stay accepted under right extension, up to ``max_len``.

    A single extra letter suffices because final states of an admissible
    automaton are absorbing.
    """
    if not is_admissible(m):
        raise PreconditionError("the ideal property is only claimed for admissible automata")
    for w in enumerate_words(max_len):
        if accepts(m, w) and not all(accepts(m, w + Word(str(a))) for a in LETTERS):
            return False
    return True


def is_pointed_morphism(f: Sequence[NodeId], p: PointedBinaryGraph, p2: PointedBinaryGraph) -> bool:
    return is_graph_morphism(f, p.graph, p2.graph) and f[p.base] == p2.base


def is_automaton_morphism(f: Sequence[NodeId], m: BinaryAutomaton, m2: BinaryAutomaton) -> bool:
    return (
        is_graph_morphism(f, m.graph, m2.graph)
        and f[m.start] == m2.start
        and all(f[q] in m2.final for q in m.final)
    )


def pointed_morphisms(p: PointedBinaryGraph, p2: PointedBinaryGraph) -> Iterator[NodeMap]:
    """Every base-preserving equivariant map, in lexicographic order."""
    return graph_morphisms(p.graph, p2.graph, {p.base: p2.base})


def compose_maps(f: Sequence[NodeId], g: Sequence[NodeId]) -> NodeMap:
    """``f ∘ g``: apply ``g`` first."""
    return tuple(f[x] for x in g)


def identity_map(n: int) -> NodeMap:
    return tuple(range(n))


# -- the forgetful functor and its section ---------------------------------


def project_p(m: BinaryAutomaton) -> PointedBinaryGraph:
    return PointedBinaryGraph(m.graph, m.start)


def project_p_mor(f: Sequence[NodeId]) -> NodeMap:
    """The underlying map of an automaton morphism, as a pointed-graph morphism."""
    return tuple(f)


def section_s(p: PointedBinaryGraph) -> BinaryAutomaton:
    """The admissible automaton whose final states are the leaves."""
    return BinaryAutomaton(p.graph, p.base, leaves(p.graph))


def section_s_mor(f: Sequence[NodeId]) -> NodeMap:
    # Equivariant maps send leaves to leaves, so the same map is an
    # automaton morphism between the sections.
    return tuple(f)


# -- transition systems -----------------------------------------------------


@dataclass(frozen=True)
class TransitionSystem:
    states: frozenset[Hashable]
    initial: Hashable
    labels: frozenset[Hashable]
    tran: frozenset[tuple[Hashable, Hashable, Hashable]]

    def __post_init__(self):
        if self.initial not in self.states:
            raise InputError(f"initial state {self.initial!r} is not a state")
        for s1, a, s2 in self.tran:
            if s1 not in self.states or s2 not in self.states or a not in self.labels:
                raise InputError(f"transition {(s1, a, s2)!r} is outside states x labels x states")


@dataclass(frozen=True)
class TSMorphism:
    """A total state map and a partial label map (missing key: undefined)."""

    sigma: Mapping[Hashable, Hashable]
    lam: Mapping[Hashable, Hashable] = field(default_factory=dict)

    def __hash__(self):
        return hash((tuple(sorted(self.sigma.items())), tuple(sorted(self.lam.items()))))


def to_transition_system(p: PointedBinaryGraph) -> TransitionSystem:
    g = p.graph
    return TransitionSystem(
        frozenset(g.nodes),
        p.base,
        frozenset(LETTERS),
        frozenset((q, a, g.table[q][a]) for q in g.nodes for a in LETTERS),
    )


def ts_morphism_of(f: Sequence[NodeId]) -> TSMorphism:
    """The image ``(f, id)`` of a pointed-graph morphism."""
    return TSMorphism(dict(enumerate(f)), {a: a for a in LETTERS})


def compose_ts(m2: TSMorphism, m1: TSMorphism) -> TSMorphism:
    """``m2 ∘ m1``; the label map is defined where both parts are."""
    sigma = {s: m2.sigma[t] for s, t in m1.sigma.items()}
    lam = {a: m2.lam[b] for a, b in m1.lam.items() if b in m2.lam}
    return TSMorphism(sigma, lam)


def is_ts_morphism(m: TSMorphism, t: TransitionSystem, t2: TransitionSystem) -> bool:
    sigma, lam = m.sigma, m.lam
    if set(sigma) != set(t.states) or not all(s in t2.states for s in sigma.values()):
        return False
    if not set(lam) <= set(t.labels) or not all(b in t2.labels for b in lam.values()):
        return False
    if sigma[t.initial] != t2.initial:
        return False
    for s1, a, s2 in t.tran:
        if a in lam:
            if (sigma[s1], lam[a], sigma[s2]) not in t2.tran:
                return False
        elif sigma[s1] != sigma[s2]:
            return False
    return True


def partial_letter_maps() -> list[dict[Letter, Letter]]:
    """The nine partial maps {0,1} -> {0,1}: undefined first, then 0, then 1."""
    choices = (None, 0, 1)
    return [
        {a: b for a, b in zip(LETTERS, images) if b is not None}
        for images in itertools.product(choices, repeat=2)
    ]


def pointed_graphs_up_to(max_nodes: int) -> Iterator[PointedBinaryGraph]:
    """Every pointed graph with ``1..max_nodes`` nodes: by size, table, base."""
    for n in range(1, max_nodes + 1):
        for g in all_graphs(n):
            for base in g.nodes:
                yield PointedBinaryGraph(g, base)


@dataclass(frozen=True)
class NonFullWitness:
    source: PointedBinaryGraph
    target: PointedBinaryGraph
    morphism: TSMorphism


def find_nonfull_witness(
    max_nodes: int = 2, *, identity_labels_only: bool = False
) -> NonFullWitness | None:
    """Search for a transition-system morphism that no graph morphism induces.

    Scans pointed graph pairs in :func:`pointed_graphs_up_to` order, then
    state maps lexicographically, then :func:`partial_letter_maps`. Returns
    ``None`` when nothing is found within the bound.
    """
    identity = {a: a for a in LETTERS}
    lams = [identity] if identity_labels_only else partial_letter_maps()
    graphs = list(pointed_graphs_up_to(max_nodes))
    for p in graphs:
        t = to_transition_system(p)
        n = p.graph.node_count
        for p2 in graphs:
            t2 = to_transition_system(p2)
            for sigma in itertools.product(range(p2.graph.node_count), repeat=n):
                for lam in lams:
                    m = TSMorphism(dict(enumerate(sigma)), lam)
                    if not is_ts_morphism(m, t, t2):
                        continue
                    if lam == identity and is_pointed_morphism(sigma, p, p2):
                        continue
                    return NonFullWitness(p, p2, m)
    return None
