"""Forests, trees, components and subgraphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Collection, Iterator, Mapping, Sequence

from .errors import (
    AmbiguousRootError,
    InputError,
    NoPathError,
    NotConnectedError,
    PreconditionError,
)
from .graph import BinaryGraph, NodeId, Path, act, is_acyclic, parents
from .words import LETTERS, Letter, Word


def multi_parent_nodes(g: BinaryGraph) -> list[NodeId]:
    """Nodes with two or more parent edges, ascending."""
    return [q for q in g.nodes if len(parents(g, q)) > 1]


def single_parent_condition(g: BinaryGraph) -> bool:
    return not multi_parent_nodes(g)


def is_forest(g: BinaryGraph) -> bool:
    return is_acyclic(g) and single_parent_condition(g)


def is_connected(g: BinaryGraph) -> bool:
    return bool(maximum_nodes(g))


def is_tree(g: BinaryGraph) -> bool:
    return is_forest(g) and is_connected(g)


def is_path_suffix(g: BinaryGraph, p: Path, p2: Path) -> bool:
    """True iff ``p2.word = v + p.word`` with ``p2.start·v = p.start``."""
    w, w2 = p.word.bits, p2.word.bits
    if not w2.endswith(w):
        return False
    v = Word(w2[: len(w2) - len(w)])
    return act(g, p2.start, v) == p.start


def enumerate_paths(g: BinaryGraph, start: NodeId, max_len: int) -> Iterator[Word]:
    """Words of every path from ``start`` with length ``<= max_len``, breadth first."""
    g.check_node(start)
    queue = deque([(start, "")])
    while queue:
        q, bits = queue.popleft()
        yield Word(bits)
        if len(bits) == max_len:
            continue
        for a in LETTERS:
            child = g.table[q][a]
            if child != q:
                queue.append((child, bits + str(a)))


def unique_path(g: BinaryGraph, q: NodeId, q2: NodeId) -> Word:
    """The word of the only path from ``q`` down to ``q2`` in a forest.

    Every path is enumerated; finding more than one raises, so this doubles
    as a check of path uniqueness.
    """
    if not is_forest(g):
        raise PreconditionError("unique paths are only defined in a binary forest")
    g.check_node(q2)
    # Nodes along a path in an acyclic graph are distinct.
    found = [w for w in enumerate_paths(g, q, g.node_count - 1) if act(g, q, w) == q2]
    if not found:
        raise NoPathError(f"{g.name(q2)} is not a descendant of {g.name(q)}")
    if len(found) > 1:
        raise AssertionError(f"several paths from {g.name(q)} to {g.name(q2)}: {found}")
    return found[0]


def maximal_nodes(g: BinaryGraph) -> list[NodeId]:
    """Nodes ``q`` such that ``q <= x`` forces ``x = q``."""
    orbits = g.orbits
    return [q for q in g.nodes if not any(x != q and q in orbits[x] for x in g.nodes)]


def maximum_nodes(g: BinaryGraph) -> list[NodeId]:
    """Nodes above every node."""
    return [q for q in g.nodes if len(g.orbits[q]) == g.node_count]


@dataclass(frozen=True)
class Component:
    top: NodeId
    members: tuple[NodeId, ...]


def connected_components(g: BinaryGraph) -> list[Component]:
    """One component per maximal node: its orbit, sorted by top."""
    return [Component(q, tuple(sorted(g.orbits[q]))) for q in maximal_nodes(g)]


def root(g: BinaryGraph) -> NodeId:
    tops = maximum_nodes(g)
    if not tops:
        raise NotConnectedError("graph is not connected: no node is above every node")
    if len(tops) > 1:
        raise AmbiguousRootError(tops)
    return tops[0]


# -- subgraphs --------------------------------------------------------------


def escaping_pair(g: BinaryGraph, subset: Collection[NodeId]) -> tuple[NodeId, Letter] | None:
    members = set(subset)
    for q in sorted(members):
        g.check_node(q)
        for a in LETTERS:
            if g.table[q][a] not in members:
                return (q, a)
    return None


def is_invariant_subset(g: BinaryGraph, subset: Collection[NodeId]) -> bool:
    return escaping_pair(g, subset) is None


def induced_subgraph(g: BinaryGraph, subset: Collection[NodeId]) -> BinaryGraph:
    """Restrict the table to an invariant subset.

    Node ``i`` of the result is the ``i``-th smallest member of ``subset``;
    :func:`inclusion_map` gives that correspondence.
    """
    escape = escaping_pair(g, subset)
    if escape is not None:
        q, a = escape
        raise InputError(
            f"subset is not invariant: delta({g.name(q)}, {a}) = {g.name(g.table[q][a])} escapes"
        )
    members = inclusion_map(subset)
    local = {q: i for i, q in enumerate(members)}
    return BinaryGraph(
        tuple((local[g.table[q][0]], local[g.table[q][1]]) for q in members),
        tuple(g.name(q) for q in members),
    )


def inclusion_map(subset: Collection[NodeId]) -> tuple[NodeId, ...]:
    return tuple(sorted(set(subset)))


@dataclass(frozen=True)
class Subgraph:
    members: frozenset[NodeId]
    graph: BinaryGraph
    top: NodeId


def _child_subgraph(g: BinaryGraph, q0: NodeId, a: Letter) -> Subgraph:
    g.check_node(q0)
    child = g.table[q0][a]
    members = g.orbits[child]
    return Subgraph(members, induced_subgraph(g, members), child)


def left_subgraph(g: BinaryGraph, q0: NodeId) -> Subgraph:
    """Everything reachable from ``q0`` by a word starting with ``0``."""
    return _child_subgraph(g, q0, 0)


def right_subgraph(g: BinaryGraph, q0: NodeId) -> Subgraph:
    return _child_subgraph(g, q0, 1)


def subtrees_disjoint(g: BinaryGraph, q0: NodeId) -> bool:
    return not (left_subgraph(g, q0).members & right_subgraph(g, q0).members)


# -- morphisms --------------------------------------------------------------


def is_graph_morphism(f: Sequence[NodeId], g: BinaryGraph, g2: BinaryGraph) -> bool:
    """One-step equivariance ``f(δ(q,a)) = δ'(f(q),a)`` for all ``q, a``."""
    if len(f) != g.node_count or not all(0 <= t < g2.node_count for t in f):
        return False
    t2 = g2.table
    return all(f[g.table[q][a]] == t2[f[q]][a] for q in g.nodes for a in LETTERS)


def graph_morphisms(
    g: BinaryGraph, g2: BinaryGraph, pinned: Mapping[NodeId, NodeId] | None = None
) -> Iterator[tuple[NodeId, ...]]:
    """All equivariant node maps ``g -> g2`` agreeing with ``pinned``.

    Assigning a node forces its whole orbit, so the search only branches on
    nodes not yet reached. Results come out in lexicographic order.
    """
    n, table, table2 = g.node_count, g.table, g2.table
    f = [-1] * n

    def assign(q: NodeId, t: NodeId, trail: list[NodeId]) -> bool:
        stack = [(q, t)]
        while stack:
            x, y = stack.pop()
            if f[x] == -1:
                f[x] = y
                trail.append(x)
                stack.append((table[x][0], table2[y][0]))
                stack.append((table[x][1], table2[y][1]))
            elif f[x] != y:
                return False
        return True

    def undo(trail):
        for x in trail:
            f[x] = -1

    base_trail: list[NodeId] = []
    for q, t in sorted((pinned or {}).items()):
        if not assign(q, t, base_trail):
            return

    def search(q: NodeId) -> Iterator[tuple[NodeId, ...]]:
        while q < n and f[q] != -1:
            q += 1
        if q == n:
            yield tuple(f)
            return
        for t in range(g2.node_count):
            trail: list[NodeId] = []
            if assign(q, t, trail):
                yield from search(q + 1)
            undo(trail)

    yield from search(0)
