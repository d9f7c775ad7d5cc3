"""Binary graphs: finite transition tables over the alphabet {0, 1}.

A :class:`BinaryGraph` is the table ``q -> (left child, right child)``.
Nodes are the dense indices ``0..n-1``; display names are optional and
never take part in equality.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from .words import EMPTY, LETTERS, Letter, Word, enumerate_words, is_subword_closed

NodeId = int


@dataclass(frozen=True)
class BinaryGraph:
    table: tuple[tuple[NodeId, NodeId], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple((int(c0), int(c1)) for c0, c1 in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise InputError("a binary graph needs at least one node")
        for q, row in enumerate(table):
            for a, child in zip(LETTERS, row):
                if not 0 <= child < n:
                    raise InputError(f"delta({q}, {a}) = {child} is not a node")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n:
                raise InputError(f"{len(names)} names for {n} nodes")
            if len(set(names)) != n:
                raise InputError("node names must be unique")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_rows(
        cls,
        row0: Sequence[NodeId],
        row1: Sequence[NodeId],
        names: Sequence[str] | None = None,
    ) -> BinaryGraph:
        """Build from the two rows of a table indexed by letters, then nodes."""
        if len(row0) != len(row1):
            raise InputError("rows must have equal length")
        return cls(tuple(zip(row0, row1)), None if names is None else tuple(names))

    @property
    def node_count(self) -> int:
        return len(self.table)

    @property
    def nodes(self) -> range:
        return range(len(self.table))

    def delta(self, q: NodeId, a: Letter) -> NodeId:
        return self.table[q][a]

    def name(self, q: NodeId) -> str:
        return self.names[q] if self.names is not None else f"q{q}"

    def index(self, name: str) -> NodeId:
        """Resolve a display name (or ``qN`` when unnamed) to an index."""
        if self.names is not None:
            try:
                return self.names.index(name)
            except ValueError:
                raise InputError(f"unknown node {name!r}") from None
        if name.startswith("q") and name[1:].isdigit() and int(name[1:]) < self.node_count:
            return int(name[1:])
        raise InputError(f"unknown node {name!r}")

    def check_node(self, q: NodeId) -> NodeId:
        if not isinstance(q, int) or not 0 <= q < len(self.table):
            raise InputError(f"invalid node index {q!r} for a graph with {len(self.table)} nodes")
        return q

    @cached_property
    def orbits(self) -> tuple[frozenset[NodeId], ...]:
        return tuple(_closure(self.table, [q]) for q in self.nodes)


def _closure(table, seeds: Iterable[NodeId]) -> frozenset[NodeId]:
    seen = set(seeds)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for child in table[q]:
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return frozenset(seen)


@dataclass(frozen=True)
class Path:
    start: NodeId
    word: Word = EMPTY


def act(g: BinaryGraph, q: NodeId, w: Word) -> NodeId:
    """The right action of words on nodes: ``q·ε = q``, ``q·(aw) = δ(q,a)·w``."""
    g.check_node(q)
    table = g.table
    for c in w.bits:
        q = table[q][c == "1"]
    return q


def trajectory(g: BinaryGraph, q: NodeId, w: Word) -> list[NodeId]:
    """The nodes ``q, q·a1, q·a1a2, ...`` visited while reading ``w``."""
    g.check_node(q)
    out = [q]
    for c in w.bits:
        q = g.table[q][c == "1"]
        out.append(q)
    return out


def is_leaf(g: BinaryGraph, q: NodeId) -> bool:
    g.check_node(q)
    return g.table[q] == (q, q)


def leaves(g: BinaryGraph) -> frozenset[NodeId]:
    return frozenset(q for q in g.nodes if g.table[q] == (q, q))


def internal_nodes(g: BinaryGraph) -> frozenset[NodeId]:
    return frozenset(g.nodes) - leaves(g)


def parents(g: BinaryGraph, target: NodeId) -> frozenset[tuple[NodeId, Letter]]:
    g.check_node(target)
    return frozenset(
        (q, a) for q in g.nodes for a in LETTERS if q != target and g.table[q][a] == target
    )


def validate_path(g: BinaryGraph, start: NodeId, w: Word) -> bool:
    nodes = trajectory(g, start, w)
    return all(x != y for x, y in zip(nodes, nodes[1:]))


def path_end(g: BinaryGraph, p: Path) -> NodeId:
    return act(g, p.start, p.word)


def contract(g: BinaryGraph, q0: NodeId, w: Word) -> Word:
    """Drop the letters of ``w`` that do not move the current node.

    ``(q0, contract(g, q0, w))`` is a path from ``q0`` to ``q0·w``.
    """
    nodes = trajectory(g, q0, w)
    return Word("".join(c for c, x, y in zip(w.bits, nodes, nodes[1:]) if x != y))


def orbit(g: BinaryGraph, q: NodeId) -> frozenset[NodeId]:
    g.check_node(q)
    return g.orbits[q]


def is_ancestor(g: BinaryGraph, q: NodeId, q2: NodeId) -> bool:
    """True iff some path leads from ``q`` to ``q2``."""
    g.check_node(q2)
    return q2 in orbit(g, q)


def leq(g: BinaryGraph, q2: NodeId, q: NodeId) -> bool:
    """The inheritance preorder: ``q2 <= q`` iff ``q`` is an ancestor of ``q2``."""
    return is_ancestor(g, q, q2)


def is_acyclic(g: BinaryGraph) -> bool:
    """No directed cycle among parent edges ``q -> δ(q,a)``, ``δ(q,a) != q``."""
    white, grey, black = 0, 1, 2
    colour = [white] * g.node_count
    for root in g.nodes:
        if colour[root] != white:
            continue
        colour[root] = grey
        stack = [(root, iter(g.table[root]))]
        while stack:
            q, children = stack[-1]
            for child in children:
                if child == q:
                    continue
                if colour[child] == grey:
                    return False
                if colour[child] == white:
                    colour[child] = grey
                    stack.append((child, iter(g.table[child])))
                    break
            else:
                colour[q] = black
                stack.pop()
    return True


# -- isotropy ---------------------------------------------------------------


@dataclass(frozen=True)
class IsotropyLanguage:
    """The words fixing ``node``: the acceptor started at ``node`` accepting ``{node}``."""

    graph: BinaryGraph
    node: NodeId

    def __contains__(self, w: Word) -> bool:
        return act(self.graph, self.node, w) == self.node


def isotropy_contains(lang: IsotropyLanguage, w: Word) -> bool:
    return w in lang


class IsotropyClass(enum.Enum):
    FULL = "full"  # every word: the node is a leaf
    EMPTY = "empty-word"  # only the empty word
    ZERO_STAR = "0*"
    ONE_STAR = "1*"
    OTHER = "other"


# Reference acceptors: (table, start, accepting); state 1 is a rejecting sink.
_REFERENCE = {
    IsotropyClass.EMPTY: (((1, 1), (1, 1)), 0, frozenset({0})),
    IsotropyClass.ZERO_STAR: (((0, 1), (1, 1)), 0, frozenset({0})),
    IsotropyClass.ONE_STAR: (((1, 0), (1, 1)), 0, frozenset({0})),
}


def _product_search(t1, s1, t2, s2, bad) -> bool:
    """Scan reachable state pairs of two acceptors; True iff ``bad`` never fires."""
    seen = {(s1, s2)}
    queue = deque(seen)
    while queue:
        x, y = queue.popleft()
        if bad(x, y):
            return False
        for a in LETTERS:
            pair = (t1[x][a], t2[y][a])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def equivalent_acceptors(t1, s1, acc1, t2, s2, acc2) -> bool:
    return _product_search(t1, s1, t2, s2, lambda x, y: (x in acc1) != (y in acc2))


def isotropy_class(g: BinaryGraph, q: NodeId) -> IsotropyClass:
    if is_leaf(g, q):
        return IsotropyClass.FULL
    accept = frozenset({q})
    for cls, (table, start, acc) in _REFERENCE.items():
        if equivalent_acceptors(g.table, q, accept, table, start, acc):
            return cls
    return IsotropyClass.OTHER


def isotropy_prefix_closed(g: BinaryGraph, q: NodeId) -> bool:
    """Exact test that the words fixing ``q`` are closed under prefixes.

    A fixing word has a prefix moving ``q`` exactly when some other node
    ``r`` is reachable from ``q`` and reaches ``q`` back.
    """
    orbits = g.orbits
    return not any(r != q and q in orbits[r] for r in orbits[q])


def isotropy_suffix_closed(g: BinaryGraph, q: NodeId) -> bool:
    """Exact test that the words fixing ``q`` are closed under suffixes.

    For each ``r = q·v`` every ``z`` with ``r·z = q`` must also fix ``q``;
    that is a language inclusion, decided on the product acceptor.
    """
    table = g.table
    return all(
        _product_search(table, r, table, q, lambda x, y: x == q and y != q)
        for r in g.orbits[q]
    )


def isotropy_words(g: BinaryGraph, q: NodeId, max_len: int) -> set[Word]:
    """Brute force: every word of length ``<= max_len`` fixing ``q``."""
    return {w for w in enumerate_words(max_len) if act(g, q, w) == q}


@dataclass(frozen=True)
class PartialOrderReport:
    """Five independently computed conditions that must all agree."""

    antisymmetric: bool
    prefix_closed: bool
    subword_closed: bool
    restricted_isotropy: bool
    acyclic: bool
    # The exact subword test agreed with enumeration of short fixing words.
    cross_checked: bool = True

    def values(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.antisymmetric,
            self.prefix_closed,
            self.subword_closed,
            self.restricted_isotropy,
            self.acyclic,
        )

    @property
    def consistent(self) -> bool:
        return self.cross_checked and len(set(self.values())) == 1


def check_prop_partial_order(g: BinaryGraph, *, cross_check: bool | None = None) -> PartialOrderReport:
    """Compute the five conditions independently.

    ``cross_check`` also enumerates every word of length ``<= 2n`` to confirm
    the exact subword test; by default only for graphs of at most 5 nodes.
    """
    orbits = g.orbits
    antisymmetric = not any(
        q != r and r in orbits[q] and q in orbits[r] for q in g.nodes for r in g.nodes
    )
    prefix_closed = all(isotropy_prefix_closed(g, q) for q in g.nodes)
    subword_closed = prefix_closed and all(isotropy_suffix_closed(g, q) for q in g.nodes)
    restricted = all(
        isotropy_class(g, q)
        in (IsotropyClass.EMPTY, IsotropyClass.ZERO_STAR, IsotropyClass.ONE_STAR)
        for q in internal_nodes(g)
    )
    cross_checked = True
    if cross_check or (cross_check is None and g.node_count <= 5):
        # Prefix witnesses, when they exist, are no longer than 2n - 2.
        bound = 2 * g.node_count
        bounded = all(is_subword_closed(isotropy_words(g, q, bound)) for q in g.nodes)
        cross_checked = bounded == subword_closed
    return PartialOrderReport(
        antisymmetric, prefix_closed, subword_closed, restricted, is_acyclic(g), cross_checked
    )


# -- enumeration ------------------------------------------------------------


def all_graphs(n: int) -> Iterator[BinaryGraph]:
    """Every labelled binary graph on ``n`` nodes, ``n**(2n)`` in all.

    Order: lexicographic in ``(δ(0,0), δ(0,1), δ(1,0), ...)``.
    """
    for flat in itertools.product(range(n), repeat=2 * n):
        yield BinaryGraph(tuple(zip(flat[0::2], flat[1::2])))


def graphs_up_to(max_nodes: int) -> Iterator[BinaryGraph]:
    for n in range(1, max_nodes + 1):
        yield from all_graphs(n)


def random_graph(rng: random.Random, n: int) -> BinaryGraph:
    return BinaryGraph(tuple((rng.randrange(n), rng.randrange(n)) for _ in range(n)))


def random_word(rng: random.Random, max_len: int) -> Word:
    return Word("".join(rng.choice("01") for _ in range(rng.randint(0, max_len))))
