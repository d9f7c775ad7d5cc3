"""The ``.bg`` text format and DOT export.

A document is line oriented; ``#`` starts a comment::

    nodes: q0 q1 q2 q3
    0:     q1 q3 q2 q3
    1:     q2 q1 q2 q3
    base:  q0
    final: q2 q3

Rows list the child of each declared node under that letter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import BinaryAutomaton, PointedBinaryGraph
from .errors import InputError, ParseError
from .graph import BinaryGraph, NodeId, leaves
from .words import LETTERS

KEYS = ("nodes", "0", "1", "base", "final")


@dataclass(frozen=True)
class GraphDocument:
    names: tuple[str, ...]
    row0: tuple[str, ...]
    row1: tuple[str, ...]
    base: str | None = None
    final: tuple[str, ...] | None = None

    def to_graph(self) -> BinaryGraph:
        index = {name: i for i, name in enumerate(self.names)}
        return BinaryGraph(
            tuple((index[a], index[b]) for a, b in zip(self.row0, self.row1)),
            self.names,
        )

    def to_pointed(self) -> PointedBinaryGraph:
        if self.base is None:
            raise InputError("document has no base node")
        g = self.to_graph()
        return PointedBinaryGraph(g, g.index(self.base))

    def to_automaton(self) -> BinaryAutomaton:
        """Start at the base; without a ``final`` line the leaves are final."""
        p = self.to_pointed()
        final = leaves(p.graph) if self.final is None else frozenset(map(p.graph.index, self.final))
        return BinaryAutomaton(p.graph, p.base, final)

    @classmethod
    def from_graph(
        cls, g: BinaryGraph, base: NodeId | None = None, final: frozenset[NodeId] | None = None
    ) -> GraphDocument:
        names = tuple(g.name(q) for q in g.nodes)
        return cls(
            names,
            tuple(names[g.table[q][0]] for q in g.nodes),
            tuple(names[g.table[q][1]] for q in g.nodes),
            None if base is None else names[base],
            None if final is None else tuple(names[q] for q in sorted(final)),
        )

    @classmethod
    def from_automaton(cls, m: BinaryAutomaton) -> GraphDocument:
        return cls.from_graph(m.graph, m.start, m.final)


def _tokens(text: str, offset: int) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((text[i:j], offset + i + 1))
        i = j
    return out


def parse_graph(text: str) -> GraphDocument:
    """Parse a ``.bg`` document; errors carry the line and column of the culprit."""
    fields: dict[str, tuple[int, list[tuple[str, int]]]] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key_col = len(line) - len(line.lstrip()) + 1
        if ":" not in line:
            raise ParseError("expected 'key: values'", lineno, key_col)
        head, rest = line.split(":", 1)
        key = head.strip()
        if key not in KEYS:
            raise ParseError(f"unknown key {key!r}", lineno, key_col)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", lineno, key_col)
        fields[key] = (lineno, _tokens(rest, len(head) + 1))

    for key in ("nodes", "0", "1"):
        if key not in fields:
            raise ParseError(f"missing key {key!r}", last_line + 1, 1)

    nodes_line, node_tokens = fields["nodes"]
    if not node_tokens:
        raise ParseError("a graph needs at least one node", nodes_line, 1)
    declared: dict[str, int] = {}
    for name, col in node_tokens:
        if name in declared:
            raise ParseError(f"duplicate node name {name!r}", nodes_line, col)
        declared[name] = len(declared)

    def check_names(key: str) -> tuple[str, ...]:
        lineno, toks = fields[key]
        for name, col in toks:
            if name not in declared:
                raise ParseError(f"unknown node name {name!r}", lineno, col)
        return tuple(name for name, _ in toks)

    rows = []
    for key in ("0", "1"):
        lineno, toks = fields[key]
        row = check_names(key)
        if len(row) != len(declared):
            col = toks[len(declared)][1] if len(row) > len(declared) else len(text.splitlines()[lineno - 1]) + 1
            raise ParseError(f"row {key} has {len(row)} entries for {len(declared)} nodes", lineno, col)
        rows.append(row)

    base = None
    if "base" in fields:
        lineno, toks = fields["base"]
        if len(toks) != 1:
            raise ParseError("base takes exactly one node name", lineno, toks[1][1] if toks else 1)
        base = check_names("base")[0]

    final = None
    if "final" in fields:
        lineno, toks = fields["final"]
        final = check_names("final")
        seen = set()
        for name, col in toks:
            if name in seen:
                raise ParseError(f"node {name!r} listed twice as final", lineno, col)
            seen.add(name)

    return GraphDocument(tuple(declared), rows[0], rows[1], base, final)


def serialize_graph(doc: GraphDocument) -> str:
    """Normal form: fixed key order, single spaces, values after a 7-column key."""

    def line(key: str, values) -> str:
        return (f"{key + ':':<7}" + " ".join(values)).rstrip()

    lines = [line("nodes", doc.names), line("0", doc.row0), line("1", doc.row1)]
    if doc.base is not None:
        lines.append(line("base", [doc.base]))
    if doc.final is not None:
        lines.append(line("final", doc.final))
    return "\n".join(lines) + "\n"


def load_graph(path) -> GraphDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_edges(g: BinaryGraph) -> list[tuple[NodeId, NodeId, int]]:
    """``(q, δ(q,a), a)`` for every letter that moves ``q``, in index order."""
    return [(q, g.table[q][a], a) for q in g.nodes for a in LETTERS if g.table[q][a] != q]


def export_dot(g: BinaryGraph, names: list[str] | None = None) -> str:
    label = names if names is not None else [g.name(q) for q in g.nodes]
    out = ["digraph G {", "  node [shape=circle];"]
    out += [f"  {_dot_id(label[q])};" for q in g.nodes]
    out += [f'  {_dot_id(label[q])} -> {_dot_id(label[t])} [label="{a}"];' for q, t, a in dot_edges(g)]
    out.append("}")
    return "\n".join(out) + "\n"
