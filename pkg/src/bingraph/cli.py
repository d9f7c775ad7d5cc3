"""Command-line interface: ``bingraph <command> ...``.

Exit status is 0 on success, 1 when a check fails, 2 on bad input.
Errors go to stderr as ``ERROR: ...`` lines.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .automata import accepts, find_nonfull_witness, is_admissible, stationary_states, to_transition_system
from .errors import BinGraphError, InputError
from .fibration import MAX_TOTAL_OBJECTS, AutomataOver, BaseDiagram, auto_diagram, verify_theorem
from .formats import export_dot, load_graph
from .forest import (
    connected_components,
    is_connected,
    is_forest,
    is_tree,
    maximal_nodes,
    maximum_nodes,
    multi_parent_nodes,
    unique_path,
)
from .graph import BinaryGraph, act, check_prop_partial_order, contract, is_acyclic, leaves, orbit
from .suites import all_suites
from .words import Word


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _names(g: BinaryGraph, nodes) -> str:
    return " ".join(g.name(q) for q in sorted(nodes))


def classify_lines(g: BinaryGraph) -> list[str]:
    acyclic = is_acyclic(g)
    forest = is_forest(g)
    connected = is_connected(g)
    tree = is_tree(g)
    tops = maximum_nodes(g)
    if tree:
        summary = f"tree, root {g.name(tops[0])}"
    elif forest:
        summary = f"forest with {len(connected_components(g))} trees"
    elif acyclic:
        summary = "acyclic graph, not a forest"
    else:
        summary = "graph with a cycle"
    if forest:
        forest_line = "yes"
    elif not acyclic:
        forest_line = "no (not acyclic)"
    else:
        forest_line = f"no (single-parent violated at {_names(g, multi_parent_nodes(g))})"
    rep = check_prop_partial_order(g)
    if not tops:
        root = "none (not connected)"
    elif len(tops) > 1:
        root = f"ambiguous ({_names(g, tops)})"
    else:
        root = g.name(tops[0])
    comps = "; ".join(f"{g.name(c.top)}: {_names(g, c.members)}" for c in connected_components(g))
    return [
        f"summary: {summary}",
        f"acyclic: {_yn(acyclic)}",
        f"forest: {forest_line}",
        f"tree: {_yn(tree)}",
        f"connected: {_yn(connected)}",
        f"preorder antisymmetric: {_yn(rep.antisymmetric)}",
        f"isotropy prefix-closed: {_yn(rep.prefix_closed)}",
        f"isotropy subword-closed: {_yn(rep.subword_closed)}",
        f"isotropy restricted: {_yn(rep.restricted_isotropy)}",
        f"parent edges acyclic: {_yn(rep.acyclic)}",
        f"leaves: {_names(g, leaves(g))}".rstrip(),
        f"maximal: {_names(g, maximal_nodes(g))}".rstrip(),
        f"maximum: {_names(g, tops)}".rstrip(),
        f"components: {comps}".rstrip(),
        f"root: {root}",
    ]


def _graph(path: str) -> BinaryGraph:
    return load_graph(path).to_graph()


def cmd_classify(args) -> int:
    print("\n".join(classify_lines(_graph(args.file))))
    return 0


def cmd_act(args) -> int:
    g = _graph(args.file)
    print(g.name(act(g, g.index(args.node), Word.parse(args.word))))
    return 0


def cmd_contract(args) -> int:
    g = _graph(args.file)
    q, w = g.index(args.node), Word.parse(args.word)
    c = contract(g, q, w)
    print(f"path: {c}")
    print(f"end: {g.name(act(g, q, c))}")
    return 0


def cmd_path(args) -> int:
    g = _graph(args.file)
    print(unique_path(g, g.index(args.source), g.index(args.target)))
    return 0


def cmd_orbit(args) -> int:
    g = _graph(args.file)
    print(_names(g, orbit(g, g.index(args.node))))
    return 0


def cmd_dot(args) -> int:
    sys.stdout.write(export_dot(_graph(args.file)))
    return 0


def cmd_automaton(args) -> int:
    m = load_graph(args.file).to_automaton()
    g = m.graph
    print(f"start: {g.name(m.start)}")
    print(f"final: {_names(g, m.final)}".rstrip())
    print(f"stationary: {_names(g, stationary_states(m))}".rstrip())
    print(f"admissible: {_yn(is_admissible(m))}")
    if args.accept is not None:
        print(f"accepts {args.accept}: {_yn(accepts(m, Word.parse(args.accept)))}")
    return 0


def cmd_ts(args) -> int:
    if args.nonfull_witness:
        w = find_nonfull_witness(args.max_nodes)
        if w is None:
            print(f"no witness with at most {args.max_nodes} nodes")
            return 1
        for label, p in (("source", w.source), ("target", w.target)):
            g = p.graph
            rows = " ".join(f"{g.name(q)}->{g.name(g.table[q][0])},{g.name(g.table[q][1])}" for q in g.nodes)
            print(f"{label}: {rows} base {g.name(p.base)}")
        src, tgt = w.source.graph, w.target.graph
        print("states: " + " ".join(f"{src.name(s)}->{tgt.name(t)}" for s, t in sorted(w.morphism.sigma.items())))
        lam = " ".join(f"{a}->{b}" for a, b in sorted(w.morphism.lam.items()))
        print(f"labels: {lam or 'undefined everywhere'}")
        return 0
    if args.file is None:
        raise InputError("ts needs a FILE unless --nonfull-witness is given")
    p = load_graph(args.file).to_pointed()
    t = to_transition_system(p)
    g = p.graph
    print(f"states: {_names(g, t.states)}")
    print(f"initial: {g.name(t.initial)}")
    print("labels: " + " ".join(str(a) for a in sorted(t.labels)))
    for s1, a, s2 in sorted(t.tran):
        print(f"{g.name(s1)} --{a}--> {g.name(s2)}")
    return 0


def cmd_fibred_verify(args) -> int:
    if args.files:
        diagram = BaseDiagram.full([load_graph(f).to_pointed() for f in args.files])
        what = f"diagram of {len(args.files)} files"
    else:
        diagram = auto_diagram(args.max_nodes, allow_large=args.allow_large)
        what = f"all pointed graphs with at most {args.max_nodes} nodes"
    c = AutomataOver(diagram, allow_large=args.allow_large)
    report = verify_theorem(c)
    print(what)
    print("\n".join(report.lines()))
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_props(args) -> int:
    ok = True
    for r in all_suites(args.max_nodes, args.seed):
        print(r.line())
        for f in r.failures:
            print(f"  counterexample: {f}")
        for n in r.notes:
            print(f"  note: {n}")
        ok &= r.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bingraph", description="Binary graphs, forests and automata.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structural summary of a graph")
    p.add_argument("file")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("act", help="node reached from NODE by WORD")
    p.add_argument("file")
    p.add_argument("node")
    p.add_argument("word", help="bit string; 'e' for the empty word")
    p.set_defaults(run=cmd_act)

    p = sub.add_parser("contract", help="drop the letters of WORD that do not move the node")
    p.add_argument("file")
    p.add_argument("node")
    p.add_argument("word")
    p.set_defaults(run=cmd_contract)

    p = sub.add_parser("path", help="the unique path between two nodes of a forest")
    p.add_argument("file")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(run=cmd_path)

    p = sub.add_parser("orbit", help="nodes reachable from NODE")
    p.add_argument("file")
    p.add_argument("node")
    p.set_defaults(run=cmd_orbit)

    p = sub.add_parser("dot", help="Graphviz transition diagram")
    p.add_argument("file")
    p.set_defaults(run=cmd_dot)

    p = sub.add_parser("automaton", help="automaton given by base and final lines")
    p.add_argument("file")
    p.add_argument("--accept", metavar="WORD")
    p.set_defaults(run=cmd_automaton)

    p = sub.add_parser("ts", help="transition system of a pointed graph")
    p.add_argument("file", nargs="?")
    p.add_argument("--nonfull-witness", action="store_true", help="search for a morphism no graph morphism induces")
    p.add_argument("--max-nodes", type=int, default=2)
    p.set_defaults(run=cmd_ts)

    p = sub.add_parser("fibred", help="fibration checks")
    fsub = p.add_subparsers(dest="action", required=True)
    v = fsub.add_parser("verify", help="check the automata category over a finite diagram")
    group = v.add_mutually_exclusive_group()
    group.add_argument("--max-nodes", type=int, default=2)
    group.add_argument("--files", nargs="+", metavar="FILE")
    v.add_argument(
        "--allow-large", action="store_true", help=f"build even with more than {MAX_TOTAL_OBJECTS} automata"
    )
    v.set_defaults(run=cmd_fibred_verify)

    p = sub.add_parser("props", help="run every proposition suite")
    p.add_argument("--max-nodes", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_props)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except InputError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 2
    except BinGraphError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
