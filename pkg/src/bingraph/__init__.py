"""Binary graphs, binary forests and binary automata.

A binary graph is a finite set of nodes with two child maps, one per
letter of ``{0, 1}``; words act on nodes by following children.
"""

from .automata import (
    BinaryAutomaton,
    PointedBinaryGraph,
    TransitionSystem,
    TSMorphism,
    find_nonfull_witness,
    is_admissible,
    is_automaton_morphism,
    is_pointed_morphism,
    is_ts_morphism,
    project_p,
    section_s,
    to_transition_system,
)
from .category import CategoryOver, Cleavage, FiniteCategory, FunctorRep, is_cartesian, is_fibred, is_splitting
from .errors import (
    AmbiguousRootError,
    BinGraphError,
    InputError,
    NoPathError,
    NotConnectedError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)
from .fibration import AutomataOver, BaseDiagram, auto_diagram, canonical_cleavage, verify_theorem
from .formats import GraphDocument, export_dot, parse_graph, serialize_graph
from .forest import connected_components, is_forest, is_tree, maximal_nodes, maximum_nodes, root, unique_path
from .graph import (
    BinaryGraph,
    IsotropyClass,
    Path,
    act,
    check_prop_partial_order,
    contract,
    is_acyclic,
    isotropy_class,
    leaves,
    orbit,
    validate_path,
)
from .words import Word

__all__ = [name for name in dir() if not name.startswith("_")]
