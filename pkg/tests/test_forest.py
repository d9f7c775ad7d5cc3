import itertools

import pytest

from bingraph.errors import AmbiguousRootError, InputError, NoPathError, NotConnectedError, PreconditionError
from bingraph.forest import (
    Component,
    connected_components,
    enumerate_paths,
    escaping_pair,
    graph_morphisms,
    induced_subgraph,
    is_connected,
    is_forest,
    is_graph_morphism,
    is_invariant_subset,
    is_path_suffix,
    is_tree,
    left_subgraph,
    maximal_nodes,
    maximum_nodes,
    multi_parent_nodes,
    right_subgraph,
    root,
    single_parent_condition,
    subtrees_disjoint,
    unique_path,
)
from bingraph.graph import BinaryGraph, Path, act, all_graphs
from bingraph.words import EMPTY, Word


def test_forest_and_tree_classification(g1, g2, g3, g4):
    assert not is_forest(g1)
    assert not is_forest(g2) and multi_parent_nodes(g2) == [4]
    assert is_forest(g3) and not is_tree(g3) and not is_connected(g3)
    assert is_tree(g4) and root(g4) == 0


def test_single_parent_condition(g1, g2):
    # G1 is cyclic yet every node has one parent.
    assert single_parent_condition(g1)
    assert not single_parent_condition(g2)


def test_unique_path(g3, g4):
    assert unique_path(g4, 0, 3) == Word("00")
    assert unique_path(g4, 2, 2) == EMPTY
    assert unique_path(g3, 5, 7) == Word("1")
    with pytest.raises(NoPathError):
        unique_path(g3, 0, 5)


def test_unique_path_needs_a_forest(g2):
    with pytest.raises(PreconditionError):
        unique_path(g2, 0, 4)


def test_path_enumeration_is_breadth_first(g4):
    assert [str(w) for w in enumerate_paths(g4, 0, 3)] == ["e", "0", "1", "00"]


def test_path_suffix(g4):
    assert is_path_suffix(g4, Path(1, Word("0")), Path(0, Word("00")))
    assert not is_path_suffix(g4, Path(0, Word("0")), Path(0, Word("00")))
    assert is_path_suffix(g4, Path(3, EMPTY), Path(0, Word("00")))


def test_maximal_and_maximum(g1, g2, g3, g4):
    assert maximal_nodes(g1) == [] and maximum_nodes(g1) == [0, 1]
    assert maximal_nodes(g2) == maximum_nodes(g2) == [0]
    assert maximal_nodes(g3) == [0, 5] and maximum_nodes(g3) == []
    assert maximal_nodes(g4) == maximum_nodes(g4) == [0]


def test_components(g1, g3, g4):
    assert connected_components(g3) == [Component(0, (0, 1, 2, 3, 4)), Component(5, (5, 6, 7))]
    assert connected_components(g4) == [Component(0, (0, 1, 2, 3))]
    assert connected_components(g1) == []


def test_root_errors(g1, g3):
    with pytest.raises(NotConnectedError):
        root(g3)
    with pytest.raises(AmbiguousRootError) as exc:
        root(g1)
    assert exc.value.maxima == (0, 1)


def test_invariant_subsets(g3, g4):
    assert is_invariant_subset(g3, {5, 6, 7})
    assert is_invariant_subset(g4, range(4))
    assert escaping_pair(g4, {1}) == (1, 0)
    with pytest.raises(InputError, match="q1, 0"):
        induced_subgraph(g4, {1})


def test_induced_subgraph_renumbers(g3):
    sub = induced_subgraph(g3, {5, 6, 7})
    assert sub.table == ((1, 2), (1, 1), (2, 2))
    assert sub.names == ("q5", "q6", "q7")
    assert is_graph_morphism((5, 6, 7), sub, g3)


def test_left_and_right_subgraphs(g2, g4):
    left, right = left_subgraph(g4, 0), right_subgraph(g4, 0)
    assert left.members == {1, 3} and left.top == 1
    assert right.members == {2}
    assert subtrees_disjoint(g4, 0)
    # G2 shares q4 between the two sides
    assert not subtrees_disjoint(g2, 0)


def test_morphism_examples(g4):
    assert is_graph_morphism((0, 1, 2, 3), g4, g4)
    assert is_graph_morphism((3, 3, 3, 3), g4, g4)
    assert not is_graph_morphism((0, 2, 2, 3), g4, g4)


def test_morphism_enumeration_matches_brute_force():
    graphs = list(all_graphs(1)) + list(all_graphs(2))
    graphs += [g for i, g in enumerate(all_graphs(3)) if i % 37 == 0]
    for g, g2 in itertools.product(graphs, repeat=2):
        brute = [
            f
            for f in itertools.product(range(g2.node_count), repeat=g.node_count)
            if is_graph_morphism(f, g, g2)
        ]
        assert list(graph_morphisms(g, g2)) == brute, (g.table, g2.table)
        pinned = [f for f in brute if f[0] == 0]
        assert list(graph_morphisms(g, g2, {0: 0})) == pinned


def test_one_step_equivariance_gives_word_equivariance(g3, g4):
    for f in graph_morphisms(g3, g4):
        for q in g3.nodes:
            for bits in ("", "0", "01", "110", "0101"):
                w = Word(bits)
                assert f[act(g3, q, w)] == act(g4, f[q], w)


def test_tree_is_forest_and_connected():
    for n in (1, 2, 3):
        for g in all_graphs(n):
            if is_tree(g):
                assert is_forest(g) and is_connected(g) and len(maximum_nodes(g)) == 1
            if is_forest(g):
                assert len(connected_components(g)) == len(maximal_nodes(g))


def test_single_node_is_a_tree():
    g = BinaryGraph(((0, 0),))
    assert is_tree(g) and root(g) == 0
