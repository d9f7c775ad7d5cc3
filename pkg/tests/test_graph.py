import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bingraph.errors import InputError
from bingraph.graph import (
    BinaryGraph,
    IsotropyClass,
    IsotropyLanguage,
    act,
    all_graphs,
    check_prop_partial_order,
    contract,
    internal_nodes,
    is_acyclic,
    is_ancestor,
    is_leaf,
    isotropy_class,
    isotropy_contains,
    isotropy_prefix_closed,
    isotropy_suffix_closed,
    isotropy_words,
    leaves,
    leq,
    orbit,
    parents,
    random_graph,
    trajectory,
    validate_path,
)
from bingraph.words import EMPTY, Word, concat, enumerate_words, is_prefix_closed, is_suffix_closed


@st.composite
def graph_node_word(draw, max_nodes=5, max_len=12):
    n = draw(st.integers(1, max_nodes))
    table = tuple(
        (draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))) for _ in range(n)
    )
    q = draw(st.integers(0, n - 1))
    w = Word(draw(st.text(alphabet="01", max_size=max_len)))
    return BinaryGraph(table), q, w


def test_construction_checks():
    with pytest.raises(InputError):
        BinaryGraph(())
    with pytest.raises(InputError):
        BinaryGraph(((0, 1),))
    with pytest.raises(InputError):
        BinaryGraph(((0, 0), (1, 1)), ("a", "a"))
    g = BinaryGraph.from_rows([1, 1], [0, 1])
    assert g.table == ((1, 0), (1, 1))
    assert g.name(1) == "q1" and g.index("q1") == 1
    with pytest.raises(InputError):
        g.index("q7")
    with pytest.raises(InputError):
        act(g, 5, EMPTY)


def test_action_examples(g1, g4):
    assert act(g4, 0, EMPTY) == 0
    assert act(g4, 0, Word("00")) == 3
    assert act(g1, 0, Word("10")) == 0
    assert trajectory(g4, 0, Word("00")) == [0, 1, 3]


def test_leaves(g1, g2, g3, g4):
    assert leaves(g1) == frozenset()
    assert leaves(g2) == {3, 4, 6}
    assert is_leaf(g2, 3) and not is_leaf(g2, 0)
    assert leaves(g3) == {2, 3, 4, 6, 7}
    assert internal_nodes(g4) == {0, 1}


def test_parents(g1, g2, g4):
    assert parents(g2, 4) == {(1, 1), (2, 0)}
    assert parents(g4, 3) == {(1, 0)}
    assert parents(g1, 0) == {(1, 0)}


def test_paths(g2, g4):
    assert validate_path(g4, 0, Word("00"))
    assert validate_path(g2, 3, EMPTY)
    assert not validate_path(g2, 3, Word("0"))
    # q1 is fixed by 1 in G4
    assert not validate_path(g4, 1, Word("1"))


def test_contraction_examples(g2, g3, g4):
    assert contract(g4, 0, EMPTY) == EMPTY
    assert contract(g3, 0, Word("011")) == Word("01")
    assert contract(g2, 3, Word("1101")) == EMPTY


def test_orbits_and_preorder(g1, g2, g3, g4):
    assert orbit(g3, 5) == {5, 6, 7}
    assert orbit(g2, 6) == {6}
    assert orbit(g1, 0) == {0, 1}
    assert is_ancestor(g4, 0, 3)
    assert is_ancestor(g4, 2, 2)
    assert not is_ancestor(g3, 0, 5)
    assert leq(g4, 3, 0) and not leq(g4, 0, 3)


def test_acyclicity(g1, g2, g3, g4):
    assert not is_acyclic(g1)
    assert is_acyclic(g2) and is_acyclic(g3) and is_acyclic(g4)
    # self-loops do not count as cycles
    assert is_acyclic(BinaryGraph(((0, 0),)))


def test_isotropy_membership(g4):
    lang = IsotropyLanguage(g4, 1)
    assert isotropy_contains(lang, Word("1"))
    assert isotropy_contains(lang, EMPTY)
    assert not isotropy_contains(lang, Word("0"))
    assert Word("111") in lang


def test_isotropy_classes(g1, g4):
    assert isotropy_class(g4, 1) is IsotropyClass.ONE_STAR
    assert isotropy_class(g4, 0) is IsotropyClass.EMPTY
    assert isotropy_class(g4, 3) is IsotropyClass.FULL
    assert isotropy_class(g1, 0) is IsotropyClass.OTHER
    assert isotropy_words(g4, 0, 8) == {EMPTY}


def _brute_class(g, q, bound):
    fixing = isotropy_words(g, q, bound)
    n = bound
    candidates = {
        IsotropyClass.FULL: set(enumerate_words(n)),
        IsotropyClass.EMPTY: {EMPTY},
        IsotropyClass.ZERO_STAR: {Word("0" * k) for k in range(n + 1)},
        IsotropyClass.ONE_STAR: {Word("1" * k) for k in range(n + 1)},
    }
    for cls, words in candidates.items():
        if fixing == words:
            return cls
    return IsotropyClass.OTHER


def test_isotropy_class_matches_bounded_enumeration():
    # Language equivalence against enumeration of words up to 2n + 2.
    for n in (1, 2, 3):
        for g in all_graphs(n):
            for q in g.nodes:
                assert isotropy_class(g, q) == _brute_class(g, q, 2 * n + 2), (g.table, q)


def test_exact_closure_tests_match_enumeration():
    for n in (1, 2, 3):
        for g in all_graphs(n):
            for q in g.nodes:
                words = isotropy_words(g, q, 2 * n)
                assert isotropy_prefix_closed(g, q) == is_prefix_closed(words), (g.table, q)
                if isotropy_prefix_closed(g, q):
                    assert isotropy_suffix_closed(g, q) == is_suffix_closed(words), (g.table, q)


@pytest.mark.parametrize(
    "name, expected",
    [("G1", False), ("G2", True), ("G3", True), ("G4", True)],
)
def test_partial_order_reports(name, expected):
    from bingraph.samples import SAMPLES

    rep = check_prop_partial_order(SAMPLES[name])
    assert rep.values() == (expected,) * 5
    assert rep.consistent


def test_all_graphs_counts():
    assert [sum(1 for _ in all_graphs(n)) for n in (1, 2, 3)] == [1, 16, 729]


def test_random_graphs_report_consistently():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng, rng.randint(4, 6))
        assert check_prop_partial_order(g).consistent, g.table


@given(graph_node_word(), st.text(alphabet="01", max_size=8))
def test_action_law(gqw, extra):
    g, q, w = gqw
    v = Word(extra)
    assert act(g, q, concat(w, v)) == act(g, act(g, q, w), v)


@given(graph_node_word())
def test_contraction_is_a_path_to_the_same_node(gqw):
    g, q, w = gqw
    c = contract(g, q, w)
    assert validate_path(g, q, c)
    assert act(g, q, c) == act(g, q, w)
    assert len(c) <= len(w)
    # contracting twice changes nothing
    assert contract(g, q, c) == c


@given(graph_node_word())
def test_leaf_iff_trivial_orbit(gqw):
    g, q, _ = gqw
    assert is_leaf(g, q) == (orbit(g, q) == {q})
