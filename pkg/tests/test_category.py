import random

import pytest

from bingraph.category import (
    CategoryOver,
    Cleavage,
    FiniteCategory,
    FunctorRep,
    check_cleavage,
    count_cleavages,
    enumerate_cleavages,
    fiber,
    fibred_failures,
    find_inverse_image,
    inverse_image_morphism,
    is_cartesian,
    is_fibred,
    is_reduced,
    is_rigid,
    is_splitting,
    is_strongly_cartesian,
    splitting_failures,
)
from bingraph.controls import involution_fibre, isomorphic_pair_fibre, non_fibred, point_base
from bingraph.errors import InputError, PreconditionError
from bingraph.fibration import AutomataOver, auto_diagram, powerset_category
from bingraph.suites import random_diagrams


def test_powerset_category_is_posetal():
    p = powerset_category(2)
    assert p.num_objects == 4 and p.num_morphisms == 9
    assert all(len(p.hom(a, b)) <= 1 for a in range(4) for b in range(4))
    assert is_rigid(p) and is_reduced(p)


def test_from_names_adds_identities():
    c = FiniteCategory.from_names(["s", "t"], {"f": ("s", "t")})
    assert c.num_morphisms == 3
    f = c.labels.index("f")
    assert c.compose(c.identity(1), f) == f == c.compose(f, c.identity(0))
    with pytest.raises(InputError):
        c.compose(f, f)


def test_non_associative_table_rejected():
    comp = {("a", "a"): "b", ("b", "a"): "a", ("a", "b"): "a", ("b", "b"): "a"}
    with pytest.raises(InputError, match="associativity"):
        FiniteCategory.from_names(["x"], {"a": ("x", "x"), "b": ("x", "x")}, comp)


def test_missing_composite_rejected():
    with pytest.raises(InputError, match="missing composite"):
        FiniteCategory.from_names(["x"], {"a": ("x", "x")})


def test_identity_law_checked():
    # id∘f must be f; here id_x is wired to send a to itself but a∘id to id.
    comp = {(0, 0): 0, (0, 1): 1, (1, 0): 0, (1, 1): 1}
    with pytest.raises(InputError, match="identity law"):
        FiniteCategory([0], [0, 0], [0, 0], [0], comp)


def test_inverse():
    c = isomorphic_pair_fibre().total
    u = c.labels.index("u")
    assert c.labels[c.inverse(u)] == "v"
    assert FiniteCategory.from_names(["s", "t"], {"f": ("s", "t")}).inverse(2) is None


def test_functor_failures_detected():
    source = FiniteCategory.from_names(["x"], {"tau": ("x", "x")}, {("tau", "tau"): ("id", "x")})
    target = FiniteCategory.from_names(["x"], {"a": ("x", "x")}, {("a", "a"): "a"})
    assert FunctorRep(source, target, [0], [0, 0]).is_functor()
    bad = FunctorRep(source, target, [0], [0, 1])
    assert not bad.is_functor()
    assert "not preserved" in bad.failures()[0]
    with pytest.raises(InputError):
        CategoryOver(source, target, bad)


def test_non_fibred_control():
    c = non_fibred()
    assert not is_fibred(c)
    assert "no inverse image" in fibred_failures(c)[0]
    assert count_cleavages(c) == 0


def test_involution_control_has_two_cleavages():
    c = involution_fibre()
    assert is_fibred(c)
    assert not is_rigid(fiber(c, 0))
    cleavages = list(enumerate_cleavages(c))
    assert len(cleavages) == 2
    assert [is_splitting(c, cl) for cl in cleavages] == [True, False]


def test_isomorphic_pair_control():
    c = isomorphic_pair_fibre()
    fib = fiber(c, 0)
    assert is_rigid(fib) and not is_reduced(fib)
    assert count_cleavages(c) == 4
    assert sum(is_splitting(c, cl) for cl in enumerate_cleavages(c)) == 1


def test_perturbed_cleavage_breaks_the_splitting_equations():
    c = isomorphic_pair_fibre()
    labels = c.total.labels
    ident = c.base.identity(0)
    x, y = 0, 1
    u, v = labels.index("u"), labels.index("v")
    perturbed = Cleavage({(ident, x): (y, v), (ident, y): (y, c.total.identity(y))})
    check_cleavage(c, perturbed)
    failures = splitting_failures(c, perturbed)
    assert failures and "identity lift" in failures[0]
    assert inverse_image_morphism(c, perturbed, ident, u) == c.total.identity(y)


def test_check_cleavage_rejects_non_cartesian_choices():
    c = AutomataOver(auto_diagram(1))
    ident = c.base.identity(0)
    full = c.object_index[(0, 1)]
    empty = c.object_index[(0, 0)]
    choices = {(ident, xi): (xi, c.total.identity(xi)) for xi in c.objects_over[0]}
    choices[(ident, full)] = (empty, c.morphism_index[(empty, full, ident)])
    with pytest.raises(PreconditionError, match="not Cartesian"):
        check_cleavage(c, Cleavage(choices))
    with pytest.raises(PreconditionError):
        check_cleavage(c, Cleavage({}))


def test_inverse_image_precondition():
    c = non_fibred()
    f = c.base.labels.index("f")
    y = c.total.objects.index("y")
    with pytest.raises(PreconditionError):
        find_inverse_image(c, f, y)


def test_identity_projection_has_one_cleavage():
    base = point_base()
    c = CategoryOver(base, base, FunctorRep(base, base, [0], [0]))
    assert count_cleavages(c) == 1


@pytest.mark.parametrize("seed", range(4))
def test_fast_and_general_cartesian_tests_agree(seed):
    diagrams = [auto_diagram(2)] if seed == 0 else random_diagrams(random.Random(seed), 1)
    fast = AutomataOver(diagrams[0])
    slow = AutomataOver(diagrams[0])
    slow.faithful = False
    assert fast.faithful
    for a in range(fast.total.num_morphisms):
        assert is_cartesian(fast, a) == is_cartesian(slow, a)
        assert is_strongly_cartesian(fast, a) == is_strongly_cartesian(slow, a)


def test_strongly_cartesian_morphisms_compose():
    for c in (AutomataOver(auto_diagram(2)), involution_fibre(), isomorphic_pair_fibre()):
        t = c.total
        strong = [a for a in range(t.num_morphisms) if is_strongly_cartesian(c, a)]
        for a in strong:
            for b in strong:
                if t.cod[b] == t.dom[a]:
                    assert is_strongly_cartesian(c, t.compose(a, b))


def test_subcategory_reindexes():
    c = isomorphic_pair_fibre().total
    sub = c.subcategory([0], [c.identity(0)])
    assert sub.num_objects == 1 and sub.labels == [c.identity(0)]
