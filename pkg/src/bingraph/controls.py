"""Small hand-built categories over a base that break the fibration properties.

They keep the checkers honest: each one must fail a check that the
automata categories pass.
"""

from __future__ import annotations

from .category import CategoryOver, FiniteCategory, FunctorRep


def _over(total: FiniteCategory, base: FiniteCategory, obj_map, mor_map) -> CategoryOver:
    return CategoryOver(total, base, FunctorRep(total, base, obj_map, mor_map))


def arrow_base() -> FiniteCategory:
    """``s --f--> t``."""
    return FiniteCategory.from_names(["s", "t"], {"f": ("s", "t")})


def point_base() -> FiniteCategory:
    return FiniteCategory.from_names(["s"], {})


def non_fibred() -> CategoryOver:
    """``y`` over ``s`` with two parallel arrows ``a, b: y -> x`` over ``f``.

    The fibre over ``s`` has only ``id_y``, which cannot biject onto
    ``{a, b}``, so ``x`` has no inverse image along ``f``.
    """
    base = arrow_base()
    total = FiniteCategory.from_names(["y", "x"], {"a": ("y", "x"), "b": ("y", "x")})
    # objects y, x; morphisms id_y, id_x, a, b
    return _over(total, base, [0, 1], [0, 1, 2, 2])


def involution_fibre() -> CategoryOver:
    """One object with a non-trivial automorphism ``τ``, ``τ∘τ = id``."""
    total = FiniteCategory.from_names(["x"], {"tau": ("x", "x")}, {("tau", "tau"): ("id", "x")})
    return _over(total, point_base(), [0], [0, 0])


def isomorphic_pair_fibre() -> CategoryOver:
    """Two distinct objects ``x ≅ y`` over one base object."""
    total = FiniteCategory.from_names(
        ["x", "y"],
        {"u": ("x", "y"), "v": ("y", "x")},
        {("v", "u"): ("id", "x"), ("u", "v"): ("id", "y")},
    )
    return _over(total, point_base(), [0, 0], [0, 0, 0, 0])
