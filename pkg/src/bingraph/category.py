"""Explicit finite categories, categories over a base, and fibration checks.

Objects and morphisms are dense integer indices; ``labels`` are only for
display. Two objects are equal exactly when their indices are, so distinct
isomorphic objects are representable and "reduced" is a real condition.

Every check here is a finite enumeration over precomputed hom indexes.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import InputError, PreconditionError


class FiniteCategory:
    """Objects, morphisms with domain and codomain, identities, composition.

    ``composition[(g, f)]`` is ``g ∘ f`` and must be present exactly for the
    pairs with ``cod(f) == dom(g)``.
    """

    def __init__(
        self,
        objects: Sequence[Hashable],
        dom: Sequence[int],
        cod: Sequence[int],
        identities: Sequence[int],
        composition: Mapping[tuple[int, int], int],
        labels: Sequence[Hashable] | None = None,
        *,
        validate: bool = True,
        associativity: bool = True,
    ):
        self.objects = list(objects)
        self.dom = list(dom)
        self.cod = list(cod)
        self.identities = list(identities)
        # Plain dicts are copied; other mappings may compute composites lazily.
        self.composition = dict(composition) if isinstance(composition, dict) else composition
        self.labels = list(labels) if labels is not None else list(range(len(self.dom)))
        if len(self.dom) != len(self.cod) or len(self.labels) != len(self.dom):
            raise InputError("dom, cod and labels must have one entry per morphism")
        if len(self.identities) != len(self.objects):
            raise InputError("need exactly one identity per object")
        self.hom_index: dict[tuple[int, int], list[int]] = defaultdict(list)
        self.outgoing: list[list[int]] = [[] for _ in self.objects]
        self.incoming: list[list[int]] = [[] for _ in self.objects]
        n = len(self.objects)
        for m, (a, b) in enumerate(zip(self.dom, self.cod)):
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"morphism {self.labels[m]!r} has an endpoint outside the objects")
            self.hom_index[(a, b)].append(m)
            self.outgoing[a].append(m)
            self.incoming[b].append(m)
        if validate:
            self.validate(associativity=associativity)

    @classmethod
    def from_names(
        cls,
        objects: Sequence[Hashable],
        morphisms: Mapping[Hashable, tuple[Hashable, Hashable]],
        composition: Mapping[tuple[Hashable, Hashable], Hashable] = {},
    ) -> FiniteCategory:
        """Build a small category by name.

        Identities ``("id", X)`` and the composites involving them are added
        automatically; ``composition`` lists the remaining ``(g, f) -> g∘f``.
        """
        obj_index = {x: i for i, x in enumerate(objects)}
        labels: list[Hashable] = [("id", x) for x in objects]
        dom = list(range(len(objects)))
        cod = list(range(len(objects)))
        for name, (a, b) in morphisms.items():
            labels.append(name)
            dom.append(obj_index[a])
            cod.append(obj_index[b])
        mor_index = {lab: i for i, lab in enumerate(labels)}
        comp: dict[tuple[int, int], int] = {}
        for m in range(len(labels)):
            comp[(cod[m], m)] = m
            comp[(m, dom[m])] = m
        for (g, f), h in composition.items():
            comp[(mor_index[g], mor_index[f])] = mor_index[h]
        return cls(objects, dom, cod, list(range(len(objects))), comp, labels)

    @property
    def num_objects(self) -> int:
        return len(self.objects)

    @property
    def num_morphisms(self) -> int:
        return len(self.dom)

    def identity(self, a: int) -> int:
        return self.identities[a]

    def hom(self, a: int, b: int) -> list[int]:
        return self.hom_index.get((a, b), [])

    def compose(self, g: int, f: int) -> int:
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise InputError(f"{self.labels[g]!r} and {self.labels[f]!r} are not composable") from None

    def validate(self, *, associativity: bool = True) -> None:
        """Check closure, identity laws and associativity; raise on the first failure.

        Callers that know associativity holds by construction may skip the
        cubic triple loop.
        """
        dom, cod, comp, labels = self.dom, self.cod, self.composition, self.labels
        for a, i in enumerate(self.identities):
            if dom[i] != a or cod[i] != a:
                raise InputError(f"identity of object {self.objects[a]!r} is not an endomorphism of it")
        expected = 0
        for f in range(len(dom)):
            for g in self.outgoing[cod[f]]:
                expected += 1
                h = comp.get((g, f))
                if h is None:
                    raise InputError(f"missing composite {labels[g]!r} ∘ {labels[f]!r}")
                if dom[h] != dom[f] or cod[h] != cod[g]:
                    raise InputError(f"composite {labels[g]!r} ∘ {labels[f]!r} has wrong endpoints")
        if expected != len(comp):
            raise InputError("composition table has entries for non-composable pairs")
        for f in range(len(dom)):
            if comp[(self.identities[cod[f]], f)] != f or comp[(f, self.identities[dom[f]])] != f:
                raise InputError(f"identity law fails at {labels[f]!r}")
        if not associativity:
            return
        for f in range(len(dom)):
            for g in self.outgoing[cod[f]]:
                gf = comp[(g, f)]
                for h in self.outgoing[cod[g]]:
                    if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                        raise InputError(
                            f"associativity fails at {labels[h]!r}, {labels[g]!r}, {labels[f]!r}"
                        )

    def inverse(self, m: int) -> int | None:
        a, b = self.dom[m], self.cod[m]
        for n in self.hom(b, a):
            if self.composition[(n, m)] == self.identities[a] and self.composition[(m, n)] == self.identities[b]:
                return n
        return None

    def subcategory(self, objects: Iterable[int], morphisms: Iterable[int]) -> FiniteCategory:
        """Re-index a subcategory; labels of the result are indices in ``self``."""
        objs = list(objects)
        mors = list(morphisms)
        obj_local = {x: i for i, x in enumerate(objs)}
        mor_local = {m: i for i, m in enumerate(mors)}
        comp = {}
        for f in mors:
            for g in self.outgoing[self.cod[f]]:
                if g in mor_local:
                    comp[(mor_local[g], mor_local[f])] = mor_local[self.composition[(g, f)]]
        return FiniteCategory(
            objs,
            [obj_local[self.dom[m]] for m in mors],
            [obj_local[self.cod[m]] for m in mors],
            [mor_local[self.identities[x]] for x in objs],
            comp,
            mors,
        )


@dataclass
class FunctorRep:
    source: FiniteCategory
    target: FiniteCategory
    obj_map: Sequence[int]
    mor_map: Sequence[int]

    def failures(self) -> list[str]:
        s, t = self.source, self.target
        F, Fm = self.obj_map, self.mor_map
        out = []
        for m in range(s.num_morphisms):
            if t.dom[Fm[m]] != F[s.dom[m]] or t.cod[Fm[m]] != F[s.cod[m]]:
                out.append(f"{s.labels[m]!r} is sent outside the hom-set of its image objects")
        for a in range(s.num_objects):
            if Fm[s.identities[a]] != t.identities[F[a]]:
                out.append(f"identity of {s.objects[a]!r} is not preserved")
        if out:
            return out
        for (g, f), h in s.composition.items():
            if Fm[h] != t.composition[(Fm[g], Fm[f])]:
                out.append(f"composite {s.labels[g]!r} ∘ {s.labels[f]!r} is not preserved")
        return out

    def is_functor(self) -> bool:
        return not self.failures()


class CategoryOver:
    """A category ``total`` with a functor ``proj`` to ``base``."""

    def __init__(self, total: FiniteCategory, base: FiniteCategory, proj: FunctorRep, *, validate: bool = True):
        if proj.source is not total or proj.target is not base:
            raise InputError("projection must go from the total category to the base")
        if validate:
            problems = proj.failures()
            if problems:
                raise InputError(f"projection is not a functor: {problems[0]}")
        self.total = total
        self.base = base
        self.proj = proj
        self.objects_over: list[list[int]] = [[] for _ in range(base.num_objects)]
        for x, s in enumerate(proj.obj_map):
            self.objects_over[s].append(x)
        # (source, target, base morphism) -> morphisms
        self.over_index: dict[tuple[int, int, int], list[int]] = defaultdict(list)
        # (base morphism, codomain) -> morphisms
        self.lifts_index: dict[tuple[int, int], list[int]] = defaultdict(list)
        for m, f in enumerate(proj.mor_map):
            self.over_index[(total.dom[m], total.cod[m], f)].append(m)
            self.lifts_index[(f, total.cod[m])].append(m)
        self._cartesian: dict[int, bool] = {}
        self._strong: dict[int, bool] = {}
        self.faithful = all(len(ms) == 1 for ms in self.over_index.values())
        # For faithful projections: (target, base morphism) -> bitset of sources.
        self.source_bits: dict[tuple[int, int], int] = defaultdict(int)
        if self.faithful:
            for (x, y, f) in self.over_index:
                self.source_bits[(y, f)] |= 1 << x

    def p(self, m: int) -> int:
        return self.proj.mor_map[m]

    def p_obj(self, x: int) -> int:
        return self.proj.obj_map[x]

    def hom_over(self, eta: int, xi: int, f: int) -> list[int]:
        return self.over_index.get((eta, xi, f), [])


@dataclass
class Cleavage:
    """A chosen inverse image ``(f*ξ, α_f(ξ))`` for every ``(f, ξ)``."""

    choices: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def inverse_object(self, f: int, xi: int) -> int:
        return self.choices[(f, xi)][0]

    def canonical(self, f: int, xi: int) -> int:
        return self.choices[(f, xi)][1]


def fiber(c: CategoryOver, s: int) -> FiniteCategory:
    """Objects over ``s`` and the morphisms lying over ``id_s``."""
    ident = c.base.identity(s)
    objs = c.objects_over[s]
    mors = [m for x in objs for y in objs for m in c.hom_over(x, y, ident)]
    return c.total.subcategory(objs, mors)


def hom_over(c: CategoryOver, eta: int, xi: int, f: int) -> list[int]:
    return list(c.hom_over(eta, xi, f))


def _bijects(c: CategoryOver, alpha: int, source: list[int], target: list[int]) -> bool:
    if len(source) != len(target):
        return False
    image = {c.total.composition[(alpha, v)] for v in source}
    return len(image) == len(source) and image == set(target)


def is_cartesian(c: CategoryOver, alpha: int) -> bool:
    """Every ``f``-morphism into ``cod α`` factors uniquely through ``α``."""
    cached = c._cartesian.get(alpha)
    if cached is not None:
        return cached
    f = c.p(alpha)
    eta, xi = c.total.dom[alpha], c.total.cod[alpha]
    t = c.base.dom[f]
    ident = c.base.identity(t)
    if c.faithful:
        # Hom-sets over a fixed base morphism have at most one element, so
        # composing with α is a bijection iff both sides are empty or both not.
        result = c.source_bits.get((eta, ident), 0) == c.source_bits.get((xi, f), 0)
        c._cartesian[alpha] = result
        return result
    result = all(
        _bijects(c, alpha, c.hom_over(e2, eta, ident), c.hom_over(e2, xi, f))
        for e2 in c.objects_over[t]
    )
    c._cartesian[alpha] = result
    return result


def is_strongly_cartesian(c: CategoryOver, alpha: int) -> bool:
    """Unique factorisation through ``α`` over every ``f ∘ g``."""
    cached = c._strong.get(alpha)
    if cached is not None:
        return cached
    f = c.p(alpha)
    eta, xi = c.total.dom[alpha], c.total.cod[alpha]
    t = c.base.dom[f]
    result = True
    for g in c.base.incoming[t]:
        fg = c.base.composition[(f, g)]
        if c.faithful:
            if c.source_bits.get((eta, g), 0) != c.source_bits.get((xi, fg), 0):
                result = False
                break
            continue
        for zeta in c.objects_over[c.base.dom[g]]:
            if not _bijects(c, alpha, c.hom_over(zeta, eta, g), c.hom_over(zeta, xi, fg)):
                result = False
                break
        if not result:
            break
    c._strong[alpha] = result
    return result


def find_inverse_image(c: CategoryOver, f: int, xi: int) -> list[tuple[int, int]]:
    """All ``(η, α)`` with ``α: η -> ξ`` Cartesian over ``f``."""
    if c.p_obj(xi) != c.base.cod[f]:
        raise PreconditionError(f"object {c.total.objects[xi]!r} does not lie over the codomain of {c.base.labels[f]!r}")
    return [(c.total.dom[a], a) for a in c.lifts_index.get((f, xi), []) if is_cartesian(c, a)]


def lift_problems(c: CategoryOver) -> Iterator[tuple[int, int]]:
    """Every pair ``(f, ξ)`` with ``ξ`` over the codomain of ``f``."""
    for f in range(c.base.num_morphisms):
        for xi in c.objects_over[c.base.cod[f]]:
            yield f, xi


def fibred_failures(c: CategoryOver, limit: int = 10) -> list[str]:
    """Witnesses against both fibredness conditions; empty when fibred."""
    out: list[str] = []
    for f, xi in lift_problems(c):
        if not find_inverse_image(c, f, xi):
            out.append(f"no inverse image of {c.total.objects[xi]!r} by {c.base.labels[f]!r}")
            if len(out) >= limit:
                return out
    cartesian = [a for a in range(c.total.num_morphisms) if is_cartesian(c, a)]
    cart_into: dict[int, list[int]] = defaultdict(list)
    for b in cartesian:
        cart_into[c.total.cod[b]].append(b)
    for a in cartesian:
        for b in cart_into[c.total.dom[a]]:
            ab = c.total.composition[(a, b)]
            if not is_cartesian(c, ab):
                out.append(
                    f"composite {c.total.labels[a]!r} ∘ {c.total.labels[b]!r} of Cartesian morphisms is not Cartesian"
                )
                if len(out) >= limit:
                    return out
    return out


def is_fibred(c: CategoryOver) -> bool:
    return not fibred_failures(c, limit=1)


def is_rigid(cat: FiniteCategory) -> bool:
    """The identity is the only automorphism of each object."""
    for a in range(cat.num_objects):
        for m in cat.hom(a, a):
            if m != cat.identities[a] and cat.inverse(m) is not None:
                return False
    return True


def is_reduced(cat: FiniteCategory) -> bool:
    """Isomorphic objects are equal."""
    for m in range(cat.num_morphisms):
        if cat.dom[m] != cat.cod[m] and cat.inverse(m) is not None:
            return False
    return True


# -- cleavages --------------------------------------------------------------


def check_cleavage(c: CategoryOver, cl: Cleavage) -> None:
    """Raise :class:`PreconditionError` naming the first bad choice."""
    for f, xi in lift_problems(c):
        label = f"({c.base.labels[f]!r}, {c.total.objects[xi]!r})"
        if (f, xi) not in cl.choices:
            raise PreconditionError(f"cleavage has no choice for {label}")
        eta, alpha = cl.choices[(f, xi)]
        if c.p(alpha) != f or c.total.cod[alpha] != xi or c.total.dom[alpha] != eta:
            raise PreconditionError(f"choice for {label} is not a morphism over f into ξ")
        if not is_cartesian(c, alpha):
            raise PreconditionError(f"choice for {label} is not Cartesian")


def inverse_image_morphism(c: CategoryOver, cl: Cleavage, f: int, u: int) -> int:
    """``f*u``: the unique fibre morphism ``v`` with ``α_f(ξ')∘v = u∘α_f(ξ)``."""
    xi, xi2 = c.total.dom[u], c.total.cod[u]
    eta, alpha = cl.choices[(f, xi)]
    eta2, alpha2 = cl.choices[(f, xi2)]
    target = c.total.composition[(u, alpha)]
    ident = c.base.identity(c.base.dom[f])
    found = [v for v in c.hom_over(eta, eta2, ident) if c.total.composition[(alpha2, v)] == target]
    if len(found) != 1:
        raise PreconditionError(f"{len(found)} factorisations of {c.total.labels[u]!r} through the chosen lift")
    return found[0]


def splitting_failures(c: CategoryOver, cl: Cleavage, limit: int = 10) -> list[str]:
    check_cleavage(c, cl)
    base, total = c.base, c.total
    out: list[str] = []
    for s in range(base.num_objects):
        ident = base.identity(s)
        for xi in c.objects_over[s]:
            if cl.choices[(ident, xi)] != (xi, total.identity(xi)):
                out.append(f"identity lift of {total.objects[xi]!r} is not (ξ, id)")
    fibre_morphisms = {
        s: [m for x in c.objects_over[s] for y in c.objects_over[s] for m in c.hom_over(x, y, base.identity(s))]
        for s in range(base.num_objects)
    }
    for f in range(base.num_morphisms):
        s = base.cod[f]
        for g in base.incoming[base.dom[f]]:
            fg = base.composition[(f, g)]
            where = f"{base.labels[f]!r} ∘ {base.labels[g]!r}"
            objects_ok = True
            for xi in c.objects_over[s]:
                f_xi = cl.inverse_object(f, xi)
                if cl.inverse_object(fg, xi) != cl.inverse_object(g, f_xi):
                    out.append(f"(f∘g)*ξ != g*f*ξ for {where}, ξ = {total.objects[xi]!r}")
                elif cl.canonical(fg, xi) != total.composition[(cl.canonical(f, xi), cl.canonical(g, f_xi))]:
                    out.append(f"α_(f∘g)(ξ) != α_f(ξ)∘α_g(f*ξ) for {where}, ξ = {total.objects[xi]!r}")
                else:
                    continue
                objects_ok = False
                if len(out) >= limit:
                    return out
            if not objects_ok:
                # The functor equation on morphisms only makes sense once the objects agree.
                continue
            for u in fibre_morphisms[s]:
                if inverse_image_morphism(c, cl, fg, u) != inverse_image_morphism(
                    c, cl, g, inverse_image_morphism(c, cl, f, u)
                ):
                    out.append(f"(f∘g)*u != g*f*u for {where}, u = {total.labels[u]!r}")
                    if len(out) >= limit:
                        return out
    return out


def is_splitting(c: CategoryOver, cl: Cleavage) -> bool:
    return not splitting_failures(c, cl, limit=1)


def cleavage_options(c: CategoryOver) -> dict[tuple[int, int], list[tuple[int, int]]]:
    return {(f, xi): find_inverse_image(c, f, xi) for f, xi in lift_problems(c)}


def count_cleavages(c: CategoryOver) -> int:
    return math.prod(len(v) for v in cleavage_options(c).values())


def enumerate_cleavages(c: CategoryOver) -> Iterator[Cleavage]:
    """Every choice function over the inverse images; lazy."""
    options = cleavage_options(c)
    keys = list(options)
    for picks in itertools.product(*(options[k] for k in keys)):
        yield Cleavage(dict(zip(keys, picks)))
