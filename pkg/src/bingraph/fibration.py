"""Binary automata as a category over a finite diagram of pointed graphs.

Over each pointed graph ``P`` with node set ``Q`` the automata are the
pairs ``(P, F)`` with ``F ⊆ Q`` (stored as bitmasks). A morphism
``(P, F) -> (P', F')`` lying over ``f: P -> P'`` exists, and is unique,
iff ``F ⊆ f⁻¹(F')``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Iterator, Mapping, Sequence

from .automata import (
    NodeMap,
    PointedBinaryGraph,
    compose_maps,
    identity_map,
    is_pointed_morphism,
    pointed_graphs_up_to,
    pointed_morphisms,
)
from .category import (
    CategoryOver,
    Cleavage,
    FiniteCategory,
    FunctorRep,
    cleavage_options,
    fiber,
    is_cartesian,
    is_reduced,
    is_rigid,
    is_strongly_cartesian,
    fibred_failures,
    splitting_failures,
)
from .errors import InputError, SizeLimitError

POWERSET_CAP = 6
MAX_TOTAL_OBJECTS = 4096


def preimage_mask(f: Sequence[int], mask: int) -> int:
    out = 0
    for q, t in enumerate(f):
        if mask >> t & 1:
            out |= 1 << q
    return out


def submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def mask_nodes(mask: int) -> tuple[int, ...]:
    return tuple(q for q in range(mask.bit_length()) if mask >> q & 1)


def powerset_category(nodes: int | Collection, *, cap: int = POWERSET_CAP) -> FiniteCategory:
    """Subsets of a finite set ordered by inclusion.

    Object ``i`` is the subset with bitmask ``i``; there is one morphism
    ``F1 -> F2`` exactly when ``F1 ⊆ F2``.
    """
    n = nodes if isinstance(nodes, int) else len(nodes)
    if n > cap:
        raise SizeLimitError(f"power set of {n} elements exceeds the cap of {cap}")
    size = 1 << n
    dom, cod, index = [], [], {}
    for hi in range(size):
        for lo in submasks(hi):
            index[(lo, hi)] = len(dom)
            dom.append(lo)
            cod.append(hi)
    comp = {}
    for (lo, mid), f in index.items():
        for hi in range(size):
            if mid & ~hi == 0:
                comp[(index[(mid, hi)], f)] = index[(lo, hi)]
    return FiniteCategory(
        list(range(size)), dom, cod, [index[(x, x)] for x in range(size)], comp, list(zip(dom, cod))
    )


def pullback_functor(f: Sequence[int], target_size: int) -> FunctorRep:
    """``F' ↦ f⁻¹(F')`` from subsets of the codomain to subsets of the domain."""
    source = powerset_category(target_size)
    target = powerset_category(len(f))
    obj_map = [preimage_mask(f, x) for x in source.objects]
    index = {lab: m for m, lab in enumerate(target.labels)}
    mor_map = [index[(obj_map[lo], obj_map[hi])] for lo, hi in source.labels]
    return FunctorRep(source, target, obj_map, mor_map)


class BaseDiagram:
    """A finite category of pointed graphs and morphisms between them.

    Morphisms are ``(dom, cod, node map)`` triples; the list must contain
    every identity and be closed under composition.
    """

    def __init__(self, objects: Sequence[PointedBinaryGraph], morphisms: Sequence[tuple[int, int, NodeMap]]):
        self.objects = list(objects)
        self.morphisms = [(a, b, tuple(f)) for a, b, f in morphisms]
        index = {}
        for k, (a, b, f) in enumerate(self.morphisms):
            if not (0 <= a < len(self.objects) and 0 <= b < len(self.objects)):
                raise InputError(f"morphism {k} has an endpoint outside the diagram")
            if not is_pointed_morphism(f, self.objects[a], self.objects[b]):
                raise InputError(f"morphism {k} is not a pointed-graph morphism")
            if (a, b, f) in index:
                raise InputError(f"morphism {k} is listed twice")
            index[(a, b, f)] = k
        identities = []
        for a, p in enumerate(self.objects):
            key = (a, a, identity_map(p.graph.node_count))
            if key not in index:
                raise InputError(f"identity of object {a} is missing")
            identities.append(index[key])
        outgoing: list[list[int]] = [[] for _ in self.objects]
        for k, (a, _, _) in enumerate(self.morphisms):
            outgoing[a].append(k)
        comp = {}
        for k, (a, b, f) in enumerate(self.morphisms):
            for j in outgoing[b]:
                _, c, g = self.morphisms[j]
                key = (a, c, compose_maps(g, f))
                if key not in index:
                    raise InputError(f"diagram is not closed under composition: morphism {j} ∘ morphism {k}")
                comp[(j, k)] = index[key]
        self.category = FiniteCategory(
            list(range(len(self.objects))),
            [a for a, _, _ in self.morphisms],
            [b for _, b, _ in self.morphisms],
            identities,
            comp,
            list(self.morphisms),
        )

    @classmethod
    def full(cls, objects: Sequence[PointedBinaryGraph]) -> BaseDiagram:
        """All morphisms between the given objects."""
        morphisms = [
            (a, b, f)
            for a, p in enumerate(objects)
            for b, p2 in enumerate(objects)
            for f in pointed_morphisms(p, p2)
        ]
        return cls(objects, morphisms)

    def total_object_count(self) -> int:
        return sum(1 << p.graph.node_count for p in self.objects)


def auto_diagram(max_nodes: int, *, max_objects: int = MAX_TOTAL_OBJECTS, allow_large: bool = False) -> BaseDiagram:
    """Every pointed graph with at most ``max_nodes`` nodes and every morphism.

    The automata guard is applied here too, before any morphism is enumerated.
    """
    if max_nodes > 3:
        raise SizeLimitError("automatic diagrams are capped at 3 nodes")
    objects = list(pointed_graphs_up_to(max_nodes))
    total = sum(1 << p.graph.node_count for p in objects)
    if total > max_objects and not allow_large:
        raise SizeLimitError(f"{total} automata exceed the limit of {max_objects}")
    return BaseDiagram.full(objects)


class _OverComposition(Mapping):
    """Composites computed on demand from the base composite.

    Large diagrams have millions of composable pairs, too many to store.
    """

    def __init__(self, dom, cod, mor_map, outgoing, index, base_comp):
        self.dom, self.cod, self.mor_map = dom, cod, mor_map
        self.outgoing, self.index, self.base_comp = outgoing, index, base_comp

    def __getitem__(self, key: tuple[int, int]) -> int:
        m2, m1 = key
        if self.cod[m1] != self.dom[m2]:
            raise KeyError(key)
        return self.index[(self.dom[m1], self.cod[m2], self.base_comp[(self.mor_map[m2], self.mor_map[m1])])]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for m1, eta in enumerate(self.cod):
            for m2 in self.outgoing[eta]:
                yield (m2, m1)

    def __len__(self) -> int:
        return sum(len(self.outgoing[eta]) for eta in self.cod)


class AutomataOver(CategoryOver):
    """The total category of automata over a diagram, with lookup tables."""

    def __init__(self, diagram: BaseDiagram, *, max_objects: int = MAX_TOTAL_OBJECTS, allow_large: bool = False):
        total_objects = diagram.total_object_count()
        if total_objects > max_objects and not allow_large:
            raise SizeLimitError(f"{total_objects} automata exceed the limit of {max_objects}")
        self.diagram = diagram
        base = diagram.category
        objects, object_index, obj_map = [], {}, []
        for p, pg in enumerate(diagram.objects):
            for mask in range(1 << pg.graph.node_count):
                object_index[(p, mask)] = len(objects)
                objects.append((p, mask))
                obj_map.append(p)
        self.object_index = object_index
        # preimages[k][mask'] = f⁻¹(mask') for base morphism k
        self.preimages = [
            [preimage_mask(f, m) for m in range(1 << diagram.objects[b].graph.node_count)]
            for _, b, f in diagram.morphisms
        ]
        dom, cod, mor_map, index = [], [], [], {}
        for k, (a, b, f) in enumerate(diagram.morphisms):
            for target_mask, pre in enumerate(self.preimages[k]):
                xi = object_index[(b, target_mask)]
                for source_mask in submasks(pre):
                    eta = object_index[(a, source_mask)]
                    index[(eta, xi, k)] = len(dom)
                    dom.append(eta)
                    cod.append(xi)
                    mor_map.append(k)
        self.morphism_index = index
        outgoing: list[list[int]] = [[] for _ in objects]
        for m, x in enumerate(dom):
            outgoing[x].append(m)
        comp = _OverComposition(dom, cod, mor_map, outgoing, index, base.composition)
        identities = [index[(x, x, base.identities[p])] for x, (p, _) in enumerate(objects)]
        # Validation still proves every composite exists (F ⊆ (f∘g)⁻¹(F'')).
        # Associativity is inherited from the base: there is at most one
        # morphism between two automata over a given base morphism.
        total = FiniteCategory(
            objects, dom, cod, identities, comp, list(zip(dom, cod, mor_map)), associativity=len(dom) <= 5000
        )
        # The composite lies over the base composite by construction.
        super().__init__(total, base, FunctorRep(total, base, obj_map, mor_map), validate=len(dom) <= 5000)

    def automaton(self, x: int) -> tuple[PointedBinaryGraph, frozenset[int]]:
        p, mask = self.total.objects[x]
        return self.diagram.objects[p], frozenset(mask_nodes(mask))


def build_total_category(d: BaseDiagram, **kwargs) -> AutomataOver:
    return AutomataOver(d, **kwargs)


def canonical_cleavage(c: AutomataOver) -> Cleavage:
    """``f*(P', F') = (P, f⁻¹(F'))`` with the lift whose underlying map is ``f``."""
    choices = {}
    for k, (a, b, _) in enumerate(c.diagram.morphisms):
        for target_mask, pre in enumerate(c.preimages[k]):
            xi = c.object_index[(b, target_mask)]
            eta = c.object_index[(a, pre)]
            choices[(k, xi)] = (eta, c.morphism_index[(eta, xi, k)])
    return Cleavage(choices)


@dataclass
class TheoremReport:
    fibred: bool
    splitting: bool
    fibres_rigid_reduced: bool
    unique_cleavage: bool
    cartesian_iff_strong: bool
    base_objects: int = 0
    base_morphisms: int = 0
    total_objects: int = 0
    total_morphisms: int = 0
    witnesses: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(
            (self.fibred, self.splitting, self.fibres_rigid_reduced, self.unique_cleavage, self.cartesian_iff_strong)
        )

    def lines(self) -> list[str]:
        def yn(ok):
            return "pass" if ok else "FAIL"

        out = [
            f"base: {self.base_objects} pointed graphs, {self.base_morphisms} morphisms",
            f"total: {self.total_objects} automata, {self.total_morphisms} morphisms",
            f"{yn(self.fibred)} fibred (inverse images exist, Cartesian morphisms compose)",
            f"{yn(self.splitting)} canonical cleavage is a splitting",
            f"{yn(self.fibres_rigid_reduced)} every fibre is rigid and reduced",
            f"{yn(self.unique_cleavage)} the canonical cleavage is the only cleavage",
            f"{yn(self.cartesian_iff_strong)} Cartesian and strongly Cartesian morphisms coincide",
        ]
        out.extend(f"  witness: {w}" for w in self.witnesses)
        return out


def verify_theorem(d: BaseDiagram | AutomataOver, **kwargs) -> TheoremReport:
    c = d if isinstance(d, AutomataOver) else build_total_category(d, **kwargs)
    witnesses: list[str] = []

    failures = fibred_failures(c)
    witnesses += failures
    fibred = not failures

    canonical = canonical_cleavage(c)
    failures = splitting_failures(c, canonical)
    witnesses += failures
    splitting = not failures

    rigid_reduced = True
    for s in range(c.base.num_objects):
        fib = fiber(c, s)
        if not (is_rigid(fib) and is_reduced(fib)):
            rigid_reduced = False
            witnesses.append(f"fibre over base object {s} is not rigid and reduced")

    unique = True
    for key, opts in cleavage_options(c).items():
        if opts != [canonical.choices[key]]:
            unique = False
            f, xi = key
            witnesses.append(
                f"inverse images of {c.total.objects[xi]!r} by {c.base.labels[f]!r}: {opts}, "
                f"canonical {canonical.choices[key]}"
            )
            break

    iff = True
    for a in range(c.total.num_morphisms):
        if is_cartesian(c, a) != is_strongly_cartesian(c, a):
            iff = False
            witnesses.append(f"morphism {c.total.labels[a]!r} is Cartesian but not strongly Cartesian")
            break

    return TheoremReport(
        fibred,
        splitting,
        rigid_reduced,
        unique,
        iff,
        c.base.num_objects,
        c.base.num_morphisms,
        c.total.num_objects,
        c.total.num_morphisms,
        witnesses,
    )
