"""Graded quotients, localization at homogeneous sets, and products.

These are the carrier transformations the claim suite quantifies over.  Every
construction re-validates the axioms and grading of its output; a failure
there is an engine bug, not a finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .core import (
    AlgebraicSubset,
    CarrierError,
    EngineError,
    FiniteModule,
    FiniteRing,
    IntegrityError,
    colon_into_ring,
    product_module,
    product_span,
    relative_colon_scalars,
    span,
    validate_module_tables,
    validate_ring_tables,
)
from .grading import (
    Degree,
    GradedModule,
    GradedRing,
    GradingError,
    component_of,
    graded_module,
    graded_ring,
    is_graded_subset,
)
from .predicates import is_multiplication


class MultiplicativeSetError(EngineError):
    """Denominator set is not homogeneous or not closed."""


class NotMultiplicationError(EngineError):
    """Submodule products are only defined over multiplication scopes."""


@dataclass(frozen=True, eq=False)
class MultiplicativeSet:
    """Multiplicatively closed set of homogeneous elements containing one."""

    ring_graded: GradedRing
    elements: tuple[int, ...]
    generators: tuple[int, ...] = ()
    closed: bool = True

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiplicativeSet)
            and self.ring_graded is other.ring_graded
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((id(self.ring_graded), self.elements))

    def __repr__(self) -> str:
        return f"MultiplicativeSet({list(self.elements)})"


def multiplicative_closure(gr: GradedRing, generators: Iterable[int]) -> MultiplicativeSet:
    gens = tuple(sorted(set(generators)))
    hom = gr.hom_set
    for g in gens:
        if g not in hom:
            raise MultiplicativeSetError(f"generator {g} is not homogeneous")
    mul_rows = gr.ring.mul_rows
    elems = {gr.ring.one}
    frontier = [gr.ring.one, *gens]
    elems.update(gens)
    while frontier:
        x = frontier.pop()
        row = mul_rows[x]
        for y in list(elems):
            z = row[y]
            if z not in elems:
                elems.add(z)
                frontier.append(z)
    return MultiplicativeSet(gr, tuple(sorted(elems)), gens)


# ---------------------------------------------------------------------------
# Graded quotient

@dataclass(frozen=True, eq=False)
class QuotientModule:
    graded: GradedModule
    projection: tuple[int, ...]      # element of source -> class index
    representatives: tuple[int, ...]  # class index -> smallest source element

    def image_of(self, subset: AlgebraicSubset) -> AlgebraicSubset:
        elems = tuple(sorted({self.projection[x] for x in subset.elements}))
        return AlgebraicSubset("submodule", self.graded.module, elems)


def quotient_module(gm: GradedModule, k: AlgebraicSubset) -> QuotientModule:
    """Coset module by a graded submodule, graded by (component + k)/k."""
    mod = gm.module
    if k.kind != "submodule" or k.carrier is not mod:
        raise CarrierError("quotient requires a submodule of the module")
    ok, bad = is_graded_subset(gm, k)
    if not ok:
        raise GradingError("quotient-by-nongraded-submodule", bad)
    reps_per_elem = np.min(mod.add[:, list(k.elements)], axis=1)
    classes = np.unique(reps_per_elem)
    class_index = {int(rep): i for i, rep in enumerate(classes)}
    proj = tuple(class_index[int(r)] for r in reps_per_elem)
    proj_arr = np.zeros(mod.size, dtype=np.int32)
    for x, c in enumerate(proj):
        proj_arr[x] = c
    reps = tuple(int(r) for r in classes)
    add_q = proj_arr[mod.add[np.ix_(reps, reps)]]
    act_q = proj_arr[mod.act[:, reps]]
    qmod = FiniteModule(mod.ring, np.ascontiguousarray(add_q), np.ascontiguousarray(act_q),
                        proj[mod.zero], f"quotient({mod.construction})")
    validate_module_tables(mod.ring, qmod.add, qmod.act, qmod.zero)
    comps = {
        g: tuple(sorted({proj[m] for m in elems}))
        for g, elems in gm.grading.components
    }
    qgm = graded_module(gm.ring_graded, qmod, comps)
    return QuotientModule(qgm, proj, reps)


# ---------------------------------------------------------------------------
# Localization at a homogeneous multiplicative set

@dataclass(frozen=True, eq=False)
class LocalizedStructure:
    """One localized carrier: fraction classes plus the maps into them."""

    graded: GradedRing | GradedModule
    class_map: dict  # (numerator, denominator) -> class index
    base_map: tuple[int, ...]  # source element x -> class of x/1
    class_reps: tuple[tuple[int, int], ...]  # class index -> first (num, den) pair


@dataclass(frozen=True, eq=False)
class Localization:
    ring: LocalizedStructure
    module: LocalizedStructure
    source_ring: GradedRing
    source_module: GradedModule
    mult_set: MultiplicativeSet

    def transport_submodule(self, n: AlgebraicSubset) -> AlgebraicSubset:
        """Image of a submodule: span of its base-map image under the localized action."""
        loc_mod = self.module.graded.module
        image = sorted({self.module.base_map[x] for x in n.elements})
        out = span(loc_mod, "submodule", image)
        proper_here = not out.is_whole
        meets = self.mult_set.member_set & colon_into_ring(n, self.source_module.module).member_set
        if proper_here != (not meets):
            raise IntegrityError("localized properness law violated")
        return out

    def transport_ideal(self, i: AlgebraicSubset) -> AlgebraicSubset:
        loc_ring = self.ring.graded.ring
        image = sorted({self.ring.base_map[x] for x in i.elements})
        return span(loc_ring, "ideal", image)


def _fraction_classes(num_size: int, s_elems, equivalent):
    """Deterministic class numbering: pairs scanned lexicographically, each new
    class keyed by its first representative."""
    reps: list[tuple[int, int]] = []
    class_map: dict[tuple[int, int], int] = {}
    for r in range(num_size):
        for s in s_elems:
            pair = (r, s)
            for idx, rep in enumerate(reps):
                if equivalent(pair, rep):
                    class_map[pair] = idx
                    break
            else:
                class_map[pair] = len(reps)
                reps.append(pair)
    return class_map, tuple(reps)


def localize(gr: GradedRing, gm: GradedModule, s: MultiplicativeSet) -> Localization:
    """Graded fraction ring and module with the degree-difference rule.

    Pair equivalence is t*(r*s' - r'*s) = 0 for some t in the set, which is
    exact for finite rings with zero-divisors.
    """
    if s.ring_graded is not gr:
        raise MultiplicativeSetError("multiplicative set belongs to a different ring")
    if gm.ring_graded is not gr:
        raise CarrierError("module is graded over a different ring")
    ring, mod = gr.ring, gm.module
    s_elems = s.elements
    mul, radd = ring.mul_rows, ring.add_rows
    rneg = ring.neg

    killed_r = frozenset(
        x for x in range(ring.size) if any(mul[t][x] == ring.zero for t in s_elems)
    )

    def ring_equiv(p1, p2):
        r1, s1 = p1
        r2, s2 = p2
        return radd[mul[r1][s2]][rneg[mul[r2][s1]]] in killed_r

    rc_map, rc_reps = _fraction_classes(ring.size, s_elems, ring_equiv)
    n_r = len(rc_reps)
    add_t = np.empty((n_r, n_r), dtype=np.int32)
    mul_t = np.empty((n_r, n_r), dtype=np.int32)
    for i, (r1, s1) in enumerate(rc_reps):
        for j, (r2, s2) in enumerate(rc_reps):
            den = mul[s1][s2]
            add_t[i, j] = rc_map[(radd[mul[r1][s2]][mul[r2][s1]], den)]
            mul_t[i, j] = rc_map[(mul[r1][r2], den)]
    loc_ring = FiniteRing(np.ascontiguousarray(add_t), np.ascontiguousarray(mul_t),
                          rc_map[(ring.zero, ring.one)], rc_map[(ring.one, ring.one)],
                          f"localization({ring.construction})")
    validate_ring_tables(loc_ring.add, loc_ring.mul, loc_ring.zero, loc_ring.one)

    group = gr.group
    ring_comps: dict[Degree, set[int]] = {g: {loc_ring.zero} for g in group.elements}
    for den in s_elems:
        dg = gr.primary_degree(den)
        for g in group.elements:
            for num in gr.component(group.add(g, dg)):
                ring_comps[g].add(rc_map[(num, den)])
    loc_gr = graded_ring(loc_ring, group, {g: tuple(sorted(v)) for g, v in ring_comps.items()})

    mact, madd = mod.act_rows, mod.add_rows
    mneg = mod.neg
    killed_m = frozenset(
        x for x in range(mod.size) if any(mact[t][x] == mod.zero for t in s_elems)
    )

    def mod_equiv(p1, p2):
        m1, s1 = p1
        m2, s2 = p2
        return madd[mact[s2][m1]][mneg[mact[s1][m2]]] in killed_m

    mc_map, mc_reps = _fraction_classes(mod.size, s_elems, mod_equiv)
    n_m = len(mc_reps)
    madd_t = np.empty((n_m, n_m), dtype=np.int32)
    for i, (m1, s1) in enumerate(mc_reps):
        for j, (m2, s2) in enumerate(mc_reps):
            madd_t[i, j] = mc_map[(madd[mact[s2][m1]][mact[s1][m2]], mul[s1][s2])]
    mact_t = np.empty((n_r, n_m), dtype=np.int32)
    for i, (r1, s1) in enumerate(rc_reps):
        for j, (m2, s2) in enumerate(mc_reps):
            mact_t[i, j] = mc_map[(mact[r1][m2], mul[s1][s2])]
    loc_mod = FiniteModule(loc_ring, np.ascontiguousarray(madd_t), np.ascontiguousarray(mact_t),
                           mc_map[(mod.zero, ring.one)], f"localization({mod.construction})")
    validate_module_tables(loc_ring, loc_mod.add, loc_mod.act, loc_mod.zero)

    mod_comps: dict[Degree, set[int]] = {g: {loc_mod.zero} for g in group.elements}
    for den in s_elems:
        dg = gr.primary_degree(den)
        for g in group.elements:
            for num in gm.component(group.add(g, dg)):
                mod_comps[g].add(mc_map[(num, den)])
    loc_gm = graded_module(loc_gr, loc_mod, {g: tuple(sorted(v)) for g, v in mod_comps.items()})

    ring_base = tuple(rc_map[(x, ring.one)] for x in range(ring.size))
    mod_base = tuple(mc_map[(x, ring.one)] for x in range(mod.size))
    return Localization(
        ring=LocalizedStructure(loc_gr, rc_map, ring_base, rc_reps),
        module=LocalizedStructure(loc_gm, mc_map, mod_base, mc_reps),
        source_ring=gr,
        source_module=gm,
        mult_set=s,
    )


# ---------------------------------------------------------------------------
# Direct products

@dataclass(frozen=True, eq=False)
class ProductOfModules:
    graded: GradedModule
    left: GradedModule
    right: GradedModule

    def encode(self, a: int, b: int) -> int:
        return a * self.right.module.size + b

    def decode(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.right.module.size)

    def embed(self, n1: AlgebraicSubset | None, n2: AlgebraicSubset | None) -> AlgebraicSubset:
        """Sub-product N1 x N2 (None meaning the whole factor)."""
        e1 = n1.elements if n1 is not None else tuple(range(self.left.module.size))
        e2 = n2.elements if n2 is not None else tuple(range(self.right.module.size))
        elems = tuple(sorted(self.encode(a, b) for a in e1 for b in e2))
        return AlgebraicSubset("submodule", self.graded.module, elems)


def direct_product(gm1: GradedModule, gm2: GradedModule) -> ProductOfModules:
    gr = gm1.ring_graded
    if gm2.ring_graded is not gr and gm2.ring_graded.digest != gr.digest:
        raise CarrierError("direct product requires a common graded base ring")
    mod = product_module((gm1.module, gm2.module))
    s2 = gm2.module.size
    comps = {
        g: tuple(sorted(a * s2 + b for a in gm1.component(g) for b in gm2.component(g)))
        for g in gr.group.elements
    }
    return ProductOfModules(graded_module(gr, mod, comps), gm1, gm2)


# ---------------------------------------------------------------------------
# Products of submodules over multiplication scopes

def submodule_product(gm: GradedModule, n: AlgebraicSubset, k: AlgebraicSubset,
                      scope: str | Degree = "whole"):
    """Product via colon presentations: (n : M)(k : M) * M.

    Whole scope returns an AlgebraicSubset; component scope returns the sorted
    element tuple of an identity-degree-scalar submodule of that component.
    Undefined (error) when the scope is not a multiplication module.
    """
    mod = gm.module
    if scope == "whole":
        if not is_multiplication(gm, "whole").value:
            raise NotMultiplicationError("module is not a multiplication module")
        from .core import subset_product

        full = AlgebraicSubset("submodule", mod, tuple(range(mod.size)))
        cn = colon_into_ring(n, mod)
        ck = colon_into_ring(k, mod)
        return subset_product(subset_product(cn, ck), full)
    g: Degree = scope
    if not is_multiplication(gm, g).value:
        raise NotMultiplicationError(f"component {g} is not a multiplication module")
    return component_product(gm, set(component_of(gm, n, g)), set(component_of(gm, k, g)), g)


def component_product(gm: GradedModule, ng, kg, g: Degree) -> tuple[int, ...]:
    """(ng : Mg)(kg : Mg) * Mg inside the degree-g component (sets in, set out)."""
    ring, mod = gm.ring_graded.ring, gm.module
    re = gm.ring_graded.e_component
    mg = gm.component(g)
    a = relative_colon_scalars(mod.act_rows, re, mg, set(ng))
    b = relative_colon_scalars(mod.act_rows, re, mg, set(kg))
    ab = product_span(ring.add_rows, ring.zero, ring.mul_rows, a, b)
    return product_span(mod.add_rows, mod.zero, mod.act_rows, ab, mg)


def element_product(gm: GradedModule, m1: int, m2: int, g: Degree) -> tuple[int, ...]:
    """Product of two degree-g elements: the product of their scalar orbits."""
    act_rows = gm.module.act_rows
    re = gm.ring_graded.e_component
    orbit1 = {act_rows[r][m1] for r in re}
    orbit2 = {act_rows[r][m2] for r in re}
    return component_product(gm, orbit1, orbit2, g)


def presentation_independent(gm: GradedModule, n: AlgebraicSubset, k: AlgebraicSubset):
    """Check that the product is independent of the presenting graded ideals.

    Enumerates all graded ideals presenting n and k and compares the resulting
    products; returns (True, None) or (False, (i1, i2, product, canonical)).
    """
    from .core import subset_product
    from .grading import graded_ideals

    mod = gm.module
    full = AlgebraicSubset("submodule", mod, tuple(range(mod.size)))
    canonical = submodule_product(gm, n, k, "whole")
    pres_n = [i for i in graded_ideals(gm.ring_graded) if subset_product(i, full) == n]
    pres_k = [i for i in graded_ideals(gm.ring_graded) if subset_product(i, full) == k]
    for i1 in pres_n:
        for i2 in pres_k:
            prod = subset_product(subset_product(i1, i2), full)
            if prod.elements != canonical.elements:
                return False, (i1.elements, i2.elements, prod.elements, canonical.elements)
    return True, None
