"""Decision procedures with witness extraction for the prime-family predicates.

Every predicate is an exhaustive scan over homogeneous pairs, in ascending
index order, so the reported witness is always the lexicographically smallest
(scalar, vector) violation.  Vacuous truth (empty qualifying set) is flagged,
never hidden.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .core import (
    AlgebraicSubset,
    EngineError,
    colon_into_ring,
    product_span,
    relative_colon_scalars,
    span,
    subset_product,
)
from .grading import (
    Degree,
    GradedModule,
    GradedRing,
    GradingError,
    component_of,
    component_submodules,
    graded_submodules,
    is_graded_subset,
)


class ImproperSubmoduleError(EngineError):
    """Predicate requires a proper submodule."""


class ImproperComponentError(EngineError):
    """Predicate requires the degree component to be proper."""


class ImproperIdealError(EngineError):
    """Predicate requires a proper identity-degree ideal part."""


@dataclass(frozen=True)
class Witness:
    """Concrete violation datum, re-checkable against the raw definition."""

    location: str
    scalar: int | None = None
    scalar_degree: Degree | None = None
    vector: int | None = None           # second scalar for ideal-level predicates
    vector_degree: Degree | None = None
    component: Degree | None = None     # degree parameter of component-scoped predicates
    aux: tuple[tuple[str, Any], ...] = ()

    def aux_map(self) -> dict:
        return dict(self.aux)

    def as_json(self) -> dict:
        out: dict[str, Any] = {"location": self.location}
        if self.scalar is not None:
            out["scalar"] = self.scalar
        if self.scalar_degree is not None:
            out["scalar_degree"] = list(self.scalar_degree)
        if self.vector is not None:
            out["vector"] = self.vector
        if self.vector_degree is not None:
            out["vector_degree"] = list(self.vector_degree)
        if self.component is not None:
            out["component"] = list(self.component)
        if self.aux:
            out["aux"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.aux}
        return out


@dataclass(frozen=True)
class Verdict:
    """Predicate outcome; false verdicts always carry a witness."""

    value: bool
    vacuous: bool = False
    witness: Witness | None = None

    def __post_init__(self):
        if not self.value and self.witness is None:
            raise EngineError("false verdict without witness")
        if self.vacuous and not self.value:
            raise EngineError("vacuous verdict must be true")

    def as_json(self) -> dict:
        out: dict[str, Any] = {"value": self.value, "vacuous": self.vacuous}
        if self.witness is not None:
            out["witness"] = self.witness.as_json()
        return out


def _require_proper_graded(gm: GradedModule, n: AlgebraicSubset) -> None:
    if n.kind != "submodule" or n.carrier is not gm.module:
        raise EngineError("predicate target must be a submodule of the graded module")
    if n.is_whole:
        raise ImproperSubmoduleError("submodule equals the whole module")
    ok, bad = is_graded_subset(gm, n)
    if not ok:
        raise GradingError("subset-not-graded", bad)


def scale_by_e_part(gm: GradedModule, ideal: AlgebraicSubset, n: AlgebraicSubset) -> AlgebraicSubset:
    """Product of the ideal's identity-degree part with a submodule.

    Routed through the ideal generated by that part; equal to the additive
    span of the pairwise products since the submodule absorbs ring scalars.
    """
    gr = gm.ring_graded
    e_part = component_of(gr, ideal, gr.group.identity)
    return subset_product(span(gr.ring, "ideal", e_part), n)


def _module_scan(gm: GradedModule, nset: frozenset[int], excluded, location: str,
                 colon_set: frozenset[int]) -> Verdict:
    act_rows = gm.module.act_rows
    gr = gm.ring_graded
    for r in gr.hom:
        if r in colon_set:
            continue
        row = act_rows[r]
        for m in gm.hom:
            p = row[m]
            if p in nset and p not in excluded and m not in nset:
                return Verdict(False, witness=Witness(
                    location=location,
                    scalar=r, scalar_degree=gr.primary_degree(r),
                    vector=m, vector_degree=gm.primary_degree(m),
                ))
    return Verdict(True)


def graded_prime_scan(gm: GradedModule, n: AlgebraicSubset, excluded,
                      location: str, *, vacuous: bool = False) -> Verdict:
    """Shared scan: no homogeneous r*m may land in n minus excluded unless
    m is in n or r carries the whole module into n."""
    if vacuous:
        return Verdict(True, vacuous=True)
    colon = colon_into_ring(n, gm.module).member_set
    return _module_scan(gm, n.member_set, excluded, location, colon)


def is_graded_prime(gm: GradedModule, n: AlgebraicSubset) -> Verdict:
    _require_proper_graded(gm, n)
    return graded_prime_scan(gm, n, frozenset(), "is_graded_prime")


def is_graded_weakly_prime(gm: GradedModule, n: AlgebraicSubset) -> Verdict:
    _require_proper_graded(gm, n)
    zero = frozenset({gm.module.zero})
    return graded_prime_scan(gm, n, zero, "is_graded_weakly_prime",
                             vacuous=n.member_set <= zero)


def is_graded_ie_prime(gm: GradedModule, n: AlgebraicSubset, ideal: AlgebraicSubset) -> Verdict:
    _require_proper_graded(gm, n)
    scaled = scale_by_e_part(gm, ideal, n).member_set
    return graded_prime_scan(gm, n, scaled, "is_graded_ie_prime",
                             vacuous=n.member_set <= scaled)


# ---------------------------------------------------------------------------
# Component-scoped predicates (identity-degree scalars acting on one component)

def component_context(gm: GradedModule, n: AlgebraicSubset, g: Degree):
    """(Re, Mg, Ng, colon_g) with colon_g = scalars carrying Mg into Ng."""
    gr = gm.ring_graded
    re = gr.e_component
    mg = gm.component(g)
    ng = set(component_of(gm, n, g))
    colon_g = frozenset(relative_colon_scalars(gm.module.act_rows, re, mg, ng))
    return re, mg, ng, colon_g


def e_scaled_component(gm: GradedModule, ideal: AlgebraicSubset, ng) -> frozenset[int]:
    """Additive span of the products (identity-degree ideal part) * (component set)."""
    gr = gm.ring_graded
    ie = component_of(gr, ideal, gr.group.identity)
    mod = gm.module
    return frozenset(product_span(mod.add_rows, mod.zero, mod.act_rows, ie, sorted(ng)))


def component_prime_scan(gm: GradedModule, g: Degree, ng, excluded, colon_g,
                         location: str, *, vacuous: bool = False) -> Verdict:
    if vacuous:
        return Verdict(True, vacuous=True)
    gr = gm.ring_graded
    act_rows = gm.module.act_rows
    e = gr.group.identity
    for r in gr.e_component:
        if r in colon_g:
            continue
        row = act_rows[r]
        for m in gm.component(g):
            p = row[m]
            if p in ng and p not in excluded and m not in ng:
                return Verdict(False, witness=Witness(
                    location=location, scalar=r, scalar_degree=e,
                    vector=m, vector_degree=g, component=g,
                ))
    return Verdict(True)


def _require_proper_component(gm: GradedModule, n: AlgebraicSubset, g: Degree):
    if n.kind != "submodule" or n.carrier is not gm.module:
        raise EngineError("predicate target must be a submodule of the graded module")
    ng = set(component_of(gm, n, g))
    if ng == set(gm.component(g)):
        raise ImproperComponentError(f"component at {g} equals the whole component")
    return ng


def is_g_prime(gm: GradedModule, n: AlgebraicSubset, g: Degree) -> Verdict:
    ng = _require_proper_component(gm, n, g)
    _, mg, _, colon_g = component_context(gm, n, g)
    return component_prime_scan(gm, g, ng, frozenset(), colon_g, "is_g_prime")


def is_g_ie_prime(gm: GradedModule, n: AlgebraicSubset, ideal: AlgebraicSubset, g: Degree) -> Verdict:
    ng = _require_proper_component(gm, n, g)
    _, mg, _, colon_g = component_context(gm, n, g)
    scaled = e_scaled_component(gm, ideal, ng)
    return component_prime_scan(gm, g, ng, scaled, colon_g, "is_g_ie_prime",
                                vacuous=ng <= scaled)


# ---------------------------------------------------------------------------
# Ideal-level predicate inside the identity-degree subring

def e_ideal_scan(gr: GradedRing, je, ie_je, location: str = "is_e_Ie_prime_ideal",
                 aux: tuple = ()) -> Verdict:
    """Scan r,s over the identity-degree subring for rs in je minus ie_je."""
    jset = frozenset(je)
    if jset <= ie_je:
        return Verdict(True, vacuous=True)
    mul_rows = gr.ring.mul_rows
    e = gr.group.identity
    for r in gr.e_component:
        if r in jset:
            continue
        row = mul_rows[r]
        for s in gr.e_component:
            if s in jset:
                continue
            p = row[s]
            if p in jset and p not in ie_je:
                return Verdict(False, witness=Witness(
                    location=location, scalar=r, scalar_degree=e,
                    vector=s, vector_degree=e, component=e, aux=aux,
                ))
    return Verdict(True)


def is_e_ie_prime_ideal(gr: GradedRing, j: AlgebraicSubset, ideal: AlgebraicSubset) -> Verdict:
    if j.kind != "ideal" or j.carrier is not gr.ring:
        raise EngineError("predicate target must be an ideal of the graded ring")
    je = component_of(gr, j, gr.group.identity)
    if set(je) == set(gr.e_component):
        raise ImproperIdealError("identity-degree part equals the identity-degree subring")
    ie = component_of(gr, ideal, gr.group.identity)
    ring = gr.ring
    ie_je = frozenset(product_span(ring.add_rows, ring.zero, ring.mul_rows, ie, je))
    return e_ideal_scan(gr, je, ie_je, aux=(("j_elements", j.elements),))


# ---------------------------------------------------------------------------
# Multiplication property

@lru_cache(maxsize=None)
def is_multiplication(gm: GradedModule, scope: str | Degree = "whole") -> Verdict:
    """Whole scope: every graded submodule n equals (n : M) * M.

    Component scope (a degree): every identity-degree-scalar submodule k of the
    component equals (k : component) * component.
    """
    mod = gm.module
    if scope == "whole":
        full = AlgebraicSubset("submodule", mod, tuple(range(mod.size)))
        for n in graded_submodules(gm):
            back = subset_product(colon_into_ring(n, mod), full)
            if back.elements != n.elements:
                return Verdict(False, witness=Witness(
                    location="is_multiplication:whole",
                    aux=(("submodule", n.elements), ("product", back.elements)),
                ))
        return Verdict(True)
    g: Degree = scope
    re = gm.ring_graded.e_component
    mg = gm.component(g)
    for k in component_submodules(gm, g):
        kset = set(k)
        colon = relative_colon_scalars(mod.act_rows, re, mg, kset)
        back = product_span(mod.add_rows, mod.zero, mod.act_rows, colon, mg)
        if back != k:
            return Verdict(False, witness=Witness(
                location="is_multiplication:component", component=g,
                aux=(("submodule", k), ("product", back)),
            ))
    return Verdict(True)
