"""Falsifiable claims over enumerated instance corpora.

Each claim is an implication or equivalence built from the prime-family
predicates.  Claims are never assumed: hypotheses are evaluated first
(instances failing them are counted as filtered), conclusions are scanned
exhaustively, and every falsification carries a witness that is re-verified
against the raw definitions before the suite will report it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from functools import cached_property, lru_cache
from typing import Any, Iterable


from .core import (
    MAX_CARRIER,
    AlgebraicSubset,
    BoundExceededError,
    EngineError,
    IntegrityError,
    colon_into_ring,
    cyclic_ring,
    group_ring,
    power_reaches,
    product_module,
    product_span,
    relative_colon_scalars,
    ring_as_module,
)
from .constructions import (
    MultiplicativeSet,
    direct_product,
    localize,
    multiplicative_closure,
    quotient_module,
)
from .grading import (
    Degree,
    GradedModule,
    GradedRing,
    GradingGroup,
    component_of,
    graded_ideals,
    graded_module,
    graded_ring,
    graded_submodules,
    graded_zero_divisors,
    group_ring_components,
)
from .predicates import (
    Verdict,
    Witness,
    component_prime_scan,
    e_ideal_scan,
    e_scaled_component,
    graded_prime_scan,
    is_graded_ie_prime,
    is_graded_prime,
    is_multiplication,
    scale_by_e_part,
)


class MissingExtrasError(EngineError):
    """The claim needs an instance component that is absent."""


CLAIM_IDS: tuple[str, ...] = (
    "T2_4", "C2_5", "C2_6", "T2_7", "T2_8", "L2_9", "T2_10", "T2_11",
    "T2_12", "C2_13", "T2_14", "T2_15", "T2_16i", "T2_16ii", "PRIME_IMPLIES_IE",
)

DEFAULT_REQUIRED: tuple[str, ...] = (
    "T2_4", "C2_5", "C2_6", "T2_7", "T2_8", "L2_9", "T2_10", "T2_11",
    "T2_12", "C2_13", "T2_15", "PRIME_IMPLIES_IE",
)

# One-line statement of what each claim asserts about an instance.
CLAIM_STATEMENTS: dict[str, str] = {
    "T2_4": "per degree: an e-part-prime component is prime, or its colon-product lies in the e-scaled part",
    "C2_5": "per degree: a 0-prime component with nonzero colon-product is prime",
    "C2_6": "per degree (multiplication scope): e-part-prime but not prime forces the component square into the e-scaled part",
    "T2_7": "per degree: three characterizations of e-part-prime components agree",
    "T2_8": "module level: e-part-prime iff weakly prime in the quotient by the e-scaled part",
    "L2_9": "per degree (multiplication scope, colon inside e-part): radical of the scaled colon times the component equals the e-scaled part",
    "T2_10": "per degree (side condition): the colon ideal of an e-part-prime component is an e-part-prime ideal",
    "T2_11": "ring level: four characterizations of e-part-prime ideal parts agree",
    "T2_12": "per degree (multiplication scope, side condition): products of component pairs respect the e-part-prime component",
    "C2_13": "per degree (multiplication scope, side condition): element products respect the e-part-prime component",
    "T2_14": "an e-part-prime submodule crossed with a full second module stays e-part-prime in the product",
    "T2_15": "module level: e-part-prime iff every scaled component of every graded submodule respects it",
    "T2_16i": "localizing at a disjoint denominator set preserves e-part-prime submodules",
    "T2_16ii": "e-part-primeness descends from the localization when denominators avoid quotient zero-divisors",
    "PRIME_IMPLIES_IE": "every graded prime submodule is e-part-prime for every graded ideal",
}

_CLAIM_INDEX = {c: i for i, c in enumerate(CLAIM_IDS)}


# ---------------------------------------------------------------------------
# Configs

@dataclass(frozen=True)
class CorpusConfig:
    cyclic_max: int = 16
    group_ring_coeffs: tuple[int, ...] = (2, 3)
    product_axis_max: int = 6
    grading_orders: tuple[int, ...] = (2,)
    max_carrier: int = MAX_CARRIER
    with_second_module: bool = True
    with_mult_sets: bool = True

    def as_json(self) -> dict:
        return {
            "cyclic_max": self.cyclic_max,
            "group_ring_coeffs": list(self.group_ring_coeffs),
            "product_axis_max": self.product_axis_max,
            "grading_orders": list(self.grading_orders),
            "max_carrier": self.max_carrier,
            "with_second_module": self.with_second_module,
            "with_mult_sets": self.with_mult_sets,
        }

    @staticmethod
    def from_json(d: dict) -> "CorpusConfig":
        base = CorpusConfig()
        return CorpusConfig(
            cyclic_max=int(d.get("cyclic_max", base.cyclic_max)),
            group_ring_coeffs=tuple(d.get("group_ring_coeffs", base.group_ring_coeffs)),
            product_axis_max=int(d.get("product_axis_max", base.product_axis_max)),
            grading_orders=tuple(d.get("grading_orders", base.grading_orders)),
            max_carrier=int(d.get("max_carrier", base.max_carrier)),
            with_second_module=bool(d.get("with_second_module", base.with_second_module)),
            with_mult_sets=bool(d.get("with_mult_sets", base.with_mult_sets)),
        )


@dataclass(frozen=True)
class SuiteConfig:
    corpus: CorpusConfig = CorpusConfig()
    claims: tuple[str, ...] = CLAIM_IDS
    required: tuple[str, ...] = DEFAULT_REQUIRED
    localized_ideal: str = "base"  # or "localized"
    jobs: int = 1

    def __post_init__(self):
        for c in self.claims + self.required:
            if c not in _CLAIM_INDEX:
                raise EngineError(f"unknown claim id {c!r}")
        if self.localized_ideal not in ("base", "localized"):
            raise EngineError(f"unknown localized-ideal variant {self.localized_ideal!r}")

    def as_json(self) -> dict:
        return {
            "corpus": self.corpus.as_json(),
            "claims": list(self.claims),
            "required": list(self.required),
            "localized_ideal": self.localized_ideal,
            "jobs": self.jobs,
        }

    @staticmethod
    def from_json(d: dict) -> "SuiteConfig":
        claims = d.get("claims", list(CLAIM_IDS))
        if claims == "all" or claims == ["all"]:
            claims = list(CLAIM_IDS)
        return SuiteConfig(
            corpus=CorpusConfig.from_json(d.get("corpus", {})),
            claims=tuple(claims),
            required=tuple(d.get("required", list(DEFAULT_REQUIRED))),
            localized_ideal=d.get("localized_ideal", "base"),
            jobs=int(d.get("jobs", 1)),
        )


# ---------------------------------------------------------------------------
# Instances

@dataclass(frozen=True, eq=False)
class Instance:
    ring_graded: GradedRing
    module_graded: GradedModule
    ideal: AlgebraicSubset
    submodule: AlgebraicSubset
    module2: GradedModule | None = None
    mult_set: MultiplicativeSet | None = None
    degree: Degree | None = None
    submodule_k: AlgebraicSubset | None = None
    submodule_l: AlgebraicSubset | None = None

    @cached_property
    def id(self) -> str:
        payload = {
            "group": list(self.ring_graded.group.orders),
            "module": self.module_graded.digest,
            "ideal": list(self.ideal.elements),
            "submodule": list(self.submodule.elements),
            "module2": self.module2.digest if self.module2 is not None else None,
            "mult_set": list(self.mult_set.elements) if self.mult_set is not None else None,
            "degree": list(self.degree) if self.degree is not None else None,
        }
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def describe(self) -> dict:
        out = {
            "ring": self.ring_graded.ring.construction,
            "module": self.module_graded.module.construction,
            "grading_group": list(self.ring_graded.group.orders),
            "ideal": list(self.ideal.elements),
            "submodule": list(self.submodule.elements),
        }
        if self.module2 is not None:
            out["module2"] = self.module2.module.construction
        if self.mult_set is not None:
            out["mult_set"] = list(self.mult_set.elements)
        if self.degree is not None:
            out["degree"] = list(self.degree)
        return out

    def __repr__(self) -> str:
        return f"Instance({self.id}, {self.describe()})"


@dataclass(frozen=True, eq=False)
class ClaimReport:
    claim_id: str
    instance: Instance
    hypotheses_met: bool
    conclusion_holds: bool | None = None
    witness: Witness | None = None
    vacuous: bool = False
    variant: str | None = None
    filter_reason: str | None = None

    def __post_init__(self):
        if not self.hypotheses_met and self.conclusion_holds is not None:
            raise EngineError("filtered claims must not carry a conclusion")
        if self.conclusion_holds is False and self.witness is None:
            raise EngineError("falsified claim without witness")

    def as_json(self) -> dict:
        out: dict[str, Any] = {
            "claim": self.claim_id,
            "instance": self.instance.id,
            "hypotheses_met": self.hypotheses_met,
        }
        if self.hypotheses_met:
            out["conclusion_holds"] = self.conclusion_holds
            out["vacuous"] = self.vacuous
        else:
            out["filter_reason"] = self.filter_reason or "hypotheses not met"
        if self.witness is not None:
            out["witness"] = self.witness.as_json()
        if self.variant is not None:
            out["variant"] = self.variant
        return out


# ---------------------------------------------------------------------------
# Corpus enumeration

@lru_cache(maxsize=None)
def _cyclic_carrier(n: int, orders: tuple[int, ...]):
    gr = graded_ring(cyclic_ring(n), GradingGroup(orders))
    gm = graded_module(gr, ring_as_module(gr.ring))
    return gr, gm


@lru_cache(maxsize=None)
def _group_ring_carrier(coeff: int, orders: tuple[int, ...]):
    group = GradingGroup(orders)
    ring = group_ring(cyclic_ring(coeff), orders)
    comps = group_ring_components(ring, group)
    gr = graded_ring(ring, group, comps)
    gm = graded_module(gr, ring_as_module(ring), comps)
    return gr, gm


@lru_cache(maxsize=None)
def _axis_product_carrier(n: int, orders: tuple[int, ...]):
    group = GradingGroup(orders)
    if group.size < 2:
        raise EngineError("axis grading needs at least two degrees")
    gr = graded_ring(cyclic_ring(n), group)
    base = ring_as_module(gr.ring)
    mod = product_module((base, base))
    comps: dict[Degree, tuple[int, ...]] = {g: (mod.zero,) for g in group.elements}
    comps[group.identity] = tuple(sorted(a * n for a in range(n)))
    comps[group.elements[1]] = tuple(range(n))
    gm = graded_module(gr, mod, comps)
    return gr, gm


@lru_cache(maxsize=None)
def _mult_set_family(gr: GradedRing) -> tuple[MultiplicativeSet, ...]:
    """Deduplicated sets generated by one homogeneous element plus the units."""
    units = tuple(u for u in gr.ring.units if u in gr.hom_set)
    seen: dict[tuple[int, ...], MultiplicativeSet] = {}
    for s in gr.hom:
        ms = multiplicative_closure(gr, (s,) + units)
        seen.setdefault(ms.elements, ms)
    return tuple(seen[k] for k in sorted(seen))


def _carriers(cfg: CorpusConfig):
    orders = cfg.grading_orders
    group_size = 1
    for o in orders:
        group_size *= o
    bound = min(cfg.max_carrier, MAX_CARRIER)

    def check(size, what):
        if size > bound:
            raise BoundExceededError(f"carrier {what} exceeds size policy {bound}")

    out = []
    for n in range(2, cfg.cyclic_max + 1):
        check(n, f"cyclic({n})")
        out.append(_cyclic_carrier(n, orders))
    for c in cfg.group_ring_coeffs:
        check(c ** group_size, f"group_ring(cyclic({c}))")
        out.append(_group_ring_carrier(c, orders))
    for n in range(2, cfg.product_axis_max + 1):
        check(n * n, f"product(cyclic({n}))")
        out.append(_axis_product_carrier(n, orders))
    return out


def enumerate_corpus(cfg: CorpusConfig) -> list[Instance]:
    """Deterministic, duplicate-free instance stream, ordered by content id."""
    instances: dict[str, Instance] = {}
    for gr, gm in _carriers(cfg):
        ideals = graded_ideals(gr)
        subs = [s for s in graded_submodules(gm) if not s.is_whole]
        for n in subs:
            for i in ideals:
                base = Instance(gr, gm, i, n)
                instances.setdefault(base.id, base)
                if cfg.with_second_module and gm.module.size ** 2 <= cfg.max_carrier:
                    paired = Instance(gr, gm, i, n, module2=gm)
                    instances.setdefault(paired.id, paired)
                if cfg.with_mult_sets:
                    for ms in _mult_set_family(gr):
                        si = Instance(gr, gm, i, n, mult_set=ms)
                        instances.setdefault(si.id, si)
    return [instances[k] for k in sorted(instances)]


def claim_family(claim_id: str) -> str:
    if claim_id == "T2_14":
        return "product"
    if claim_id in ("T2_16i", "T2_16ii"):
        return "localization"
    return "base"


def instance_family(inst: Instance) -> str:
    if inst.module2 is not None:
        return "product"
    if inst.mult_set is not None:
        return "localization"
    return "base"


# ---------------------------------------------------------------------------
# Shared cached computations

@lru_cache(maxsize=None)
def _e_scaled(gm: GradedModule, ideal: AlgebraicSubset, n: AlgebraicSubset) -> AlgebraicSubset:
    return scale_by_e_part(gm, ideal, n)


@lru_cache(maxsize=None)
def _quotient_cached(gm: GradedModule, k: AlgebraicSubset):
    return quotient_module(gm, k)


@lru_cache(maxsize=None)
def _localize_cached(gr: GradedRing, gm: GradedModule, s: MultiplicativeSet):
    return localize(gr, gm, s)


@lru_cache(maxsize=None)
def _product_cached(gm1: GradedModule, gm2: GradedModule):
    return direct_product(gm1, gm2)


@lru_cache(maxsize=None)
def _component_product_cached(gm: GradedModule, ng: frozenset, kg: frozenset, g: Degree) -> tuple[int, ...]:
    from .constructions import component_product

    return component_product(gm, ng, kg, g)


@dataclass(frozen=True, eq=False)
class _DegreeData:
    """Per-degree working sets for component-scoped claims."""

    g: Degree
    proper: bool
    re: tuple[int, ...]
    mg: tuple[int, ...]
    ng: frozenset[int]
    colon_g: tuple[int, ...]
    ie_ng: frozenset[int]
    ie: tuple[int, ...]

    @cached_property
    def colon_set(self) -> frozenset[int]:
        return frozenset(self.colon_g)


def _degree_data(gm: GradedModule, ideal: AlgebraicSubset, n: AlgebraicSubset, g: Degree) -> _DegreeData:
    gr = gm.ring_graded
    re = gr.e_component
    mg = gm.component(g)
    ng = frozenset(component_of(gm, n, g))
    colon_g = relative_colon_scalars(gm.module.act_rows, re, mg, ng)
    ie = component_of(gr, ideal, gr.group.identity)
    ie_ng = e_scaled_component(gm, ideal, ng)
    return _DegreeData(g, ng != frozenset(mg), re, mg, ng, colon_g, ie_ng, ie)


def _g_ie_verdict(gm: GradedModule, dd: _DegreeData) -> Verdict:
    return component_prime_scan(gm, dd.g, dd.ng, dd.ie_ng, dd.colon_set,
                                "is_g_ie_prime", vacuous=dd.ng <= dd.ie_ng)


def _g_prime_verdict(gm: GradedModule, dd: _DegreeData) -> Verdict:
    return component_prime_scan(gm, dd.g, dd.ng, frozenset(), dd.colon_set, "is_g_prime")


def _degrees(inst: Instance) -> tuple[Degree, ...]:
    if inst.degree is not None:
        return (inst.degree,)
    return inst.ring_graded.group.elements


def _side_condition(gm: GradedModule, dd: _DegreeData) -> bool:
    """(e-scaled component : Mg) equals e-part * (component colon)."""
    ring = gm.ring_graded.ring
    lhs = relative_colon_scalars(gm.module.act_rows, dd.re, dd.mg, dd.ie_ng)
    rhs = product_span(ring.add_rows, ring.zero, ring.mul_rows, dd.ie, dd.colon_g)
    return lhs == rhs


def _first_not_in(elems: Iterable[int], target) -> int | None:
    for x in elems:
        if x not in target:
            return x
    return None


# ---------------------------------------------------------------------------
# Claim evaluations

def _report(inst, cid, *, met, concl=None, witness=None, vacuous=False,
            variant=None, reason=None) -> ClaimReport:
    return ClaimReport(cid, inst, met, concl, witness, vacuous, variant, reason)


def _check_t2_4(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    vac, any_eval = True, False
    for g in _degrees(inst):
        dd = _degree_data(gm, I, N, g)
        if not dd.proper:
            continue
        hyp = _g_ie_verdict(gm, dd)
        if not hyp.value:
            continue
        any_eval = True
        vac = vac and hyp.vacuous
        gp = _g_prime_verdict(gm, dd)
        if gp.value:
            continue
        mod = gm.module
        prod = product_span(mod.add_rows, mod.zero, mod.act_rows, dd.colon_g, sorted(dd.ng))
        if set(prod) <= dd.ie_ng:
            continue
        pair = next((t, x) for t in dd.colon_g for x in sorted(dd.ng)
                    if mod.act_rows[t][x] not in dd.ie_ng)
        w = replace(gp.witness, location="T2_4",
                    aux=(("colon_scalar", pair[0]), ("component_element", pair[1])))
        return _report(inst, "T2_4", met=True, concl=False, witness=w, vacuous=vac)
    if not any_eval:
        return _report(inst, "T2_4", met=False, reason="no degree with a proper e-part-prime component")
    return _report(inst, "T2_4", met=True, concl=True, vacuous=vac)


def _check_c2_5(inst: Instance) -> ClaimReport:
    gm, N = inst.module_graded, inst.submodule
    mod = gm.module
    zero_excl = frozenset({mod.zero})
    any_eval = False
    for g in _degrees(inst):
        dd = _degree_data(gm, inst.ideal, N, g)
        if not dd.proper:
            continue
        zero_prime = component_prime_scan(gm, g, dd.ng, zero_excl, dd.colon_set,
                                          "is_g_ie_prime", vacuous=dd.ng <= zero_excl)
        if not zero_prime.value:
            continue
        prod = product_span(mod.add_rows, mod.zero, mod.act_rows, dd.colon_g, sorted(dd.ng))
        if set(prod) == {mod.zero}:
            continue
        any_eval = True
        gp = _g_prime_verdict(gm, dd)
        if gp.value:
            continue
        pair = next((t, x) for t in dd.colon_g for x in sorted(dd.ng)
                    if mod.act_rows[t][x] != mod.zero)
        w = replace(gp.witness, location="C2_5",
                    aux=(("colon_scalar", pair[0]), ("component_element", pair[1])))
        return _report(inst, "C2_5", met=True, concl=False, witness=w)
    if not any_eval:
        return _report(inst, "C2_5", met=False,
                       reason="no degree with a proper 0-prime component and nonzero colon-product")
    return _report(inst, "C2_5", met=True, concl=True)


def _check_c2_6(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    vac, any_eval = True, False
    for g in _degrees(inst):
        dd = _degree_data(gm, I, N, g)
        if not dd.proper or not is_multiplication(gm, g).value:
            continue
        hyp = _g_ie_verdict(gm, dd)
        if not hyp.value or _g_prime_verdict(gm, dd).value:
            continue
        any_eval = True
        vac = vac and hyp.vacuous
        square = _component_product_cached(gm, dd.ng, dd.ng, g)
        bad = _first_not_in(square, dd.ie_ng)
        if bad is not None:
            w = Witness(location="C2_6", vector=bad, vector_degree=g, component=g,
                        aux=(("square", tuple(square)),))
            return _report(inst, "C2_6", met=True, concl=False, witness=w, vacuous=vac)
    if not any_eval:
        return _report(inst, "C2_6", met=False,
                       reason="no degree that is multiplication, e-part-prime, and not prime")
    return _report(inst, "C2_6", met=True, concl=True, vacuous=vac)


def _t2_7_statement_ii(gm: GradedModule, dd: _DegreeData):
    act = gm.module.act_rows
    for r in dd.re:
        if r in dd.colon_set:
            continue
        row = act[r]
        union = set(m for m in dd.mg if m in dd.ng or row[m] in dd.ie_ng)
        for m in dd.mg:
            if (row[m] in dd.ng) != (m in union):
                return False, (r, m)
    return True, None


def _t2_7_statement_iii(gm: GradedModule, dd: _DegreeData):
    act = gm.module.act_rows
    for r in dd.re:
        if r in dd.colon_set:
            continue
        row = act[r]
        colon_r = [m for m in dd.mg if row[m] in dd.ng]
        if set(colon_r) == dd.ng:
            continue
        ie_colon_r = [m for m in dd.mg if row[m] in dd.ie_ng]
        if colon_r == ie_colon_r:
            continue
        xa = _first_not_in(colon_r, dd.ng)
        xb = _first_not_in(colon_r, set(ie_colon_r))
        return False, (r, xa, xb)
    return True, None


def _check_t2_7(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    vac, any_eval = True, False
    for g in _degrees(inst):
        dd = _degree_data(gm, I, N, g)
        if not dd.proper:
            continue
        any_eval = True
        v1 = _g_ie_verdict(gm, dd)
        vac = vac and v1.vacuous
        s2, ev2 = _t2_7_statement_ii(gm, dd)
        s3, ev3 = _t2_7_statement_iii(gm, dd)
        vals = (v1.value, s2, s3)
        if len(set(vals)) == 1:
            continue
        for (src, tgt), (sv, tv) in zip((("i", "ii"), ("ii", "iii"), ("iii", "i")),
                                        ((vals[0], vals[1]), (vals[1], vals[2]), (vals[2], vals[0]))):
            if sv and not tv:
                if tgt == "ii":
                    r, m = ev2
                    w = Witness(location=f"T2_7:{src}=>ii", scalar=r, vector=m, component=g)
                elif tgt == "iii":
                    r, xa, xb = ev3
                    w = Witness(location=f"T2_7:{src}=>iii", scalar=r, component=g,
                                aux=(("not_component", xa), ("not_scaled_colon", xb)))
                else:
                    w = replace(v1.witness, location=f"T2_7:{src}=>i")
                return _report(inst, "T2_7", met=True, concl=False, witness=w, vacuous=False)
    if not any_eval:
        return _report(inst, "T2_7", met=False, reason="no degree with a proper component")
    return _report(inst, "T2_7", met=True, concl=True, vacuous=vac)


def _check_t2_8(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    lhs = is_graded_ie_prime(gm, N, I)
    scaled = _e_scaled(gm, I, N)
    q = _quotient_cached(gm, scaled)
    n_im = q.image_of(N)
    from .predicates import is_graded_weakly_prime

    rhs = is_graded_weakly_prime(q.graded, n_im)
    if lhs.value == rhs.value:
        return _report(inst, "T2_8", met=True, concl=True, vacuous=lhs.vacuous)
    if lhs.value and not rhs.value:
        wq = rhs.witness
        w = Witness(location="T2_8:i=>ii", scalar=wq.scalar, scalar_degree=wq.scalar_degree,
                    vector=q.representatives[wq.vector], vector_degree=wq.vector_degree,
                    aux=(("quotient_class", wq.vector),))
        return _report(inst, "T2_8", met=True, concl=False, witness=w)
    w = replace(lhs.witness, location="T2_8:ii=>i")
    return _report(inst, "T2_8", met=True, concl=False, witness=w)


def _check_l2_9(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    ring, mod = gm.ring_graded.ring, gm.module
    vac, any_eval = True, False
    for g in _degrees(inst):
        dd = _degree_data(gm, I, N, g)
        if not dd.proper or not is_multiplication(gm, g).value:
            continue
        if not set(dd.colon_g) <= set(dd.ie):
            continue
        hyp = _g_ie_verdict(gm, dd)
        if not hyp.value:
            continue
        any_eval = True
        vac = vac and hyp.vacuous
        scaled_colon = relative_colon_scalars(mod.act_rows, dd.re, dd.mg, dd.ie_ng)
        radical = tuple(x for x in dd.re if power_reaches(ring.mul_rows, x, set(scaled_colon)))
        lhs = product_span(mod.add_rows, mod.zero, mod.act_rows, radical, sorted(dd.ng))
        if set(lhs) == dd.ie_ng:
            continue
        missing = _first_not_in(sorted(dd.ie_ng), set(lhs))
        extra = _first_not_in(lhs, dd.ie_ng)
        bad = missing if missing is not None else extra
        side = "missing-from-product" if missing is not None else "extra-in-product"
        w = Witness(location="L2_9", vector=bad, component=g,
                    aux=(("side", side), ("radical", radical)))
        return _report(inst, "L2_9", met=True, concl=False, witness=w, vacuous=vac)
    if not any_eval:
        return _report(inst, "L2_9", met=False,
                       reason="no degree passing multiplication, e-part-prime, and colon-inside-e-part filters")
    return _report(inst, "L2_9", met=True, concl=True, vacuous=vac)


def _check_t2_10(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    gr = gm.ring_graded
    ring = gr.ring
    vac, any_eval = True, False
    for g in _degrees(inst):
        dd = _degree_data(gm, I, N, g)
        if not dd.proper or not _side_condition(gm, dd):
            continue
        hyp = _g_ie_verdict(gm, dd)
        if not hyp.value:
            continue
        any_eval = True
        vac = vac and hyp.vacuous
        ie_je = frozenset(product_span(ring.add_rows, ring.zero, ring.mul_rows, dd.ie, dd.colon_g))
        verdict = e_ideal_scan(gr, dd.colon_g, ie_je, "T2_10")
        if not verdict.value:
            w = replace(verdict.witness, component=g, aux=(("j_elements", dd.colon_g),))
            return _report(inst, "T2_10", met=True, concl=False, witness=w, vacuous=vac)
    if not any_eval:
        return _report(inst, "T2_10", met=False,
                       reason="no degree passing the side-condition and e-part-prime filters")
    return _report(inst, "T2_10", met=True, concl=True, vacuous=vac)


@lru_cache(maxsize=None)
def _t2_11_for_ideal_pair(gr: GradedRing, j: AlgebraicSubset, ideal: AlgebraicSubset):
    """Evaluate the four ring-level statements for one (j, ideal) pair."""
    ring = gr.ring
    e = gr.group.identity
    je = frozenset(component_of(gr, j, e))
    ie = component_of(gr, ideal, e)
    ie_je = frozenset(product_span(ring.add_rows, ring.zero, ring.mul_rows, ie, sorted(je)))
    v1 = e_ideal_scan(gr, sorted(je), ie_je, "T2_11:i")
    mul = ring.mul_rows
    re = gr.e_component

    s2, ev2 = True, None
    for r in re:
        if r in je:
            continue
        row = mul[r]
        for s in re:
            if (row[s] in je) != (s in je or row[s] in ie_je):
                s2, ev2 = False, (r, s)
                break
        if not s2:
            break

    s3, ev3 = True, None
    for r in re:
        if r in je:
            continue
        row = mul[r]
        colon_r = [s for s in re if row[s] in je]
        if set(colon_r) == je:
            continue
        ie_colon_r = [s for s in re if row[s] in ie_je]
        if colon_r == ie_colon_r:
            continue
        xa = _first_not_in(colon_r, je)
        xb = _first_not_in(colon_r, set(ie_colon_r))
        s3, ev3 = False, (r, xa, xb)
        break

    s4, ev4 = True, None
    ideals = graded_ideals(gr)
    for k in ideals:
        ke = component_of(gr, k, e)
        if s4 is False:
            break
        for l in ideals:
            le = component_of(gr, l, e)
            kl = product_span(ring.add_rows, ring.zero, ring.mul_rows, ke, le)
            if not set(kl) <= je:
                continue
            bad_prod = _first_not_in(kl, ie_je)
            if bad_prod is None:
                continue
            kx = _first_not_in(ke, je)
            lx = _first_not_in(le, je)
            if kx is not None and lx is not None:
                s4, ev4 = False, (k.elements, l.elements, bad_prod, kx, lx)
                break
    return (v1, (s2, ev2), (s3, ev3), (s4, ev4), tuple(sorted(je)))


def _check_t2_11(inst: Instance) -> ClaimReport:
    gr, I = inst.ring_graded, inst.ideal
    vac, any_eval = True, False
    for j in graded_ideals(gr):
        if j.is_whole:
            continue
        any_eval = True
        v1, (s2, ev2), (s3, ev3), (s4, ev4), je = _t2_11_for_ideal_pair(gr, j, I)
        vac = vac and v1.vacuous
        vals = (v1.value, s2, s3, s4)
        if len(set(vals)) == 1:
            continue
        chain = (("i", "ii"), ("ii", "iii"), ("iii", "iv"), ("iv", "i"))
        pairs = ((vals[0], vals[1]), (vals[1], vals[2]), (vals[2], vals[3]), (vals[3], vals[0]))
        for (src, tgt), (sv, tv) in zip(chain, pairs):
            if sv and not tv:
                jaux = (("j_elements", j.elements),)
                if tgt == "ii":
                    r, s = ev2
                    w = Witness(location=f"T2_11:{src}=>ii", scalar=r, vector=s, aux=jaux)
                elif tgt == "iii":
                    r, xa, xb = ev3
                    w = Witness(location=f"T2_11:{src}=>iii", scalar=r,
                                aux=jaux + (("not_part", xa), ("not_scaled_colon", xb)))
                elif tgt == "iv":
                    ke, le, bad_prod, kx, lx = ev4
                    w = Witness(location=f"T2_11:{src}=>iv",
                                aux=jaux + (("k_elements", ke), ("l_elements", le),
                                            ("product_outside", bad_prod),
                                            ("k_outside", kx), ("l_outside", lx)))
                else:
                    w = replace(v1.witness, location=f"T2_11:{src}=>i", aux=jaux)
                return _report(inst, "T2_11", met=True, concl=False, witness=w, vacuous=False)
    if not any_eval:
        return _report(inst, "T2_11", met=False, reason="ring has no proper graded ideal")
    return _report(inst, "T2_11", met=True, concl=True, vacuous=vac)


def _check_t2_12(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    vac, any_eval = True, False
    for g in _degrees(inst):
        dd = _degree_data(gm, I, N, g)
        if not dd.proper or not _side_condition(gm, dd) or not is_multiplication(gm, g).value:
            continue
        hyp = _g_ie_verdict(gm, dd)
        if not hyp.value:
            continue
        any_eval = True
        vac = vac and hyp.vacuous
        subs = graded_submodules(gm)
        for k in subs:
            kg = frozenset(component_of(gm, k, g))
            kx = _first_not_in(sorted(kg), dd.ng)
            for l in subs:
                lg = frozenset(component_of(gm, l, g))
                prod = _component_product_cached(gm, kg, lg, g)
                if not set(prod) <= dd.ng:
                    continue
                bad = _first_not_in(prod, dd.ie_ng)
                if bad is None:
                    continue
                lx = _first_not_in(sorted(lg), dd.ng)
                if kx is not None and lx is not None:
                    w = Witness(location="T2_12", component=g,
                                aux=(("k_elements", k.elements), ("l_elements", l.elements),
                                     ("product_outside", bad), ("k_outside", kx), ("l_outside", lx)))
                    return _report(inst, "T2_12", met=True, concl=False, witness=w, vacuous=vac)
    if not any_eval:
        return _report(inst, "T2_12", met=False,
                       reason="no degree passing side-condition, multiplication, and e-part-prime filters")
    return _report(inst, "T2_12", met=True, concl=True, vacuous=vac)


def _check_c2_13(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    act = gm.module.act_rows
    vac, any_eval = True, False
    for g in _degrees(inst):
        dd = _degree_data(gm, I, N, g)
        if not dd.proper or not _side_condition(gm, dd) or not is_multiplication(gm, g).value:
            continue
        hyp = _g_ie_verdict(gm, dd)
        if not hyp.value:
            continue
        any_eval = True
        vac = vac and hyp.vacuous
        orbits = {m: frozenset(act[r][m] for r in dd.re) for m in dd.mg}
        for m1 in dd.mg:
            if m1 in dd.ng:
                continue
            for m2 in dd.mg:
                if m2 in dd.ng:
                    continue
                prod = _component_product_cached(gm, orbits[m1], orbits[m2], g)
                if not set(prod) <= dd.ng:
                    continue
                bad = _first_not_in(prod, dd.ie_ng)
                if bad is None:
                    continue
                w = Witness(location="C2_13", vector=m1, vector_degree=g, component=g,
                            aux=(("second_element", m2), ("product_outside", bad)))
                return _report(inst, "C2_13", met=True, concl=False, witness=w, vacuous=vac)
    if not any_eval:
        return _report(inst, "C2_13", met=False,
                       reason="no degree passing side-condition, multiplication, and e-part-prime filters")
    return _report(inst, "C2_13", met=True, concl=True, vacuous=vac)


def _check_t2_14(inst: Instance) -> ClaimReport:
    if inst.module2 is None:
        raise MissingExtrasError("T2_14 needs a second module")
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    if gm.module.size * inst.module2.module.size > MAX_CARRIER:
        return _report(inst, "T2_14", met=False, reason="product carrier exceeds the size policy")
    hyp = is_graded_ie_prime(gm, N, I)
    if not hyp.value:
        return _report(inst, "T2_14", met=False, reason="submodule is not e-part-prime")
    prod = _product_cached(gm, inst.module2)
    nbar = prod.embed(N, None)
    verdict = is_graded_ie_prime(prod.graded, nbar, I)
    if verdict.value:
        return _report(inst, "T2_14", met=True, concl=True, vacuous=verdict.vacuous)
    w = replace(verdict.witness, location="T2_14")
    return _report(inst, "T2_14", met=True, concl=False, witness=w, vacuous=False)


def _check_t2_15(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    gr = gm.ring_graded
    act = gm.module.act_rows
    nset = N.member_set
    scaled = _e_scaled(gm, I, N).member_set
    colon = colon_into_ring(N, gm.module).member_set
    v1 = is_graded_ie_prime(gm, N, I)

    s2, ev2 = True, None
    subs = graded_submodules(gm)
    for r in gr.hom:
        if r in colon:
            continue
        row = act[r]
        for k in subs:
            for h in gr.group.elements:
                kh = component_of(gm, k, h)
                if not all(row[x] in nset for x in kh):
                    continue
                bad = next((x for x in kh if row[x] not in scaled), None)
                if bad is None:
                    continue
                out = _first_not_in(kh, nset)
                if out is not None:
                    s2, ev2 = False, (r, k.elements, h, bad, out)
                    break
            if not s2:
                break
        if not s2:
            break

    if v1.value == s2:
        return _report(inst, "T2_15", met=True, concl=True, vacuous=v1.vacuous)
    if v1.value and not s2:
        r, kelems, h, bad, out = ev2
        w = Witness(location="T2_15:i=>ii", scalar=r, scalar_degree=gr.primary_degree(r),
                    aux=(("k_elements", kelems), ("component", h),
                         ("product_outside_scaled", bad), ("k_outside", out)))
        return _report(inst, "T2_15", met=True, concl=False, witness=w)
    w = replace(v1.witness, location="T2_15:ii=>i")
    return _report(inst, "T2_15", met=True, concl=False, witness=w)


def _localized_exclusion(loc, ideal: AlgebraicSubset, n_loc: AlgebraicSubset, variant: str) -> frozenset[int]:
    """The excluded set for e-part-primeness in the localized module.

    base: identity-degree part of the source ideal acting through the base map.
    localized: identity-degree part of the transported ideal.
    """
    loc_gm = loc.module.graded
    loc_mod = loc_gm.module
    gr = loc.source_ring
    if variant == "base":
        e_part = component_of(gr, ideal, gr.group.identity)
        scalars = sorted({loc.ring.base_map[a] for a in e_part})
    else:
        transported = loc.transport_ideal(ideal)
        loc_gr = loc.ring.graded
        scalars = list(component_of(loc_gr, transported, loc_gr.group.identity))
    return frozenset(product_span(loc_mod.add_rows, loc_mod.zero, loc_mod.act_rows,
                                  scalars, n_loc.elements))


def _attach_fraction_reps(loc, w: Witness) -> Witness:
    aux = w.aux + (
        ("scalar_fraction", loc.ring.class_reps[w.scalar]),
        ("vector_fraction", loc.module.class_reps[w.vector]),
    )
    return replace(w, aux=aux)


def _check_t2_16i(inst: Instance, variant: str) -> ClaimReport:
    if inst.mult_set is None:
        raise MissingExtrasError("T2_16i needs a multiplicative set")
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    hyp = is_graded_ie_prime(gm, N, I)
    if not hyp.value:
        return _report(inst, "T2_16i", met=False, variant=variant,
                       reason="submodule is not e-part-prime")
    colon = colon_into_ring(N, gm.module).member_set
    if inst.mult_set.member_set & colon:
        return _report(inst, "T2_16i", met=False, variant=variant,
                       reason="denominator set meets the colon ideal")
    loc = _localize_cached(inst.ring_graded, gm, inst.mult_set)
    n_loc = loc.transport_submodule(N)
    excl = _localized_exclusion(loc, I, n_loc, variant)
    verdict = graded_prime_scan(loc.module.graded, n_loc, excl, "T2_16i",
                                vacuous=n_loc.member_set <= excl)
    if verdict.value:
        return _report(inst, "T2_16i", met=True, concl=True, vacuous=verdict.vacuous,
                       variant=variant)
    w = _attach_fraction_reps(loc, verdict.witness)
    return _report(inst, "T2_16i", met=True, concl=False, witness=w, variant=variant)


def _check_t2_16ii(inst: Instance, variant: str) -> ClaimReport:
    if inst.mult_set is None:
        raise MissingExtrasError("T2_16ii needs a multiplicative set")
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    loc = _localize_cached(inst.ring_graded, gm, inst.mult_set)
    loc_gm = loc.module.graded
    n_loc = loc.transport_submodule(N)
    if n_loc.is_whole:
        return _report(inst, "T2_16ii", met=False, variant=variant,
                       reason="localized submodule is improper")
    excl = _localized_exclusion(loc, I, n_loc, variant)
    hyp = graded_prime_scan(loc_gm, n_loc, excl, "T2_16ii:hypothesis",
                            vacuous=n_loc.member_set <= excl)
    if not hyp.value:
        return _report(inst, "T2_16ii", met=False, variant=variant,
                       reason="localized submodule is not e-part-prime")
    q = _quotient_cached(gm, N)
    zdv = set(graded_zero_divisors(q.graded))
    if inst.mult_set.member_set & zdv:
        return _report(inst, "T2_16ii", met=False, variant=variant,
                       reason="denominator set meets the quotient zero-divisors")
    verdict = is_graded_ie_prime(gm, N, I)
    if verdict.value:
        return _report(inst, "T2_16ii", met=True, concl=True, vacuous=hyp.vacuous,
                       variant=variant)
    w = replace(verdict.witness, location="T2_16ii")
    return _report(inst, "T2_16ii", met=True, concl=False, witness=w, variant=variant)


def _check_prime_implies_ie(inst: Instance) -> ClaimReport:
    gm, I, N = inst.module_graded, inst.ideal, inst.submodule
    if not is_graded_prime(gm, N).value:
        return _report(inst, "PRIME_IMPLIES_IE", met=False,
                       reason="submodule is not graded prime")
    verdict = is_graded_ie_prime(gm, N, I)
    if verdict.value:
        return _report(inst, "PRIME_IMPLIES_IE", met=True, concl=True, vacuous=verdict.vacuous)
    w = replace(verdict.witness, location="PRIME_IMPLIES_IE")
    return _report(inst, "PRIME_IMPLIES_IE", met=True, concl=False, witness=w)


_CHECKS = {
    "T2_4": _check_t2_4,
    "C2_5": _check_c2_5,
    "C2_6": _check_c2_6,
    "T2_7": _check_t2_7,
    "T2_8": _check_t2_8,
    "L2_9": _check_l2_9,
    "T2_10": _check_t2_10,
    "T2_11": _check_t2_11,
    "T2_12": _check_t2_12,
    "C2_13": _check_c2_13,
    "T2_14": _check_t2_14,
    "T2_15": _check_t2_15,
    "PRIME_IMPLIES_IE": _check_prime_implies_ie,
}


def check_claim(claim_id: str, inst: Instance, variant: str = "base") -> ClaimReport:
    """Evaluate one claim on one instance (hypotheses first, then conclusion)."""
    if claim_id == "T2_16i":
        return _check_t2_16i(inst, variant)
    if claim_id == "T2_16ii":
        return _check_t2_16ii(inst, variant)
    fn = _CHECKS.get(claim_id)
    if fn is None:
        raise EngineError(f"unknown claim id {claim_id!r}")
    return fn(inst)


# ---------------------------------------------------------------------------
# Witness re-verification
#
# Each handler re-evaluates the raw quantified definition at the witness
# point, using only table lookups, set membership, and core span helpers;
# the predicate scan code is never consulted.  A witness that cannot be
# reproduced from the instance alone is rejected.

def _raw_e_part(gr: GradedRing, ideal: AlgebraicSubset) -> list[int]:
    eset = gr.component_set(gr.group.identity)
    return [x for x in ideal.elements if x in eset]


def _raw_scaled_module(gm: GradedModule, ideal: AlgebraicSubset, elems) -> frozenset[int]:
    mod = gm.module
    e_part = _raw_e_part(gm.ring_graded, ideal)
    return frozenset(product_span(mod.add_rows, mod.zero, mod.act_rows, e_part, elems))


def _raw_component_elems(gm: GradedModule, elems, g: Degree) -> list[int]:
    comp = gm.component_set(g)
    return [x for x in elems if x in comp]


def _raw_colon_fails(gm: GradedModule, nset, r: int) -> bool:
    row = gm.module.act_rows[r]
    return any(row[x] not in nset for x in range(gm.module.size))


def _verify_module_violation(inst: Instance, w: Witness, *, need_nonzero=False,
                             need_outside_scaled=False, gm: GradedModule | None = None,
                             nset=None, scaled=None) -> bool:
    gm = gm or inst.module_graded
    if nset is None:
        nset = inst.submodule.member_set
    r, m = w.scalar, w.vector
    if r is None or m is None:
        return False
    if r not in gm.ring_graded.hom_set or m not in gm.hom_set:
        return False
    p = gm.module.act_rows[r][m]
    if p not in nset or m in nset:
        return False
    if need_nonzero and p == gm.module.zero:
        return False
    if need_outside_scaled:
        if scaled is None:
            scaled = _raw_scaled_module(gm, inst.ideal, inst.submodule.elements)
        if p in scaled:
            return False
    return _raw_colon_fails(gm, nset, r)


def _verify_component_violation(inst: Instance, w: Witness, *, excluded="none") -> bool:
    gm = inst.module_graded
    g = w.component
    if g is None:
        return False
    re = set(gm.ring_graded.e_component)
    mg = gm.component_set(g)
    ng = set(_raw_component_elems(gm, inst.submodule.elements, g))
    r, m = w.scalar, w.vector
    if r not in re or m not in mg:
        return False
    p = gm.module.act_rows[r][m]
    if p not in ng or m in ng:
        return False
    if excluded == "scaled":
        mod = gm.module
        scaled = product_span(mod.add_rows, mod.zero, mod.act_rows,
                              _raw_e_part(gm.ring_graded, inst.ideal), sorted(ng))
        if p in set(scaled):
            return False
    elif excluded == "zero":
        if p == gm.module.zero:
            return False
    row = gm.module.act_rows[r]
    return any(row[x] not in ng for x in mg)


def _verify_e_ideal_violation(inst: Instance, w: Witness, je_elems) -> bool:
    gr = inst.ring_graded
    ring = gr.ring
    re = set(gr.e_component)
    je = set(je_elems) & re
    r, s = w.scalar, w.vector
    if r not in re or s not in re or r in je or s in je:
        return False
    p = ring.mul_rows[r][s]
    if p not in je:
        return False
    ie_je = set(product_span(ring.add_rows, ring.zero, ring.mul_rows,
                             _raw_e_part(gr, inst.ideal), sorted(je)))
    return p not in ie_je


def _verify_t2_4(inst, w) -> bool:
    if not _verify_component_violation(inst, w):
        return False
    gm = inst.module_graded
    g = w.component
    aux = w.aux_map()
    t, n_elt = aux.get("colon_scalar"), aux.get("component_element")
    if t is None or n_elt is None:
        return False
    mg = gm.component(g)
    ng = set(_raw_component_elems(gm, inst.submodule.elements, g))
    act = gm.module.act_rows
    if n_elt not in ng or any(act[t][x] not in ng for x in mg):
        return False
    mod = gm.module
    scaled = set(product_span(mod.add_rows, mod.zero, mod.act_rows,
                              _raw_e_part(gm.ring_graded, inst.ideal), sorted(ng)))
    return act[t][n_elt] not in scaled


def _verify_c2_5(inst, w) -> bool:
    if not _verify_component_violation(inst, w):
        return False
    gm = inst.module_graded
    aux = w.aux_map()
    t, n_elt = aux.get("colon_scalar"), aux.get("component_element")
    if t is None or n_elt is None:
        return False
    g = w.component
    mg = gm.component(g)
    ng = set(_raw_component_elems(gm, inst.submodule.elements, g))
    act = gm.module.act_rows
    if n_elt not in ng or any(act[t][x] not in ng for x in mg):
        return False
    return act[t][n_elt] != gm.module.zero


def _verify_c2_6(inst, w) -> bool:
    gm = inst.module_graded
    g = w.component
    if g is None or w.vector is None:
        return False
    from .constructions import component_product

    ng = frozenset(_raw_component_elems(gm, inst.submodule.elements, g))
    square = component_product(gm, ng, ng, g)
    mod = gm.module
    scaled = set(product_span(mod.add_rows, mod.zero, mod.act_rows,
                              _raw_e_part(gm.ring_graded, inst.ideal), sorted(ng)))
    return w.vector in set(square) and w.vector not in scaled


def _verify_t2_7(inst, w) -> bool:
    gm = inst.module_graded
    g = w.component
    if g is None:
        return False
    target = w.location.split("=>")[-1]
    mg = gm.component(g)
    ng = set(_raw_component_elems(gm, inst.submodule.elements, g))
    mod = gm.module
    act = mod.act_rows
    scaled = set(product_span(mod.add_rows, mod.zero, mod.act_rows,
                              _raw_e_part(gm.ring_graded, inst.ideal), sorted(ng)))
    if target == "i":
        return _verify_component_violation(inst, w, excluded="scaled")
    r = w.scalar
    if r is None or r not in set(gm.ring_graded.e_component):
        return False
    if not any(act[r][x] not in ng for x in mg):
        return False  # r must lie outside the component colon
    if target == "ii":
        x = w.vector
        if x is None or x not in set(mg):
            return False
        lhs = act[r][x] in ng
        rhs = x in ng or act[r][x] in scaled
        return lhs != rhs
    aux = w.aux_map()
    xa, xb = aux.get("not_component"), aux.get("not_scaled_colon")
    if xa is None or xb is None:
        return False
    ok_a = (act[r][xa] in ng) != (xa in ng)
    ok_b = (act[r][xb] in ng) != (act[r][xb] in scaled)
    return ok_a and ok_b


def _verify_t2_8(inst, w) -> bool:
    gm = inst.module_graded
    nset = inst.submodule.member_set
    scaled = _raw_scaled_module(gm, inst.ideal, inst.submodule.elements)
    if w.location.endswith("ii=>i"):
        return _verify_module_violation(inst, w, need_outside_scaled=True, scaled=scaled)
    # lifted quotient violation: rm in N minus the scaled part, m outside N,
    # and r does not carry M into N
    r, m = w.scalar, w.vector
    if r is None or m is None:
        return False
    p = gm.module.act_rows[r][m]
    if p not in nset or p in scaled or m in nset:
        return False
    return _raw_colon_fails(gm, nset, r)


def _verify_l2_9(inst, w) -> bool:
    gm = inst.module_graded
    g = w.component
    if g is None or w.vector is None:
        return False
    ring, mod = gm.ring_graded.ring, gm.module
    re = gm.ring_graded.e_component
    mg = gm.component(g)
    ng = sorted(set(_raw_component_elems(gm, inst.submodule.elements, g)))
    scaled = set(product_span(mod.add_rows, mod.zero, mod.act_rows,
                              _raw_e_part(gm.ring_graded, inst.ideal), ng))
    scaled_colon = set(relative_colon_scalars(mod.act_rows, re, mg, scaled))
    radical = [x for x in re if power_reaches(ring.mul_rows, x, scaled_colon)]
    lhs = set(product_span(mod.add_rows, mod.zero, mod.act_rows, radical, ng))
    side = w.aux_map().get("side")
    if side == "missing-from-product":
        return w.vector in scaled and w.vector not in lhs
    if side == "extra-in-product":
        return w.vector in lhs and w.vector not in scaled
    return False


def _verify_t2_10(inst, w) -> bool:
    gm = inst.module_graded
    g = w.component
    if g is None:
        return False
    re = gm.ring_graded.e_component
    mg = gm.component(g)
    ng = set(_raw_component_elems(gm, inst.submodule.elements, g))
    colon_g = relative_colon_scalars(gm.module.act_rows, re, mg, ng)
    return _verify_e_ideal_violation(inst, w, colon_g)


def _verify_t2_11(inst, w) -> bool:
    gr = inst.ring_graded
    ring = gr.ring
    aux = w.aux_map()
    j_elems = aux.get("j_elements")
    if j_elems is None:
        return False
    re = set(gr.e_component)
    je = set(j_elems) & re
    if je == re:
        return False
    ie_je = set(product_span(ring.add_rows, ring.zero, ring.mul_rows,
                             _raw_e_part(gr, inst.ideal), sorted(je)))
    target = w.location.split("=>")[-1]
    mul = ring.mul_rows
    if target == "i":
        return _verify_e_ideal_violation(inst, w, tuple(sorted(je)))
    if target == "ii":
        r, s = w.scalar, w.vector
        if r is None or s is None or r not in re or r in je or s not in re:
            return False
        lhs = mul[r][s] in je
        rhs = s in je or mul[r][s] in ie_je
        return lhs != rhs
    if target == "iii":
        r = w.scalar
        xa, xb = aux.get("not_part"), aux.get("not_scaled_colon")
        if r is None or xa is None or xb is None or r not in re or r in je:
            return False
        ok_a = (mul[r][xa] in je) != (xa in je)
        ok_b = (mul[r][xb] in je) != (mul[r][xb] in ie_je)
        return ok_a and ok_b
    if target == "iv":
        ke = set(aux.get("k_elements", ())) & re
        le = set(aux.get("l_elements", ())) & re
        bad, kx, lx = aux.get("product_outside"), aux.get("k_outside"), aux.get("l_outside")
        if bad is None or kx is None or lx is None:
            return False
        kl = set(product_span(ring.add_rows, ring.zero, ring.mul_rows, sorted(ke), sorted(le)))
        return (kl <= je and bad in kl and bad not in ie_je
                and kx in ke and kx not in je and lx in le and lx not in je)
    return False


def _verify_t2_12(inst, w) -> bool:
    gm = inst.module_graded
    g = w.component
    aux = w.aux_map()
    if g is None:
        return False
    from .constructions import component_product

    ng = set(_raw_component_elems(gm, inst.submodule.elements, g))
    kg = frozenset(_raw_component_elems(gm, aux.get("k_elements", ()), g))
    lg = frozenset(_raw_component_elems(gm, aux.get("l_elements", ()), g))
    prod = set(component_product(gm, kg, lg, g))
    mod = gm.module
    scaled = set(product_span(mod.add_rows, mod.zero, mod.act_rows,
                              _raw_e_part(gm.ring_graded, inst.ideal), sorted(ng)))
    bad, kx, lx = aux.get("product_outside"), aux.get("k_outside"), aux.get("l_outside")
    if bad is None or kx is None or lx is None:
        return False
    return (prod <= ng and bad in prod and bad not in scaled
            and kx in kg and kx not in ng and lx in lg and lx not in ng)


def _verify_c2_13(inst, w) -> bool:
    gm = inst.module_graded
    g = w.component
    aux = w.aux_map()
    m1, m2 = w.vector, aux.get("second_element")
    if g is None or m1 is None or m2 is None:
        return False
    from .constructions import element_product

    mg = set(gm.component(g))
    if m1 not in mg or m2 not in mg:
        return False
    ng = set(_raw_component_elems(gm, inst.submodule.elements, g))
    if m1 in ng or m2 in ng:
        return False
    prod = set(element_product(gm, m1, m2, g))
    mod = gm.module
    scaled = set(product_span(mod.add_rows, mod.zero, mod.act_rows,
                              _raw_e_part(gm.ring_graded, inst.ideal), sorted(ng)))
    return prod <= ng and any(x not in scaled for x in prod)


def _verify_t2_14(inst, w) -> bool:
    if inst.module2 is None:
        return False
    gm2 = inst.module2
    gm = inst.module_graded
    prod = _product_cached(gm, gm2)
    pgm = prod.graded
    nbar = prod.embed(inst.submodule, None)
    scaled = _raw_scaled_module(pgm, inst.ideal, nbar.elements)
    return _verify_module_violation(inst, w, need_outside_scaled=True,
                                    gm=pgm, nset=nbar.member_set, scaled=scaled)


def _verify_t2_15(inst, w) -> bool:
    gm = inst.module_graded
    nset = inst.submodule.member_set
    if w.location.endswith("ii=>i"):
        return _verify_module_violation(inst, w, need_outside_scaled=True)
    aux = w.aux_map()
    r = w.scalar
    kelems = aux.get("k_elements")
    h = aux.get("component")
    bad, out = aux.get("product_outside_scaled"), aux.get("k_outside")
    if r is None or kelems is None or h is None or bad is None or out is None:
        return False
    h = tuple(h)
    if r not in gm.ring_graded.hom_set:
        return False
    kh = _raw_component_elems(gm, kelems, h)
    act = gm.module.act_rows
    row = act[r]
    if any(row[x] not in nset for x in kh):
        return False
    scaled = _raw_scaled_module(gm, inst.ideal, inst.submodule.elements)
    if bad not in set(kh) or row[bad] in scaled:
        return False
    if out not in set(kh) or out in nset:
        return False
    return _raw_colon_fails(gm, nset, r)


def _verify_t2_16i(inst, w, variant: str) -> bool:
    if inst.mult_set is None:
        return False
    gm = inst.module_graded
    loc = _localize_cached(inst.ring_graded, gm, inst.mult_set)
    loc_gm = loc.module.graded
    aux = w.aux_map()
    sf, vf = aux.get("scalar_fraction"), aux.get("vector_fraction")
    if sf is None or vf is None:
        return False
    if loc.ring.class_map.get(tuple(sf)) != w.scalar:
        return False
    if loc.module.class_map.get(tuple(vf)) != w.vector:
        return False
    n_loc = loc.transport_submodule(inst.submodule)
    excl = _localized_exclusion(loc, inst.ideal, n_loc, variant)
    return _verify_module_violation(inst, w, need_outside_scaled=True,
                                    gm=loc_gm, nset=n_loc.member_set, scaled=excl)


def _verify_t2_16ii(inst, w) -> bool:
    return _verify_module_violation(inst, w, need_outside_scaled=True)


def _verify_predicate(inst, w) -> bool:
    loc = w.location
    if loc == "is_graded_prime":
        return _verify_module_violation(inst, w)
    if loc == "is_graded_weakly_prime":
        return _verify_module_violation(inst, w, need_nonzero=True)
    if loc == "is_graded_ie_prime":
        return _verify_module_violation(inst, w, need_outside_scaled=True)
    if loc == "is_g_prime":
        return _verify_component_violation(inst, w)
    if loc == "is_g_ie_prime":
        return _verify_component_violation(inst, w, excluded="scaled")
    if loc == "is_e_Ie_prime_ideal":
        je = w.aux_map().get("j_elements")
        return je is not None and _verify_e_ideal_violation(inst, w, je)
    if loc.startswith("is_multiplication"):
        return _verify_multiplication(inst, w)
    return False


def _verify_multiplication(inst, w) -> bool:
    gm = inst.module_graded
    mod = gm.module
    elems = w.aux_map().get("submodule")
    if elems is None:
        return False
    if w.location.endswith("whole"):
        mask = set(elems)
        colon = [r for r in range(mod.ring.size)
                 if all(mod.act_rows[r][x] in mask for x in range(mod.size))]
        back = product_span(mod.add_rows, mod.zero, mod.act_rows, colon, range(mod.size))
        return tuple(back) != tuple(elems)
    g = w.component
    if g is None:
        return False
    re = gm.ring_graded.e_component
    mg = gm.component(g)
    colon = relative_colon_scalars(mod.act_rows, re, mg, set(elems))
    back = product_span(mod.add_rows, mod.zero, mod.act_rows, colon, mg)
    return tuple(back) != tuple(elems)


def verify_witness(report: ClaimReport) -> bool:
    """Re-check a witness against the raw definitions; False if it fails."""
    w = report.witness
    if w is None:
        raise EngineError("report carries no witness")
    inst = report.instance
    tag = w.location.split(":")[0]
    try:
        if tag == "T2_4":
            return _verify_t2_4(inst, w)
        if tag == "C2_5":
            return _verify_c2_5(inst, w)
        if tag == "C2_6":
            return _verify_c2_6(inst, w)
        if tag == "T2_7":
            return _verify_t2_7(inst, w)
        if tag == "T2_8":
            return _verify_t2_8(inst, w)
        if tag == "L2_9":
            return _verify_l2_9(inst, w)
        if tag == "T2_10":
            return _verify_t2_10(inst, w)
        if tag == "T2_11":
            return _verify_t2_11(inst, w)
        if tag == "T2_12":
            return _verify_t2_12(inst, w)
        if tag == "C2_13":
            return _verify_c2_13(inst, w)
        if tag == "T2_14":
            return _verify_t2_14(inst, w)
        if tag == "T2_15":
            return _verify_t2_15(inst, w)
        if tag == "T2_16i":
            return _verify_t2_16i(inst, w, report.variant or "base")
        if tag == "T2_16ii":
            return _verify_t2_16ii(inst, w)
        if tag == "PRIME_IMPLIES_IE":
            return _verify_module_violation(inst, w, need_outside_scaled=True)
        return _verify_predicate(inst, w)
    except (KeyError, IndexError, TypeError):
        return False


# ---------------------------------------------------------------------------
# Suite runner

@dataclass(frozen=True, eq=False)
class SuiteReport:
    config: SuiteConfig
    results: tuple[dict, ...]
    summary: dict[str, dict[str, int]]
    instances: dict[str, dict]

    def falsified(self, claim_ids: Iterable[str]) -> int:
        return sum(self.summary.get(c, {}).get("falsified", 0) for c in claim_ids)

    def as_json(self) -> dict:
        return {
            "config": self.config.as_json(),
            "summary": self.summary,
            "results": list(self.results),
            "instances": self.instances,
        }


def _evaluate(instances, claims, variant) -> list[dict]:
    out = []
    for inst in instances:
        fam = instance_family(inst)
        for cid in claims:
            if claim_family(cid) != fam:
                continue
            rep = check_claim(cid, inst, variant)
            if rep.witness is not None and not verify_witness(rep):
                raise IntegrityError(
                    f"witness for {cid} on instance {inst.id} does not re-verify")
            out.append(rep.as_json())
    return out


def _suite_worker(args):
    instances, claims, variant = args
    return _evaluate(instances, claims, variant)


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Evaluate the selected claims over the corpus; deterministic output.

    Every falsification witness is re-verified; a non-reproducing witness
    aborts the run with IntegrityError (an engine bug, never a finding).
    """
    instances = enumerate_corpus(config.corpus)
    selected = set(config.claims)
    claims = tuple(c for c in CLAIM_IDS if c in selected)
    if config.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [instances[i::config.jobs] for i in range(config.jobs)]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            parts = pool.map(_suite_worker, [(c, claims, config.localized_ideal) for c in chunks])
        results = [e for part in parts for e in part]
    else:
        results = _evaluate(instances, claims, config.localized_ideal)
    results.sort(key=lambda e: (_CLAIM_INDEX[e["claim"]], e["instance"]))
    summary: dict[str, dict[str, int]] = {
        c: {"evaluated": 0, "filtered": 0, "held": 0, "falsified": 0} for c in claims
    }
    used_ids = set()
    for e in results:
        used_ids.add(e["instance"])
        row = summary[e["claim"]]
        if e["hypotheses_met"]:
            row["evaluated"] += 1
            if e["conclusion_holds"]:
                row["held"] += 1
            else:
                row["falsified"] += 1
        else:
            row["filtered"] += 1
    catalog = {inst.id: inst.describe() for inst in instances if inst.id in used_ids}
    return SuiteReport(config, tuple(results), summary, catalog)
