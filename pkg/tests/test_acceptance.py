"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

The suite-level expectations encode the required-claim policy exactly as
specified; a criterion that the corpus genuinely falsifies is allowed to fail
here and is documented in the repository README (see the L2_9 finding).
"""

import json
import time

import pytest

import gradedprimes as gp
from gradedprimes.claims import (
    DEFAULT_REQUIRED,
    Instance,
    _mult_set_family,
    check_claim,
    enumerate_corpus,
)
from gradedprimes.cli import main

import oracles

from conftest import GOLDEN


def _line(name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {name}: {status}" + (f" ({detail})" if detail else ""))
    return ok


@pytest.fixture(scope="module")
def default_suite():
    cfg = gp.SuiteConfig()
    started = time.monotonic()
    report = gp.run_suite(cfg)
    elapsed = time.monotonic() - started
    return report, elapsed


@pytest.fixture(scope="module")
def base_instances():
    cfg = gp.CorpusConfig(with_second_module=False, with_mult_sets=False)
    return enumerate_corpus(cfg)


def test_criterion_1_classic_instance(fixture_path, tmp_path):
    started = time.monotonic()
    out = tmp_path / "classify.json"
    code = main(["classify", fixture_path, "--target", "N", "--ideal", "I",
                 "--out", str(out), "--no-timing"])
    elapsed = time.monotonic() - started
    doc = json.loads(out.read_text())
    entry = doc["targets"]["N"]
    ok = (
        code == 0
        and entry["is_graded_prime"]["value"] is False
        and entry["is_graded_prime"]["witness"]["scalar"] == 2
        and entry["is_graded_prime"]["witness"]["vector"] == 2
        and entry["is_graded_prime"]["witness_verified"] is True
        and entry["is_graded_Ie_prime"]["value"] is True
        and entry["is_graded_Ie_prime"]["vacuous"] is True
        and elapsed < 1.0
    )
    assert _line("1 classic-instance", ok, f"{elapsed:.3f}s, witness (2,2) verified")


def test_criterion_2_prime_implies_epart(default_suite):
    report, elapsed = default_suite
    row = report.summary["PRIME_IMPLIES_IE"]
    ok = row["falsified"] == 0 and row["evaluated"] > 0 and elapsed < 120.0
    assert _line("2 prime-implies-e-part", ok,
                 f"{row['evaluated']} evaluated, 0 violations, suite {elapsed:.1f}s")


def test_criterion_3_zero_ideal_bridge(base_instances):
    checked = 0
    for inst in base_instances:
        gm = inst.module_graded
        zero_ideal = gp.span(inst.ring_graded.ring, "ideal", ())
        a = gp.is_graded_ie_prime(gm, inst.submodule, zero_ideal)
        b = gp.is_graded_weakly_prime(gm, inst.submodule)
        assert a.value == b.value and a.vacuous == b.vacuous, inst.id
        if a.witness is not None:
            assert (a.witness.scalar, a.witness.vector) == (b.witness.scalar, b.witness.vector)
        checked += 1
    assert _line("3 zero-ideal-bridge", True, f"{checked} instances, 0 mismatches")


def test_criterion_4_quotient_biconditional(default_suite, base_instances):
    report, _ = default_suite
    row = report.summary["T2_8"]
    ok = row["falsified"] == 0 and row["evaluated"] == len(base_instances)
    assert _line("4 quotient-biconditional", ok,
                 f"{row['evaluated']} instances, 0 mismatches")


def test_criterion_5_equivalence_claims(default_suite):
    report, _ = default_suite
    ok = True
    details = []
    for claim in ("T2_7", "T2_11"):
        row = report.summary[claim]
        ok = ok and row["falsified"] == 0 and row["evaluated"] > 0
        details.append(f"{claim}: {row['evaluated']} evaluated")
    assert _line("5 equivalence-claims", ok, "; ".join(details))


@pytest.mark.parametrize("claim", DEFAULT_REQUIRED)
def test_criterion_6_required_claims(default_suite, claim):
    report, _ = default_suite
    row = report.summary[claim]
    ok = row["evaluated"] >= 10 and row["falsified"] == 0
    assert _line(f"6 required-claim {claim}", ok,
                 f"evaluated {row['evaluated']}, falsified {row['falsified']}"), (
        f"{claim}: evaluated {row['evaluated']}, falsified {row['falsified']}"
        " (a falsified required claim; see README findings and the suite report)")


def test_criterion_6_exit_status(tmp_path):
    out = tmp_path / "suite.json"
    code = main(["suite", "--out", str(out), "--no-timing"])
    assert _line("6 suite-exit-status", code == 0, f"exit {code}"), (
        "default required suite exits nonzero: the corpus falsifies a required"
        " claim (see README findings)")


def test_criterion_7_exploratory_claims(default_suite):
    report, _ = default_suite
    golden = json.loads((GOLDEN / "t2_14_z12.json").read_text())
    entries = {e["instance"]: e for e in report.results if e["claim"] == "T2_14"}
    assert golden["instance"] in entries, "golden product instance missing from the report"
    got = dict(entries[golden["instance"]])
    got.pop("variant", None)
    ok = got == golden
    # suite completed with every falsification witness re-verified (the runner
    # aborts with IntegrityError otherwise), T2_16i fully reported
    ok = ok and "T2_16i" in report.summary and report.summary["T2_16i"]["evaluated"] > 0
    t14 = report.summary["T2_14"]
    assert _line("7 exploratory-claims", ok,
                 f"T2_14 {t14['falsified']} falsifications, all witnesses verified; "
                 f"golden instance matches")


def _oracle_compare(inst) -> int:
    gm, gr = inst.module_graded, inst.ring_graded
    n, i = inst.submodule, inst.ideal
    checked = 0

    v = gp.is_graded_prime(gm, n)
    value, w = oracles.graded_prime(gm, n.elements)
    assert v.value == value and (v.witness is None or (v.witness.scalar, v.witness.vector) == w)
    checked += 1

    v = gp.is_graded_weakly_prime(gm, n)
    value, w, vac = oracles.graded_weakly_prime(gm, n.elements)
    assert (v.value, v.vacuous) == (value, vac)
    assert v.witness is None or (v.witness.scalar, v.witness.vector) == w
    checked += 1

    v = gp.is_graded_ie_prime(gm, n, i)
    value, w, vac = oracles.graded_ie_prime(gm, n.elements, i.elements)
    assert (v.value, v.vacuous) == (value, vac)
    assert v.witness is None or (v.witness.scalar, v.witness.vector) == w
    checked += 1

    for g in gr.group.elements:
        ng = set(gp.component_of(gm, n, g))
        if ng == set(gm.component(g)):
            continue
        v = gp.is_g_prime(gm, n, g)
        value, w = oracles.g_prime(gm, n.elements, g)
        assert v.value == value and (v.witness is None or (v.witness.scalar, v.witness.vector) == w)
        v = gp.is_g_ie_prime(gm, n, i, g)
        value, w, vac = oracles.g_ie_prime(gm, n.elements, i.elements, g)
        assert (v.value, v.vacuous) == (value, vac)
        assert v.witness is None or (v.witness.scalar, v.witness.vector) == w
        checked += 2

    for j in gp.graded_ideals(gr):
        je = set(gp.component_of(gr, j, gr.group.identity))
        if je == set(gr.e_component):
            continue
        v = gp.is_e_ie_prime_ideal(gr, j, i)
        value, w, vac = oracles.e_ie_prime_ideal(gm, j.elements, i.elements)
        assert (v.value, v.vacuous) == (value, vac)
        assert v.witness is None or (v.witness.scalar, v.witness.vector) == w
        checked += 1
    return checked


def test_criterion_8_oracle_equivalence(base_instances):
    checked_preds = 0
    seen_modules = set()
    for inst in base_instances:
        if inst.module_graded.module.size > 16:
            continue
        checked_preds += _oracle_compare(inst)
        gm = inst.module_graded
        if gm.digest not in seen_modules:
            seen_modules.add(gm.digest)
            v = gp.is_multiplication(gm, "whole")
            value, bad = oracles.is_multiplication_whole(gm)
            assert v.value == value, (gm, bad)
            for g in gm.group.elements:
                v = gp.is_multiplication(gm, g)
                value, bad = oracles.is_multiplication_component(gm, g)
                assert v.value == value, (gm, g, bad)
                checked_preds += 1
            checked_preds += 1
    assert _line("8 oracle-equivalence", True,
                 f"{checked_preds} predicate evaluations agreed on carriers up to 16")


def test_criterion_9_localization_laws(base_instances):
    checked = 0
    preserved = 0
    for inst in base_instances:
        gr, gm = inst.ring_graded, inst.module_graded
        n = inst.submodule
        colon = gp.colon_into_ring(n, gm.module).member_set
        for s in _mult_set_family(gr):
            from gradedprimes.claims import _localize_cached

            loc = _localize_cached(gr, gm, s)
            moved = loc.transport_submodule(n)  # integrity-checked internally
            disjoint = not (s.member_set & colon)
            assert (not moved.is_whole) == disjoint, (inst.id, s.elements)
            checked += 1
            if set(s.elements) <= set(gr.ring.units):
                a = gp.is_graded_prime(gm, n)
                b = gp.is_graded_prime(loc.module.graded, moved)
                assert a.value == b.value
                ia = gp.is_graded_ie_prime(gm, n, inst.ideal)
                ib = gp.is_graded_ie_prime(loc.module.graded, moved,
                                           loc.transport_ideal(inst.ideal))
                assert (ia.value, ia.vacuous) == (ib.value, ib.vacuous)
                preserved += 1
    assert _line("9 localization-laws", True,
                 f"{checked} properness checks, {preserved} unit-set verdict agreements")


def test_criterion_10_byte_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["suite", "--out", str(a), "--no-timing"])
    main(["suite", "--out", str(b), "--no-timing"])
    ok = a.read_bytes() == b.read_bytes()
    assert _line("10 byte-determinism", ok, f"{a.stat().st_size} bytes, identical")
