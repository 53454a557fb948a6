"""Batch front end: validate instance files, classify targets, enumerate
graded objects, and run claim suites with machine-readable reports.

Exit codes: 0 success; 1 a required claim was falsified; 2 usage, parse, or
validation error; 3 engine-integrity failure (a witness did not re-verify).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .claims import (
    CLAIM_IDS,
    DEFAULT_REQUIRED,
    Instance,
    SuiteConfig,
    run_suite,
    verify_witness,
)
from .core import AlgebraicSubset, EngineError, IntegrityError, span
from .grading import graded_ideals, graded_submodules
from .instancefile import InstanceFileError, parse_instance_file
from .predicates import (
    ImproperComponentError,
    ImproperIdealError,
    ImproperSubmoduleError,
    is_e_ie_prime_ideal,
    is_g_ie_prime,
    is_g_prime,
    is_graded_ie_prime,
    is_graded_prime,
    is_graded_weakly_prime,
    is_multiplication,
)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_INTEGRITY = 3


def _degree_key(g) -> str:
    return ",".join(str(x) for x in g)


def _emit(payload: dict, out_path: str | None, no_timing: bool, started: float) -> None:
    if not no_timing:
        payload["timing"] = {"seconds": round(time.monotonic() - started, 6)}
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    try:
        parsed = parse_instance_file(args.path)
    except (InstanceFileError, EngineError) as exc:
        print(f"INVALID: {exc}", file=sys.stderr)
        return EXIT_USAGE
    gm = parsed.module_graded
    print(f"OK: ring {parsed.ring_graded.ring.construction} "
          f"(size {parsed.ring_graded.ring.size}), module {gm.module.construction} "
          f"(size {gm.module.size}), degrees {list(gm.group.orders)}")
    for name, sub in parsed.ideals.items():
        print(f"OK: ideal {name} = {list(sub.elements)}")
    for name, sub in parsed.submodules.items():
        print(f"OK: submodule {name} = {list(sub.elements)}")
    for name, ms in parsed.mult_sets.items():
        print(f"OK: mult_set {name} = {list(ms.elements)}")
    return EXIT_OK


def _classify_submodule(parsed, name: str, ideal: AlgebraicSubset) -> dict:
    gm = parsed.module_graded
    target = parsed.submodules[name]
    if target.is_whole:
        raise ImproperSubmoduleError(f"target {name!r} equals the whole module")
    inst = Instance(parsed.ring_graded, gm, ideal, target)
    entries: dict = {}

    def run(key, fn, *fnargs):
        try:
            verdict = fn(*fnargs)
        except (ImproperSubmoduleError, ImproperComponentError) as exc:
            entries[key] = {"error": type(exc).__name__, "detail": str(exc)}
            return
        entry = verdict.as_json()
        if verdict.witness is not None:
            entry["witness_verified"] = verify_witness(_predicate_shell(inst, verdict.witness))
        entries[key] = entry

    run("is_graded_prime", is_graded_prime, gm, target)
    run("is_graded_weakly_prime", is_graded_weakly_prime, gm, target)
    run("is_graded_Ie_prime", is_graded_ie_prime, gm, target, ideal)
    for g in gm.group.elements:
        run(f"is_g_prime@{_degree_key(g)}", is_g_prime, gm, target, g)
        run(f"is_g_Ie_prime@{_degree_key(g)}", is_g_ie_prime, gm, target, ideal, g)
    return entries


def _predicate_shell(inst: Instance, witness):
    from .claims import ClaimReport

    return ClaimReport(claim_id="PRIME_IMPLIES_IE", instance=inst, hypotheses_met=True,
                       conclusion_holds=False, witness=witness)


def _classify_ideal(parsed, name: str, ideal: AlgebraicSubset) -> dict:
    gr = parsed.ring_graded
    target = parsed.ideals[name]
    inst = Instance(gr, parsed.module_graded, ideal,
                    span(parsed.module_graded.module, "submodule", ()))
    entries: dict = {}
    try:
        verdict = is_e_ie_prime_ideal(gr, target, ideal)
        entry = verdict.as_json()
        if verdict.witness is not None:
            entry["witness_verified"] = verify_witness(_predicate_shell(inst, verdict.witness))
        entries["is_e_Ie_prime_ideal"] = entry
    except ImproperIdealError as exc:
        entries["is_e_Ie_prime_ideal"] = {"error": type(exc).__name__, "detail": str(exc)}
    return entries


def cmd_classify(args) -> int:
    started = time.monotonic()
    try:
        parsed = parse_instance_file(args.path)
    except (InstanceFileError, EngineError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    gm = parsed.module_graded
    if args.ideal is not None:
        if args.ideal not in parsed.ideals:
            print(f"ERROR: unknown ideal name {args.ideal!r}", file=sys.stderr)
            return EXIT_USAGE
        ideal = parsed.ideals[args.ideal]
    else:
        ideal = span(parsed.ring_graded.ring, "ideal", ())
    targets = args.target or sorted(parsed.submodules)
    payload: dict = {
        "kind": "classify",
        "engine": {"name": "gradedprimes", "version": __version__},
        "ideal": args.ideal or "(zero)",
        "targets": {},
        "module_checks": {},
    }
    status = EXIT_OK
    for name in targets:
        if name in parsed.submodules:
            try:
                payload["targets"][name] = _classify_submodule(parsed, name, ideal)
            except (ImproperSubmoduleError, ImproperComponentError) as exc:
                payload["targets"][name] = {"error": type(exc).__name__, "detail": str(exc)}
                status = EXIT_USAGE
        elif name in parsed.ideals:
            payload["targets"][name] = _classify_ideal(parsed, name, ideal)
        else:
            print(f"ERROR: unknown target name {name!r}", file=sys.stderr)
            return EXIT_USAGE
    payload["module_checks"]["is_multiplication@whole"] = is_multiplication(gm, "whole").as_json()
    for g in gm.group.elements:
        payload["module_checks"][f"is_multiplication@{_degree_key(g)}"] = (
            is_multiplication(gm, g).as_json())
    _emit(payload, args.out, args.no_timing, started)
    return status


def cmd_enumerate(args) -> int:
    started = time.monotonic()
    try:
        parsed = parse_instance_file(args.path)
    except (InstanceFileError, EngineError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    gm = parsed.module_graded
    objects = []
    if args.kind == "graded-ideals":
        for sub in graded_ideals(parsed.ring_graded):
            tags = ["whole" if sub.is_whole else "proper"]
            objects.append({"elements": list(sub.elements), "tags": tags})
    else:
        for sub in graded_submodules(gm):
            tags = ["whole" if sub.is_whole else "proper"]
            if not sub.is_whole:
                if is_graded_prime(gm, sub).value:
                    tags.append("graded-prime")
                if is_graded_weakly_prime(gm, sub).value:
                    tags.append("graded-weakly-prime")
            if args.kind == "graded-primes" and "graded-prime" not in tags:
                continue
            objects.append({"elements": list(sub.elements), "tags": tags})
    payload = {
        "kind": "enumerate",
        "engine": {"name": "gradedprimes", "version": __version__},
        "what": args.kind,
        "objects": objects,
    }
    _emit(payload, args.out, args.no_timing, started)
    return EXIT_OK


def _parse_claim_list(text: str | None, default: tuple[str, ...]):
    if text is None:
        return default
    if text.strip().lower() == "all":
        return CLAIM_IDS
    if text.strip().lower() == "none":
        return ()
    items = tuple(p.strip() for p in text.split(",") if p.strip())
    for c in items:
        if c not in CLAIM_IDS:
            raise EngineError(f"unknown claim id {c!r} (known: {', '.join(CLAIM_IDS)})")
    return items


def cmd_suite(args) -> int:
    started = time.monotonic()
    try:
        if args.config:
            with open(args.config, "r", encoding="utf-8") as fh:
                cfg = SuiteConfig.from_json(json.load(fh))
        else:
            cfg = SuiteConfig()
        overrides = {}
        if args.claims is not None:
            overrides["claims"] = _parse_claim_list(args.claims, CLAIM_IDS)
        if args.required is not None:
            overrides["required"] = _parse_claim_list(args.required, DEFAULT_REQUIRED)
        if args.variant is not None:
            key, _, value = args.variant.partition("=")
            if key != "localized-ideal" or value not in ("base", "localized"):
                raise EngineError("variant must be localized-ideal=base or localized-ideal=localized")
            overrides["localized_ideal"] = value
        if args.jobs is not None:
            overrides["jobs"] = max(1, int(args.jobs))
        if overrides:
            from dataclasses import replace

            cfg = replace(cfg, **overrides)
    except (OSError, json.JSONDecodeError, EngineError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run_suite(cfg)
    except IntegrityError as exc:
        print(f"ENGINE-INTEGRITY: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except EngineError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    required = tuple(c for c in cfg.required if c in cfg.claims)
    falsified_required = report.falsified(required)
    payload = report.as_json()
    # worker count is an execution detail, not part of the reproducible report
    payload["config"].pop("jobs", None)
    payload["kind"] = "suite"
    payload["engine"] = {"name": "gradedprimes", "version": __version__}
    payload["exit_policy"] = {
        "required": list(required),
        "falsified_required": falsified_required,
    }
    _emit(payload, args.out, args.no_timing, started)
    return EXIT_FALSIFIED if falsified_required else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedprimes",
        description="Finite-model checker for graded prime-family predicates and claims.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an instance file")
    p.add_argument("path")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", help="run all applicable predicates on named targets")
    p.add_argument("path")
    p.add_argument("--target", "-t", action="append",
                   help="target name (submodule or ideal); repeatable; default: all submodules")
    p.add_argument("--ideal", help="named ideal used for the e-part predicates (default: zero ideal)")
    p.add_argument("--out", help="write the report to this path instead of stdout")
    p.add_argument("--no-timing", action="store_true", help="omit the timing field")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("enumerate", help="list graded objects with classification tags")
    p.add_argument("path")
    p.add_argument("--kind", required=True,
                   choices=["graded-submodules", "graded-ideals", "graded-primes"])
    p.add_argument("--out")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("suite", help="run the claim suite over an instance corpus")
    p.add_argument("--config", help="suite config JSON (default: built-in corpus and claims)")
    p.add_argument("--claims", help="comma list of claim ids, or 'all'")
    p.add_argument("--required", help="comma list of claims whose falsification fails the run")
    p.add_argument("--variant", help="localized-ideal=base|localized (default base)")
    p.add_argument("--jobs", type=int, help="parallel workers (default 1)")
    p.add_argument("--out")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(fn=cmd_suite)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except IntegrityError as exc:
        print(f"ENGINE-INTEGRITY: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except EngineError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
