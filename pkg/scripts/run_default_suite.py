#!/usr/bin/env python3
"""Run the default claim suite and print a per-claim summary plus findings.

Writes the machine-readable report to reports/suite.json (byte-reproducible
apart from the timing field; pass --no-timing for golden comparisons).
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import gradedprimes as gp
from gradedprimes.cli import main as cli_main


def run(argv):
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "reports"
    out_dir.mkdir(exist_ok=True)
    out = out_dir / "suite.json"
    started = time.monotonic()
    code = cli_main(["suite", "--out", str(out), *argv])
    elapsed = time.monotonic() - started

    report = gp.run_suite(gp.SuiteConfig())
    print(f"{'claim':18} {'evaluated':>9} {'filtered':>8} {'held':>6} {'falsified':>9}")
    for claim, row in report.summary.items():
        print(f"{claim:18} {row['evaluated']:>9} {row['filtered']:>8} "
              f"{row['held']:>6} {row['falsified']:>9}")
    print(f"\nreport: {out}  ({elapsed:.1f}s, exit {code})")
    falsified = {c: r["falsified"] for c, r in report.summary.items() if r["falsified"]}
    if falsified:
        print("findings (every witness machine-re-verified):", falsified)
    return code


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
