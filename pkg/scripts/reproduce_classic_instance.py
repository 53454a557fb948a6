#!/usr/bin/env python3
"""Reproduce the classic motivating instance end to end.

Builds the order-12 residue ring as a trivially graded module over itself,
takes N generated by 4 and I generated by 4, and shows: N is not graded
prime (smallest witness 2 * 2 = 4), yet e-part-primeness holds vacuously
because the scaled part swallows N.  Every verdict is re-checked from the
raw tables.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import gradedprimes as gp
from gradedprimes.claims import Instance, verify_witness
from gradedprimes.predicates import Witness


def main():
    gr = gp.graded_ring(gp.cyclic_ring(12), gp.GradingGroup((2,)))
    gm = gp.graded_module(gr, gp.ring_as_module(gr.ring))
    n = gp.span(gm.module, "submodule", [4])
    i = gp.span(gr.ring, "ideal", [4])

    prime = gp.is_graded_prime(gm, n)
    print("graded prime:", prime.value,
          "witness:", (prime.witness.scalar, prime.witness.vector))
    shell = gp.ClaimReport("PRIME_IMPLIES_IE", Instance(gr, gm, i, n), True, False,
                           prime.witness)
    print("witness re-verifies:", verify_witness(shell))

    epart = gp.is_graded_ie_prime(gm, n, i)
    print("e-part-prime:", epart.value, "vacuous:", epart.vacuous)

    fake = gp.ClaimReport("PRIME_IMPLIES_IE", Instance(gr, gm, i, n), True, False,
                          Witness(location="is_graded_prime", scalar=4, vector=1))
    print("fabricated witness rejected:", not verify_witness(fake))
    return 0


if __name__ == "__main__":
    sys.exit(main())
