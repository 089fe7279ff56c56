#!/usr/bin/env python3
"""Scan the Dwork quintic family: H(alpha) data for a range of primes.

For each prime prints the degree, vanishing order at 0 (the a-number of
the Fermat member), the F_p-rational non-ordinary parameters, and, for
small primes, the oracle comparison against literal expansion of
f^(p-1).
"""

import argparse

import sympy

from anumber.dwork import SPARSE_PRIME_CAP, DworkFamily, compare_oracle, hasse_polynomial


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=100)
    args = parser.parse_args()

    print(f"{'p':>5}  {'deg':>4}  {'ord0':>4}  {'#roots':>6}  oracle")
    for p in sympy.primerange(2, args.pmax):
        if p == 5:
            continue
        fam = DworkFamily(p)
        report = hasse_polynomial(fam)
        if p <= SPARSE_PRIME_CAP:
            cmp = compare_oracle(fam)
            oracle = f"sparse={cmp.sparse_agrees} units={list(cmp.substitution_units)}"
        else:
            cmp = compare_oracle(fam)
            oracle = f"units={list(cmp.substitution_units)}"
        print(f"{p:>5}  {report.degree:>4}  {report.ord0:>4}  {len(report.fp_roots):>6}  {oracle}")


if __name__ == "__main__":
    main()
