#!/usr/bin/env python3
"""Reproduce the closed-form a-number tables by direct computation.

Sweeps the quintic Fermat surface and the Calabi-Yau Fermat varieties in
P^3..P^6 over small primes, comparing the computed a-number with the
closed-form prediction for each prime class.
"""

import argparse

import sympy

from anumber.fermat import FermatDescriptor, a_number, hasse_witt, predict_a


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=200)
    args = parser.parse_args()

    print("quintic Fermat surface in P^3")
    print(f"{'p':>5}  {'p mod 5':>7}  {'a':>3}  {'hw rank':>7}  predicted")
    for p in sympy.primerange(2, args.pmax):
        if p == 5:
            continue
        v = FermatDescriptor(5, 3, p)
        rep = a_number(v)
        print(f"{p:>5}  {p % 5:>7}  {rep.a_number:>3}  {hasse_witt(v).rank:>7}  {predict_a(v)}")

    for r in [3, 4, 5, 6]:
        d = r + 1
        print(f"\nCalabi-Yau Fermat degree {d} in P^{r}: a vs (p-1) mod {d}")
        mismatches = 0
        for p in sympy.primerange(2, args.pmax):
            if d % p == 0:
                continue
            a = a_number(FermatDescriptor(d, r, p)).a_number
            if a != (p - 1) % d:
                mismatches += 1
                print(f"  mismatch at p={p}: computed {a}, expected {(p - 1) % d}")
        print(f"  {mismatches} mismatches")


if __name__ == "__main__":
    main()
