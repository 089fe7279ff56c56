"""Exact arithmetic over a prime field F_p.

Scalars, factorials, dense matrices (rank and subspace intersection),
univariate polynomials, and restricted-composition counting.  Everything
is exact: no floating point, no probabilistic shortcuts.  Primes are
bounded to machine words (p < 2**31) so all intermediate products fit in
int64 when matrices are reduced with numpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
import sympy

MAX_PRIME = 2**31

#: returned by FpPolynomial.ord0 for the zero polynomial
INFINITE_ORDER = math.inf


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a machine-word prime p."""

    p: int

    def __post_init__(self) -> None:
        if not (2 <= self.p < MAX_PRIME):
            raise ValueError(f"modulus out of range [2, 2**31): {self.p}")
        if not sympy.isprime(self.p):
            raise ValueError(f"modulus is not prime: {self.p}")

    def scalar(self, value: int) -> "FpScalar":
        return FpScalar(value % self.p, self)

    def zero(self) -> "FpScalar":
        return FpScalar(0, self)

    def one(self) -> "FpScalar":
        return FpScalar(1, self)


@dataclass(frozen=True)
class FpScalar:
    """A residue in [0, p-1] with exact field arithmetic."""

    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.p:
            raise ValueError(f"residue {self.value} outside [0, {self.field.p})")

    def _coerce(self, other: "FpScalar | int") -> "FpScalar":
        if isinstance(other, int):
            return self.field.scalar(other)
        if other.field.p != self.field.p:
            raise ValueError("mixed moduli")
        return other

    def __add__(self, other: "FpScalar | int") -> "FpScalar":
        o = self._coerce(other)
        return FpScalar((self.value + o.value) % self.field.p, self.field)

    def __sub__(self, other: "FpScalar | int") -> "FpScalar":
        o = self._coerce(other)
        return FpScalar((self.value - o.value) % self.field.p, self.field)

    def __mul__(self, other: "FpScalar | int") -> "FpScalar":
        o = self._coerce(other)
        return FpScalar((self.value * o.value) % self.field.p, self.field)

    def __neg__(self) -> "FpScalar":
        return FpScalar(-self.value % self.field.p, self.field)

    def __pow__(self, exponent: int) -> "FpScalar":
        if exponent < 0:
            return fp_inv(self) ** (-exponent)
        return FpScalar(pow(self.value, exponent, self.field.p), self.field)

    def __bool__(self) -> bool:
        return self.value != 0


def fp_inv(a: FpScalar) -> FpScalar:
    """Multiplicative inverse in F_p; raises ZeroDivisionError on 0."""
    if a.value == 0:
        raise ZeroDivisionError("0 has no inverse in F_p")
    return FpScalar(pow(a.value, -1, a.field.p), a.field)


def factorial_mod(n: int, field: PrimeField) -> FpScalar:
    """n! mod p.  Zero whenever n >= p (p divides n! then)."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    if n >= field.p:
        return field.zero()
    acc = 1
    for i in range(2, n + 1):
        acc = acc * i % field.p
    return FpScalar(acc, field)


class FpMatrix:
    """Dense matrix over F_p, stored as an int64 numpy array.

    Matrices here carry monomial-basis coordinates of cohomology
    subspaces; dimensions stay in the hundreds, so dense Gaussian
    elimination is fine.
    """

    def __init__(self, entries: Iterable[Iterable[int]] | np.ndarray, field: PrimeField):
        self.field = field
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        self.entries = arr % field.p
        self.rows, self.cols = self.entries.shape

    @classmethod
    def zeros(cls, rows: int, cols: int, field: PrimeField) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), field)

    def copy(self) -> "FpMatrix":
        return FpMatrix(self.entries.copy(), self.field)

    def rank(self) -> int:
        """Rank over F_p by exact row reduction; does not mutate self."""
        p = self.field.p
        a = self.entries.copy()
        rank = 0
        for col in range(self.cols):
            pivots = np.nonzero(a[rank:, col])[0]
            if pivots.size == 0:
                continue
            piv = rank + int(pivots[0])
            if piv != rank:
                a[[rank, piv]] = a[[piv, rank]]
            inv = pow(int(a[rank, col]), -1, p)
            a[rank] = a[rank] * inv % p
            below = a[rank + 1 :, col].copy()
            if below.size:
                a[rank + 1 :] = (a[rank + 1 :] - np.outer(below, a[rank])) % p
            rank += 1
            if rank == self.rows:
                break
        return rank

    def stack(self, other: "FpMatrix") -> "FpMatrix":
        if other.cols != self.cols:
            raise ValueError(f"column mismatch: {self.cols} vs {other.cols}")
        if other.field.p != self.field.p:
            raise ValueError("mixed moduli")
        return FpMatrix(np.vstack([self.entries, other.entries]), self.field)

    def is_zero(self) -> bool:
        return not self.entries.any()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.field.p == other.field.p
            and self.entries.shape == other.entries.shape
            and bool((self.entries == other.entries).all())
        )


def intersection_dim(a: FpMatrix, b: FpMatrix) -> int:
    """dim(span(rows of a) ∩ span(rows of b)) in the common ambient space.

    Uses rank(A) + rank(B) - rank(A over B); requires equal column counts.
    """
    if a.cols != b.cols:
        raise ValueError(f"ambient dimension mismatch: {a.cols} vs {b.cols}")
    return a.rank() + b.rank() - a.stack(b).rank()


@dataclass(frozen=True)
class FpPolynomial:
    """Univariate polynomial over F_p; trailing zero coefficients trimmed."""

    coeffs: tuple[int, ...]
    field: PrimeField

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], field: PrimeField) -> "FpPolynomial":
        cs = [c % field.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs), field)

    @classmethod
    def from_terms(cls, terms: dict[int, int], field: PrimeField) -> "FpPolynomial":
        if not terms:
            return cls((), field)
        cs = [0] * (max(terms) + 1)
        for exp, c in terms.items():
            cs[exp] = (cs[exp] + c) % field.p
        return cls.from_coeffs(cs, field)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self.coeffs) if c}

    def support(self) -> set[int]:
        return {e for e, c in enumerate(self.coeffs) if c}

    def ord0(self) -> int | float:
        """Smallest exponent with nonzero coefficient; inf for the zero poly."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return INFINITE_ORDER

    def evaluate(self, x: int) -> int:
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def scale_argument(self, c: int) -> "FpPolynomial":
        """The polynomial f(c*x)."""
        p = self.field.p
        c %= p
        out, power = [], 1
        for coeff in self.coeffs:
            out.append(coeff * power % p)
            power = power * c % p
        return FpPolynomial.from_coeffs(out, self.field)


def poly_ord0(f: FpPolynomial) -> int | float:
    return f.ord0()


def poly_roots_in_fp(f: FpPolynomial) -> set[int]:
    """Exact root set by exhaustive evaluation over F_p (p is desk-scale)."""
    if f.is_zero:
        raise ValueError("zero polynomial vanishes everywhere")
    return {x for x in range(f.field.p) if f.evaluate(x) == 0}


def count_restricted_compositions(s: int, k: int, lo: int, hi: int) -> int:
    """Number of k-tuples with entries in [lo, hi] summing to s.

    Exact integer (not reduced mod p): these are Hodge numbers,
    characteristic-independent dimensions.  Dynamic programming over
    partial sums; 0 for infeasible s.
    """
    if lo > hi:
        raise ValueError(f"empty entry range [{lo}, {hi}]")
    if s < 0:
        return 0
    dp = [0] * (s + 1)
    dp[0] = 1
    for _ in range(k):
        ndp = [0] * (s + 1)
        for total in range(s + 1):
            ways = dp[total]
            if not ways:
                continue
            for v in range(lo, min(hi, s - total) + 1):
                ndp[total + v] += ways
        dp = ndp
    return dp[s]
