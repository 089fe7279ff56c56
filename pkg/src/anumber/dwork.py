"""Hasse polynomial analysis of the Dwork quintic family.

The family is sum(x_i^5) - 5*alpha*x_0*...*x_4 = 0 in P^4 (the family is
often written with 1-based coordinates; all invariants here are
index-convention independent).  Its Hasse polynomial over F_p is

    H(alpha) = sum_{m=0}^{floor((p-1)/5)} (5m)! / (m!)^5 * alpha^(p-1-5m)

a degree p-1 polynomial whose order of vanishing at alpha = 0 is the
a-number of the Fermat member.  An independent oracle extracts the
coefficient of (x_0...x_4)^(p-1) in f^(p-1), both by a closed
multinomial sum and, for small p, by literal sparse-polynomial
exponentiation over F_p[alpha]; the oracle must agree with H up to the
argument substitution alpha -> 5*alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FpPolynomial, PrimeField, factorial_mod, fp_inv, poly_roots_in_fp

SPARSE_PRIME_CAP = 13  # term counts explode past this


@dataclass(frozen=True)
class DworkFamily:
    """The quintic Dwork pencil over F_p; p must be a prime other than 5."""

    p: int

    def __post_init__(self) -> None:
        PrimeField(self.p)
        if self.p == 5:
            raise ValueError("the Dwork quintic family is singular in characteristic 5")

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)


@dataclass(frozen=True)
class HassePolynomialReport:
    polynomial: FpPolynomial
    ord0: int
    degree: int
    fp_roots: frozenset[int]
    a_number_at_alpha0: int


def hasse_polynomial(fam: DworkFamily) -> HassePolynomialReport:
    """H(alpha) with its vanishing order, degree and F_p roots.

    The coefficient of alpha^(p-1-5m) is (5m)!/(m!)^5 mod p; the (5m)!
    factor vanishes once 5m >= p, truncating the sum naturally.  The m=0
    term makes H monic of degree p-1, so ord0 is finite.
    """
    field = fam.field
    p = fam.p
    terms: dict[int, int] = {}
    for m in range((p - 1) // 5 + 1):
        c = factorial_mod(5 * m, field) * fp_inv(factorial_mod(m, field)) ** 5
        if c.value:
            terms[p - 1 - 5 * m] = c.value
    h = FpPolynomial.from_terms(terms, field)
    ord0 = h.ord0()
    assert isinstance(ord0, int)
    return HassePolynomialReport(
        polynomial=h,
        ord0=ord0,
        degree=h.degree,
        fp_roots=frozenset(poly_roots_in_fp(h)),
        a_number_at_alpha0=ord0,
    )


def a_number_alpha0(fam: DworkFamily) -> int:
    """a-number of the alpha = 0 member (the Fermat quintic threefold).

    Equals ord0 of the Hasse polynomial; cross-checked in tests against
    the independent computation on the Fermat side.
    """
    return hasse_polynomial(fam).ord0


def hw_oracle(fam: DworkFamily) -> FpPolynomial:
    """Coefficient of (x_0...x_4)^(p-1) in f^(p-1), as a polynomial in alpha.

    Closed multinomial sum: picking m copies of each x_i^5 term and
    p-1-5m copies of the -5*alpha*x_0...x_4 term forces all five
    multiplicities equal, so the coefficient of alpha^(p-1-5m) is
    (p-1)! / ((p-1-5m)! * (m!)^5) * (-5)^(p-1-5m).
    """
    field = fam.field
    p = fam.p
    terms: dict[int, int] = {}
    for m in range((p - 1) // 5 + 1):
        e = p - 1 - 5 * m
        c = (
            factorial_mod(p - 1, field)
            * fp_inv(factorial_mod(e, field))
            * fp_inv(factorial_mod(m, field)) ** 5
            * field.scalar(-5) ** e
        )
        if c.value:
            terms[e] = c.value
    return FpPolynomial.from_terms(terms, field)


def hw_oracle_sparse(fam: DworkFamily) -> FpPolynomial:
    """Same coefficient by literal sparse exponentiation of f over F_p[alpha].

    Terms are dicts keyed by (x exponents..., alpha exponent); anything
    with an x exponent above p-1 can never contribute to the target
    monomial and is pruned.  Capped at p <= 13.
    """
    p = fam.p
    if p > SPARSE_PRIME_CAP:
        raise ValueError(f"sparse exponentiation capped at p <= {SPARSE_PRIME_CAP}, got {p}")
    f: dict[tuple[int, ...], int] = {}
    for i in range(5):
        key = [0] * 6
        key[i] = 5
        f[tuple(key)] = 1
    f[(1, 1, 1, 1, 1, 1)] = -5 % p

    acc = {(0, 0, 0, 0, 0, 0): 1}
    for _ in range(p - 1):
        nxt: dict[tuple[int, ...], int] = {}
        for k1, c1 in acc.items():
            for k2, c2 in f.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                if any(e > p - 1 for e in key[:5]):
                    continue
                c = (nxt.get(key, 0) + c1 * c2) % p
                if c:
                    nxt[key] = c
                elif key in nxt:
                    del nxt[key]
        acc = nxt

    target = (p - 1,) * 5
    terms = {key[5]: c for key, c in acc.items() if key[:5] == target}
    return FpPolynomial.from_terms(terms, fam.field)


def fit_substitution(oracle: FpPolynomial, h: FpPolynomial) -> tuple[int, ...]:
    """All units c in F_p* with oracle(alpha) = h(c * alpha).

    The expected unit is 5 (from the -5 coefficient convention of the
    family equation); a single-term polynomial admits several units.
    """
    p = oracle.field.p
    return tuple(c for c in range(1, p) if h.scale_argument(c) == oracle)


@dataclass(frozen=True)
class OracleComparison:
    oracle: FpPolynomial
    sparse_checked: bool
    sparse_agrees: bool | None
    support_matches: bool
    ord0_matches: bool
    substitution_units: tuple[int, ...]
    expected_unit_found: bool


def compare_oracle(fam: DworkFamily) -> OracleComparison:
    """Run the coefficient-extraction oracle against H(alpha).

    The ord0 equality is the hard contract; the stronger identity
    oracle = H(5*alpha) is asserted as expected and reported (not
    enforced here) so a counterexample surfaces as a finding.
    """
    h = hasse_polynomial(fam).polynomial
    oracle = hw_oracle(fam)
    sparse_checked = fam.p <= SPARSE_PRIME_CAP
    sparse_agrees = hw_oracle_sparse(fam) == oracle if sparse_checked else None
    units = fit_substitution(oracle, h)
    return OracleComparison(
        oracle=oracle,
        sparse_checked=sparse_checked,
        sparse_agrees=sparse_agrees,
        support_matches=oracle.support() == h.support(),
        ord0_matches=oracle.ord0() == h.ord0(),
        substitution_units=units,
        expected_unit_found=(5 % fam.p) in units,
    )


def nonordinary_locus(fam: DworkFamily) -> frozenset[int]:
    """F_p-rational parameters alpha where H(alpha) = 0.

    Only F_p-rational members are seen; non-ordinary members over
    extension fields are out of scope.
    """
    return hasse_polynomial(fam).fp_roots
