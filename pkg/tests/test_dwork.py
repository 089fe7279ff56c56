import math

import pytest
import sympy

from anumber.dwork import (
    DworkFamily,
    a_number_alpha0,
    compare_oracle,
    fit_substitution,
    hasse_polynomial,
    hw_oracle,
    hw_oracle_sparse,
    nonordinary_locus,
)
from anumber.fermat import FermatDescriptor, a_number


def test_family_rejects_bad_primes():
    with pytest.raises(ValueError):
        DworkFamily(5)
    with pytest.raises(ValueError):
        DworkFamily(10)


def test_hasse_polynomial_p7():
    report = hasse_polynomial(DworkFamily(7))
    assert report.polynomial.terms() == {6: 1, 1: 1}  # 5!/(1!)^5 = 120 = 1 mod 7
    assert report.ord0 == 1
    assert report.degree == 6
    assert report.a_number_at_alpha0 == 1


def test_hasse_polynomial_p11():
    report = hasse_polynomial(DworkFamily(11))
    # 10!/(2!)^5 reduced mod 11 via exact integers
    c0 = math.factorial(10) * pow(math.factorial(2) ** 5, -1, 11) % 11
    assert report.polynomial.terms() == {10: 1, 5: 10, 0: c0}
    assert report.ord0 == 0


def test_hasse_polynomial_shape():
    for p in sympy.primerange(2, 500):
        if p == 5:
            continue
        report = hasse_polynomial(DworkFamily(p))
        assert report.degree == p - 1
        assert report.polynomial.coeffs[-1] == 1  # monic
        assert all(e % 5 == (p - 1) % 5 for e in report.polynomial.support())
        assert report.ord0 % 5 == (p - 1) % 5


def test_ord0_matches_fermat_quintic_threefold():
    for p in sympy.primerange(2, 200):
        if p == 5:
            continue
        fermat_a = a_number(FermatDescriptor(5, 4, p)).a_number
        assert a_number_alpha0(DworkFamily(p)) == fermat_a
        assert fermat_a % 5 == (p - 1) % 5


def test_hw_oracle_supports():
    assert hw_oracle(DworkFamily(7)).support() == {6, 1}
    assert hw_oracle(DworkFamily(11)).support() == {10, 5, 0}
    oracle3 = hw_oracle(DworkFamily(3))
    assert oracle3.support() == {2}
    assert oracle3.ord0() == 2 == a_number_alpha0(DworkFamily(3))


def test_sparse_exponentiation_matches_combinatorial_sum():
    for p in [2, 3, 7, 11, 13]:
        fam = DworkFamily(p)
        assert hw_oracle_sparse(fam) == hw_oracle(fam)


def test_sparse_cap():
    with pytest.raises(ValueError):
        hw_oracle_sparse(DworkFamily(17))


def test_oracle_relates_to_hasse_polynomial_by_unit_substitution():
    for p in [2, 3, 7, 11, 13, 19, 31]:
        fam = DworkFamily(p)
        cmp = compare_oracle(fam)
        assert cmp.ord0_matches
        assert cmp.support_matches
        assert cmp.expected_unit_found, (
            f"finding at p={p}: units {cmp.substitution_units} do not contain 5"
        )


def test_fit_substitution_is_exhaustive():
    fam = DworkFamily(7)
    h = hasse_polynomial(fam).polynomial
    units = fit_substitution(hw_oracle(fam), h)
    assert units == (5,)
    # and the fit really is the polynomial identity oracle(a) = H(5a)
    assert h.scale_argument(5) == hw_oracle(fam)


def test_nonordinary_locus():
    assert nonordinary_locus(DworkFamily(7)) == frozenset(
        x for x in range(7) if (x**6 + x) % 7 == 0
    )
    for p in [7, 11, 13]:
        report = hasse_polynomial(DworkFamily(p))
        locus = nonordinary_locus(DworkFamily(p))
        assert locus == frozenset(x for x in range(p) if report.polynomial.evaluate(x) == 0)
        if report.ord0 > 0:
            assert 0 in locus
