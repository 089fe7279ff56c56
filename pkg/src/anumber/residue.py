"""Monomial residue calculus for Fermat hypersurfaces.

Primitive middle cohomology of the degree-d Fermat hypersurface in P^{n+1}
is spanned by residue classes of monomials x^w / f^gamma with all
exponents w_i >= 1 and sum(w) = gamma * d.  For the diagonal equation the
Jacobian-ideal rewrite collapses to a one-variable rule

    x_i^d * x^v  ==  -(v_i / d) * x^v

which lowers one exponent by d at the cost of a scalar factor.  Repeated
application brings any class to the unique representative with all
exponents in [1, d-1]; pole order gamma then locates the class in the
Hodge filtration at step (n+1) - gamma.  Frobenius raises exponents by a
factor p and is reduced with the same rule.

Scalars track only the rewrite factors.  The global residue-map constant
of each pole-order level is deliberately not fixed (it is a single unit
per level), so scalars are meaningful up to that unit: zero vs nonzero
and ratios within a level are well defined, which is all the downstream
invariants use.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FpScalar, PrimeField


@dataclass(frozen=True)
class ExponentVector:
    """Exponents w_0..w_{r} of a monomial admissible at degree d.

    All entries are >= 1 and the total is divisible by d, so the monomial
    x^w / f^{sum(w)/d} is a well-formed residue representative.
    """

    entries: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 2:
            raise ValueError(f"degree must be >= 2: {self.degree}")
        if any(e < 1 for e in self.entries):
            raise ValueError(f"all exponents must be >= 1: {self.entries}")
        if sum(self.entries) % self.degree != 0:
            raise ValueError(
                f"exponent sum {sum(self.entries)} not divisible by degree {self.degree}"
            )

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def pole_order(self) -> int:
        return self.total // self.degree

    def is_reduced(self) -> bool:
        return all(1 <= e <= self.degree - 1 for e in self.entries)


@dataclass(frozen=True)
class MonomialClass:
    """A scalar multiple of a monomial residue class, or the zero class.

    The zero class is a sentinel (scalar 0, no exponents) so reduction
    pipelines stay total when a rewrite step kills a class.
    """

    exponents: ExponentVector | None
    scalar: FpScalar
    pole_order: int

    @classmethod
    def zero(cls, field: PrimeField) -> "MonomialClass":
        return cls(None, field.zero(), 0)

    @classmethod
    def of(cls, exponents: ExponentVector, field: PrimeField) -> "MonomialClass":
        return cls(exponents, field.one(), exponents.pole_order)

    @property
    def is_zero(self) -> bool:
        return self.scalar.value == 0

    def __post_init__(self) -> None:
        if self.scalar.value == 0:
            if self.exponents is not None:
                raise ValueError("zero class must not carry exponents")
        else:
            if self.exponents is None:
                raise ValueError("nonzero class needs exponents")
            if self.pole_order * self.exponents.degree != self.exponents.total:
                raise ValueError("pole order inconsistent with exponent sum")


@dataclass(frozen=True)
class HodgePosition:
    """Hodge filtration step of a reduced class: j = (n+1) - pole order."""

    step: int

    def __post_init__(self) -> None:
        if self.step < 0:
            raise ValueError(f"negative Hodge step: {self.step}")


def _reduce_coordinate(e: int, d: int, p: int) -> tuple[int, int]:
    """Lower one exponent into [0, d-1]; return (exponent, scalar factor).

    Each step e -> e-d multiplies by -((e-d)/d) in F_p.  A zero factor
    (exponent hitting a multiple of d) is returned as factor 0.
    """
    inv_d = pow(d % p, -1, p)
    factor = 1
    while e >= d:
        e -= d
        factor = factor * (-e % p) % p * inv_d % p
    return e, factor


def reduce_class(w: ExponentVector, field: PrimeField) -> MonomialClass:
    """Canonical representative of x^w in the monomial quotient.

    Returns c * x^{w'} with all w'_i in [1, d-1]; the scalar c is the
    product of the per-step rewrite factors.  Coordinates with w_i
    divisible by d force a zero factor and yield the zero class.  The
    factors depend only on per-coordinate exponent chains, so the result
    is independent of the coordinate order.
    """
    d = w.degree
    p = field.p
    if d % p == 0:
        raise ValueError(f"characteristic {p} divides degree {d}")
    scalar = 1
    reduced = []
    for e in w.entries:
        e_red, factor = _reduce_coordinate(e, d, p)
        scalar = scalar * factor % p
        reduced.append(e_red)
    if scalar == 0:
        return MonomialClass.zero(field)
    out = ExponentVector(tuple(reduced), d)
    return MonomialClass(out, FpScalar(scalar, field), out.pole_order)


def hodge_step(c: MonomialClass, n: int) -> HodgePosition:
    """Hodge filtration index of a reduced nonzero class on an n-fold."""
    if c.is_zero:
        raise ValueError("zero class has no Hodge position")
    if not (1 <= c.pole_order <= n + 1):
        raise ValueError(f"pole order {c.pole_order} outside [1, {n + 1}]")
    return HodgePosition(n + 1 - c.pole_order)


def frobenius_image(c: MonomialClass, field: PrimeField) -> MonomialClass:
    """Image of a reduced class under absolute Frobenius, reduced again.

    Exponents are multiplied by p and the pole order is brought back down
    with the rewrite rule; the scalar is raised to the p-th power
    (Frobenius is semilinear) and multiplied by the reduction factors.
    The result is exact up to the per-level unit noted in the module
    docstring.
    """
    if c.is_zero:
        raise ValueError("Frobenius image of the zero class is undefined")
    if not c.exponents.is_reduced():
        raise ValueError("input class must be reduced")
    p = field.p
    raised = ExponentVector(tuple(p * e for e in c.exponents.entries), c.exponents.degree)
    reduced = reduce_class(raised, field)
    if reduced.is_zero:
        return reduced
    scalar = (c.scalar ** p) * reduced.scalar
    return MonomialClass(reduced.exponents, scalar, reduced.pole_order)


def frobenius_exponent_map(w: ExponentVector, p: int) -> tuple[int, ...]:
    """Exponent part of the Frobenius image of a reduced vector.

    Coordinate-wise w_i maps to the representative of p*w_i mod d inside
    [1, d-1]; a bijection on reduced vectors whenever gcd(p, d) = 1.
    """
    d = w.degree
    return tuple((p * e - 1) % d + 1 for e in w.entries)
