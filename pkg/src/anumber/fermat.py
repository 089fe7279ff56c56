"""Variety-level invariants of Fermat hypersurfaces over F_p.

Given x_0^d + ... + x_r^d = 0 in P^r (dimension n = r-1), this module
enumerates the monomial basis per pole-order level, computes Hodge
numbers, the Frobenius image of the top level, the a-number and a-vector,
level a-numbers, the Hasse-Witt matrix, closed-form predictions used as
independent oracles, and the height classification of the Calabi-Yau
members.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .algebra import (
    FpMatrix,
    PrimeField,
    count_restricted_compositions,
    intersection_dim,
)
from .residue import ExponentVector, MonomialClass, frobenius_image, hodge_step, reduce_class


@dataclass(frozen=True)
class FermatDescriptor:
    """The Fermat hypersurface of degree d in P^r over F_p."""

    degree: int
    ambient: int
    p: int

    def __post_init__(self) -> None:
        if self.degree < 2:
            raise ValueError(f"degree must be >= 2: {self.degree}")
        if self.ambient < 2:
            raise ValueError(f"ambient dimension must be >= 2: {self.ambient}")
        PrimeField(self.p)  # validates primality and size
        if self.degree % self.p == 0:
            raise ValueError(
                f"characteristic {self.p} divides degree {self.degree}: hypersurface is singular"
            )

    @property
    def n(self) -> int:
        """Dimension of the hypersurface."""
        return self.ambient - 1

    @property
    def coords(self) -> int:
        return self.ambient + 1

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    def is_calabi_yau(self) -> bool:
        return self.degree == self.ambient + 1

    def has_top_level(self) -> bool:
        """True when H^n(X, O) is nonzero, i.e. the level n+1 basis is nonempty."""
        return self.degree >= self.n + 2


def _compositions(target: int, slots: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    # lexicographic by construction
    if slots == 0:
        if target == 0:
            yield ()
        return
    for v in range(lo, hi + 1):
        rest = target - v
        if rest < lo * (slots - 1) or rest > hi * (slots - 1):
            continue
        for tail in _compositions(rest, slots - 1, lo, hi):
            yield (v,) + tail


def basis(v: FermatDescriptor, q: int) -> list[ExponentVector]:
    """Monomial basis of pole-order level q, in lexicographic order.

    All exponent vectors with entries in [1, d-1] and total q*d; level q
    represents the Hodge graded piece F^{n+1-q} / F^{n+2-q} of primitive
    middle cohomology.
    """
    if not 1 <= q <= v.n + 1:
        raise ValueError(f"level {q} outside [1, {v.n + 1}]")
    d = v.degree
    return [ExponentVector(w, d) for w in _compositions(q * d, v.coords, 1, d - 1)]


def hodge_numbers(v: FermatDescriptor) -> tuple[int, ...]:
    """Primitive Hodge numbers h^{n+1-q, q-1} for q = 1 .. n+1.

    Characteristic-independent exact integers, counted as restricted
    compositions of q*d into r+1 parts within [1, d-1].
    """
    d = v.degree
    return tuple(
        count_restricted_compositions(q * d, v.coords, 1, d - 1) for q in range(1, v.n + 2)
    )


@dataclass(frozen=True)
class ConjugateImage:
    """Frobenius images of the top-level basis (the image of H^n(X, O))."""

    records: tuple[tuple[ExponentVector, MonomialClass], ...]
    anomalies: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.records)


def conjugate_image(v: FermatDescriptor) -> ConjugateImage:
    """Image of each top-level basis class under Frobenius.

    A zero image would contradict the scalar nonvanishing property of the
    reduction and is reported as an anomaly rather than silently dropped.
    """
    if not v.has_top_level():
        raise ValueError(
            f"H^n(X, O) vanishes for degree {v.degree} < {v.n + 2}: no conjugate image"
        )
    field = v.field
    records = []
    anomalies = []
    for w in basis(v, v.n + 1):
        image = frobenius_image(MonomialClass.of(w, field), field)
        if image.is_zero:
            anomalies.append(f"zero Frobenius image for basis element {w.entries}")
        records.append((w, image))
    return ConjugateImage(tuple(records), tuple(anomalies))


@dataclass(frozen=True)
class ANumberReport:
    """a-number, a-vector and per-basis-element Hodge positions."""

    a_number: int
    a_vector: tuple[int, ...]
    positions: tuple[int | None, ...]
    anomalies: tuple[str, ...]


def a_number(v: FermatDescriptor) -> ANumberReport:
    """The a-number and a-vector of the Fermat hypersurface.

    The a-number is the deepest Hodge step containing the whole Frobenius
    image of H^n(X, O); since distinct monomial images are independent,
    a_j is simply the number of images whose Hodge step is at least j,
    and a = min over images of the step.
    """
    image = conjugate_image(v)
    n = v.n
    positions: list[int | None] = []
    for _, cls in image.records:
        positions.append(None if cls.is_zero else hodge_step(cls, n).step)
    steps = [s for s in positions if s is not None]
    if not steps:
        raise ValueError("all Frobenius images vanished: a-number undefined")
    a = min(steps)
    a_vec = tuple(sum(1 for s in steps if s >= j) for j in range(n + 1))
    return ANumberReport(a, a_vec, tuple(positions), image.anomalies)


def a_vector_via_subspaces(v: FermatDescriptor) -> tuple[int, ...]:
    """a-vector computed as dim(G0 ∩ F^j) with explicit coordinate spans.

    Generic path: embeds every level basis into one ambient coordinate
    space, spans G0 by the Frobenius images and F^j by the monomials of
    pole order <= n+1-j, and intersects.  Kept as an independent check of
    the counting shortcut in a_number (and for non-monomial spans later);
    only usable when the total monomial count is small.
    """
    field = v.field
    n = v.n
    index: dict[tuple[int, ...], int] = {}
    levels: list[int] = []
    for q in range(1, n + 2):
        for w in basis(v, q):
            index[w.entries] = len(levels)
            levels.append(q)
    dim = len(levels)

    g0_rows = []
    for _, cls in conjugate_image(v).records:
        if cls.is_zero:
            continue
        row = [0] * dim
        row[index[cls.exponents.entries]] = cls.scalar.value
        g0_rows.append(row)
    g0 = FpMatrix(g0_rows, field)

    out = []
    for j in range(n + 1):
        f_rows = []
        for entries, col in index.items():
            if levels[col] <= n + 1 - j:
                row = [0] * dim
                row[col] = 1
                f_rows.append(row)
        if not f_rows:
            out.append(0)
            continue
        out.append(intersection_dim(g0, FpMatrix(f_rows, field)))
    return tuple(out)


def level_a_number(v: FermatDescriptor, q: int) -> int:
    """Hodge position of the Frobenius image of pole-order level q.

    Generalizes the a-number to the first nonvanishing Hodge level when
    H^n(X, O) = 0; for q = n+1 it coincides with the a-number.  Computed
    up to the per-level unit, which positions do not see.
    """
    level = basis(v, q)
    if not level:
        raise ValueError(f"level {q} basis is empty for degree {v.degree} in P^{v.ambient}")
    field = v.field
    steps = []
    for w in level:
        image = frobenius_image(MonomialClass.of(w, field), field)
        if not image.is_zero:
            steps.append(hodge_step(image, v.n).step)
    if not steps:
        raise ValueError(f"all level-{q} Frobenius images vanished")
    return min(steps)


@dataclass(frozen=True)
class HasseWittMatrix:
    """Matrix of Frobenius on H^n(X, O) in the canonical monomial order.

    Each row has at most one nonzero entry (a monomial maps to a scalar
    times a monomial); entries are exact up to one global unit.  The
    matrix vanishes identically exactly when the a-number is positive.
    """

    matrix: FpMatrix
    basis: tuple[ExponentVector, ...]

    @property
    def rank(self) -> int:
        return self.matrix.rank()

    @property
    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def hasse_witt(v: FermatDescriptor) -> HasseWittMatrix:
    """Hasse-Witt matrix: the part of the conjugate image staying at the top level."""
    top = basis(v, v.n + 1)
    if not top:
        raise ValueError(f"H^n(X, O) vanishes for degree {v.degree} in P^{v.ambient}")
    index = {w.entries: i for i, w in enumerate(top)}
    field = v.field
    m = FpMatrix.zeros(len(top), len(top), field)
    for i, (_, cls) in enumerate(conjugate_image(v).records):
        if cls.is_zero or cls.pole_order != v.n + 1:
            continue
        m.entries[i, index[cls.exponents.entries]] = cls.scalar.value
    return HasseWittMatrix(m, tuple(top))


def predict_a(v: FermatDescriptor) -> int | None:
    """Closed-form a-number for the families with a known formula.

    Quintic surface: a determined by p mod 5; Calabi-Yau Fermat
    (d = r+1): a = (p-1) mod (r+1); degree p+1 in P^p: a = p-1 = dim.
    Returns None outside these families.  Used only as an oracle against
    the computed a-number, never as a fallback.
    """
    d, r, p = v.degree, v.ambient, v.p
    if (d, r) == (5, 3):
        return {1: 0, 2: 1, 3: 1, 4: 2}[p % 5]
    if d == r + 1:
        return (p - 1) % (r + 1)
    if d == p + 1 and r == p:
        return p - 1
    return None


class HeightTag(Enum):
    ONE = "one"
    INFINITE = "infinite"
    UNRESOLVED = "finite-or-infinite-unresolved"


@dataclass(frozen=True)
class HeightClass:
    tag: HeightTag
    note: str


def classify_height(v: FermatDescriptor) -> HeightClass:
    """Formal-group height class of a Calabi-Yau Fermat hypersurface.

    a = 0 forces height 1; a >= 2 forces infinite height (a finite height
    greater than 1 would force a = 1).  For a = 1 the Fermat dichotomy
    (height is 1 or infinite) rules out the finite case; when
    p ≡ 2 (mod r+1) that dichotomy needs the Jacobi-sum extension, which
    the note flags.
    """
    if not v.is_calabi_yau():
        raise ValueError(
            f"height classification needs a Calabi-Yau Fermat input (d = r+1), got d={v.degree}, r={v.ambient}"
        )
    a = a_number(v).a_number
    m = v.ambient + 1
    if a == 0:
        return HeightClass(HeightTag.ONE, "a = 0: Frobenius survives to F^0/F^1, ordinary, height 1")
    if a >= 2:
        return HeightClass(
            HeightTag.INFINITE, f"a = {a} >= 2: any finite height >= 2 would force a = 1"
        )
    if v.p % m != 2:
        note = "a = 1 with the Fermat height dichotomy (height 1 or infinite): height 1 needs a = 0"
    else:
        note = (
            f"a = 1; p ≡ 2 (mod {m}), so the height-1-or-infinite dichotomy relies on its "
            "Jacobi-sum extension"
        )
    return HeightClass(HeightTag.INFINITE, note)
