"""Exact a-number, Hasse-Witt and Hodge invariants of Fermat hypersurfaces."""

from .algebra import (
    FpMatrix,
    FpPolynomial,
    FpScalar,
    PrimeField,
    count_restricted_compositions,
    factorial_mod,
    fp_inv,
    intersection_dim,
    poly_ord0,
    poly_roots_in_fp,
)
from .dwork import (
    DworkFamily,
    HassePolynomialReport,
    a_number_alpha0,
    compare_oracle,
    hasse_polynomial,
    hw_oracle,
    hw_oracle_sparse,
    nonordinary_locus,
)
from .fermat import (
    ANumberReport,
    FermatDescriptor,
    HasseWittMatrix,
    HeightClass,
    HeightTag,
    a_number,
    basis,
    classify_height,
    conjugate_image,
    hasse_witt,
    hodge_numbers,
    level_a_number,
    predict_a,
)
from .residue import (
    ExponentVector,
    HodgePosition,
    MonomialClass,
    frobenius_image,
    hodge_step,
    reduce_class,
)

__version__ = "0.1.0"

__all__ = [
    "ANumberReport",
    "DworkFamily",
    "ExponentVector",
    "FermatDescriptor",
    "FpMatrix",
    "FpPolynomial",
    "FpScalar",
    "HasseWittMatrix",
    "HassePolynomialReport",
    "HeightClass",
    "HeightTag",
    "HodgePosition",
    "MonomialClass",
    "PrimeField",
    "a_number",
    "a_number_alpha0",
    "basis",
    "classify_height",
    "compare_oracle",
    "conjugate_image",
    "count_restricted_compositions",
    "factorial_mod",
    "fp_inv",
    "frobenius_image",
    "hasse_polynomial",
    "hasse_witt",
    "hodge_numbers",
    "hodge_step",
    "hw_oracle",
    "hw_oracle_sparse",
    "intersection_dim",
    "level_a_number",
    "nonordinary_locus",
    "poly_ord0",
    "poly_roots_in_fp",
    "predict_a",
    "reduce_class",
]
