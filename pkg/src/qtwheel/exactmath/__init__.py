"""Exact arithmetic kernel: polynomials, matrices, Smith form, power series."""

from .matrix import IntMatrix, Matrix, PolyMatrix, det_bareiss, det_cofactor, det_poly
from .poly import ONE, Q, T, ZERO, BivariatePolynomial, exact_quotient, poly_arith, poly_eval, product
from .series import RationalSeries, exp_from_counts, log_series_counts, series_expand
from .snf import SNFResult, smith_normal_form
from .unipoly import UniPoly, cyclotomic, divisors

__all__ = [
    "BivariatePolynomial",
    "IntMatrix",
    "Matrix",
    "ONE",
    "PolyMatrix",
    "Q",
    "RationalSeries",
    "SNFResult",
    "T",
    "UniPoly",
    "ZERO",
    "cyclotomic",
    "det_bareiss",
    "det_cofactor",
    "det_poly",
    "divisors",
    "exact_quotient",
    "exp_from_counts",
    "log_series_counts",
    "poly_arith",
    "poly_eval",
    "product",
    "series_expand",
    "smith_normal_form",
]
