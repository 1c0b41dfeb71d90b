"""Elliptic curves over small finite fields and their Frobenius."""

from .elliptic import (
    INFINITY,
    POINT_BUDGET,
    CurvePoint,
    EllipticCurve,
    apply_frobenius_poly,
    characteristic_witness,
    coker_mk_compare,
    ec_add,
    ec_frobenius,
    ec_group_invariants,
    ec_mul,
    ec_neg,
    ec_points,
    frobenius_fixed_count,
    kernel_cyc_frobenius,
    kernel_frobenius_poly,
    point_order,
)
from .field import FiniteField, embedding, field_make, is_irreducible, monic_irreducibles

__all__ = [
    "CurvePoint",
    "EllipticCurve",
    "FiniteField",
    "INFINITY",
    "POINT_BUDGET",
    "apply_frobenius_poly",
    "characteristic_witness",
    "coker_mk_compare",
    "ec_add",
    "ec_frobenius",
    "ec_group_invariants",
    "ec_mul",
    "ec_neg",
    "ec_points",
    "embedding",
    "field_make",
    "frobenius_fixed_count",
    "is_irreducible",
    "kernel_cyc_frobenius",
    "kernel_frobenius_poly",
    "monic_irreducibles",
    "point_order",
]
