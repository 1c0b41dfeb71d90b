"""The rotation map on critical configurations, read as a Frobenius.

rotate(c, 1) shifts the chip word one place left.  A polynomial p(x) acts
as sum_j p_j * rotate(c, j), evaluated in Z^k and reduced once to its
critical representative.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Set, Tuple

from .chipfire import (
    ENUMERATION_BUDGET,
    Configuration,
    _class_rep,
    enumerate_criticals,
    group_identity,
)
from .errors import InternalError, InvalidArgument
from .exactmath import UniPoly, cyclotomic
from .wheel import WheelParams, wcyc


def _rot(chips: Sequence[int], j: int) -> Tuple[int, ...]:
    k = len(chips)
    j %= k
    return tuple(chips[j:]) + tuple(chips[:j])


def rotate(c: Configuration, j: int = 1) -> Configuration:
    """Left cyclic rotation by j places (negative j rotates right)."""
    return Configuration(_rot(c.chips, j), c.params)


def embed(c: Configuration, k2: int) -> Configuration:
    """Periodic extension of c to the wheel on k2 rim vertices."""
    k = c.params.k
    if not isinstance(k2, int) or k2 < 1 or k2 % k:
        raise InvalidArgument(f"{k2} is not a multiple of k = {k}")
    p = c.params
    return Configuration(c.chips * (k2 // k), WheelParams(k2, p.q, p.t))


def _coeff_list(p) -> List[int]:
    coeffs = list(p.coeffs) if isinstance(p, UniPoly) else list(p)
    for x in coeffs:
        if not isinstance(x, int):
            raise InvalidArgument("shift polynomials need integer coefficients")
    return coeffs


def _apply(coeffs: Sequence[int], chips: Tuple[int, ...]) -> List[int]:
    out = [0] * len(chips)
    for j, a in enumerate(coeffs):
        if a:
            for i, x in enumerate(_rot(chips, j)):
                out[i] += a * x
    return out


def apply_rho_poly(p, c: Configuration) -> Configuration:
    """Critical representative of p(rotate) applied to c."""
    prm = c.params
    return Configuration(_class_rep(_apply(_coeff_list(p), c.chips), prm.q, prm.t), prm)


def kernel_of_rho_poly(
    p, params: WheelParams, budget: int = ENUMERATION_BUDGET
) -> Set[Configuration]:
    """Critical configurations c of ``params`` with p(rotate)(c) = 0."""
    coeffs = _coeff_list(p)
    group = enumerate_criticals(params, budget)
    zero = group.identity.chips
    q, t = params.q, params.t
    return {
        Configuration(c, params)
        for c in group.elements
        if _class_rep(_apply(coeffs, c), q, t) == zero
    }


def verify_wcyc_kernel(d: int, q: int, t: int, budget: int = ENUMERATION_BUDGET) -> Tuple[int, int]:
    """(|ker cyclotomic_d(rotate)| on K(W_d), wcyc(d) at (q,t)).

    The d-th cyclotomic polynomial divides x**d - 1, so its kernel on the
    limit group already lies in the copy of K(W_d).
    """
    size = len(kernel_of_rho_poly(cyclotomic(d), WheelParams(d, q, t), budget))
    expected = wcyc(d).evaluate(q, t)
    if size != expected:
        raise InternalError(f"cyclotomic kernel for d = {d} at ({q},{t}): {size} != {expected}")
    return size, expected


def quadratic_witness(params: WheelParams, budget: int = ENUMERATION_BUDGET) -> Optional[Configuration]:
    """First c with rotate^2 c - (1+q+t) rotate c + q c nonzero, else None."""
    coeffs = [params.q, -(1 + params.q + params.t), 1]
    group = enumerate_criticals(params, budget)
    zero = group.identity.chips
    for c in group.elements:
        if _class_rep(_apply(coeffs, c), params.q, params.t) != zero:
            return Configuration(c, params)
    return None


def verify_quadratic(params: WheelParams, budget: int = ENUMERATION_BUDGET) -> bool:
    return quadratic_witness(params, budget) is None


def embedded_image(k1: int, k2: int, q: int, t: int) -> Set[Configuration]:
    return {embed(c, k2) for c in enumerate_criticals(WheelParams(k1, q, t))}


def one_minus_x_power(k: int) -> List[int]:
    return [1] + [0] * (k - 1) + [-1]


def is_identity(c: Configuration) -> bool:
    return c == group_identity(c.params)
