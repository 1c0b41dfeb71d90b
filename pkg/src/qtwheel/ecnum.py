"""Point-count polynomials N_k(q, N1) of an elliptic curve and their
cyclotomic-style factors.

Polynomials here use the BivariatePolynomial second variable for N1.  With
a = 1 + q - N1 the reciprocal Frobenius roots have power sums p_0 = 2,
p_1 = a, p_k = a p_{k-1} - q p_{k-2}, and N_k = q**k + 1 - p_k.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InternalError, InvalidArgument
from .exactmath import ONE, Q, T, BivariatePolynomial, Matrix, det_poly, divisors
from .wheel import reduced_laplacian

N1 = T


def _check_k(k, name="k"):
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"{name} must be a positive int, got {k!r}")


def _alternates(p: BivariatePolynomial) -> bool:
    # coefficient of N1**j has sign (-1)**(j-1); only nonzero coefficients are stored
    return all((c > 0) == (et % 2 == 1) for (_, et), c in p.items())


@lru_cache(maxsize=None)
def _power_sums(k: int):
    a = ONE + Q - N1
    sums = [BivariatePolynomial.const(2), a]
    while len(sums) <= k:
        sums.append(a * sums[-1] - Q * sums[-2])
    return tuple(sums)


@lru_cache(maxsize=None)
def nk_poly(k: int) -> BivariatePolynomial:
    """N_k as a polynomial in q and N1."""
    _check_k(k)
    out = Q**k + 1 - _power_sums(k)[k]
    if not _alternates(out):
        raise InternalError(f"N_{k} does not alternate in sign in N1")
    return out


def three_line_matrix(k: int) -> Matrix:
    """circ(1+q-N1, -q, 0, ..., 0, -1), with the k = 1, 2 special forms."""
    _check_k(k)
    return reduced_laplacian(k).map(lambda x: x.negate_t() if isinstance(x, BivariatePolynomial) else x)


def nk_via_detmk(k: int) -> BivariatePolynomial:
    return -BivariatePolynomial.coerce(det_poly(three_line_matrix(k)))


@lru_cache(maxsize=None)
def ecyc(d: int) -> BivariatePolynomial:
    """Factor of N_d such that N_k is the product of ecyc(d) over d | k."""
    _check_k(d, "d")
    if d == 1:
        return N1
    rest = ONE
    for e in divisors(d)[:-1]:
        rest = rest * ecyc(e)
    quot, rem = nk_poly(d).divmod_lex(rest)
    if not rem.is_zero():
        raise InternalError(f"N_{d} is not divisible by the product of lower factors")
    return quot


def nk_value(q: int, n1: int, k: int) -> int:
    """N_k for a curve with n1 points over F_q, by the integer recurrence."""
    _check_k(k)
    a = 1 + q - n1
    prev, cur = 2, a
    for _ in range(k - 1):
        prev, cur = cur, a * cur - q * prev
    return q**k + 1 - cur


def ecyc_value(q: int, n1: int, d: int) -> int:
    return ecyc(d).evaluate(q, n1)
