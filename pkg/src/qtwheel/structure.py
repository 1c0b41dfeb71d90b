"""Invariant factors of wheel critical groups and their 2x2 presentations.

The bivariate Fibonacci polynomials F(2m) satisfy F(-2) = 0, F(0) = 1 and
F(2m+4) = (1+q+t) F(2m+2) - q F(2m).  Powers of the companion matrix
[[1+q+t, 1], [-q, 0]] are expressed through them, and that collapses the
k x k reduced Laplacian of the wheel to a 2x2 matrix with the same Smith
form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .errors import InternalError, InvalidArgument
from .exactmath import (
    ONE,
    Q,
    T,
    BivariatePolynomial,
    Matrix,
    SNFResult,
    det_poly,
    smith_normal_form,
)
from .wheel import WheelParams, reduced_laplacian

DELTA = ONE + Q + T

Block = Tuple[Tuple[object, object], Tuple[object, object]]


@lru_cache(maxsize=None)
def _fhat_half(m: int) -> BivariatePolynomial:
    # index 2m
    if m == -1:
        return BivariatePolynomial()
    if m == 0:
        return ONE
    return DELTA * _fhat_half(m - 1) - Q * _fhat_half(m - 2)


def fhat(index: int) -> BivariatePolynomial:
    """F(index) for even index >= -2, by the three-term recurrence."""
    if not isinstance(index, int) or index % 2:
        raise InvalidArgument(f"Fibonacci index must be an even int, got {index!r}")
    if index < -2:
        raise InvalidArgument(f"Fibonacci index must be >= -2, got {index}")
    return _fhat_half(index // 2)


def fhat_subsets(index: int) -> BivariatePolynomial:
    """F(index) as a sum over subsets S of {1..index} with no two consecutive
    elements, weighted q**(#even elements) * t**(index/2 - |S|)."""
    if not isinstance(index, int) or index % 2 or index < -2:
        raise InvalidArgument(f"Fibonacci index must be an even int >= -2, got {index!r}")
    if index == -2:
        return BivariatePolynomial()
    half = index // 2
    terms = {}
    for mask in range(1 << index):
        if mask & (mask >> 1):
            continue
        size = bin(mask).count("1")
        if size > half:
            continue
        # bit b stands for element b+1, so odd bits are even elements
        evens = bin(mask & int("10" * half, 2) if half else 0).count("1")
        key = (evens, half - size)
        terms[key] = terms.get(key, 0) + 1
    return BivariatePolynomial(terms)


def companion(delta=DELTA) -> Matrix:
    return Matrix([[delta, 1], [-Q, 0]])


def fhat_power_formula(m: int) -> Matrix:
    """Closed form of companion()**m through F; valid for m >= 1."""
    if m < 1:
        raise InvalidArgument(f"m must be >= 1, got {m}")
    return Matrix(
        [
            [fhat(2 * m), fhat(2 * m - 2)],
            [-Q * fhat(2 * m - 2), -Q * fhat(2 * m - 4)],
        ]
    )


def matrix_power_fhat(m: int) -> Matrix:
    """companion()**m, computed by multiplication and checked against F."""
    direct = companion() ** m
    if direct != fhat_power_formula(m):
        raise InternalError(f"companion power mismatch at m = {m}")
    return direct


@dataclass(frozen=True)
class GenSmithInput:
    """Banded k x k matrix: 1, -delta, q down the first k-2 columns, with
    the corner blocks ``top`` (rows 0-1) and ``bottom`` (rows k-2, k-1) in
    the last two columns."""

    k: int
    delta: object
    top: Block
    bottom: Block

    def __post_init__(self):
        if self.k < 3:
            raise InvalidArgument(f"the banded form needs k >= 3, got {self.k}")

    def full_matrix(self) -> Matrix:
        k = self.k
        zero = BivariatePolynomial()
        m = [[zero] * k for _ in range(k)]
        for j in range(k - 2):
            m[j][j] = m[j][j] + 1
            m[j + 1][j] = m[j + 1][j] - self.delta
            if j + 2 < k:
                m[j + 2][j] = m[j + 2][j] + Q
        for r in range(2):
            for c in range(2):
                m[r][k - 2 + c] = m[r][k - 2 + c] + self.top[r][c]
                m[k - 2 + r][k - 2 + c] = m[k - 2 + r][k - 2 + c] + self.bottom[r][c]
        return Matrix(m)


def gensmith_reduce(inp: GenSmithInput) -> Matrix:
    """2x2 matrix whose Smith form, padded with k-2 ones, is that of the
    full banded matrix: companion**(k-2) * top + bottom."""
    return companion(inp.delta) ** (inp.k - 2) * Matrix(inp.top) + Matrix(inp.bottom)


def wheel_gensmith_input(k: int) -> GenSmithInput:
    return GenSmithInput(k, DELTA, ((Q, -DELTA), (0, Q)), ((1, 0), (-DELTA, 1)))


def deformed_gensmith_input(k: int) -> GenSmithInput:
    """Banded form of the deformed wheel on k+1 rim vertices."""
    return GenSmithInput(k + 1, DELTA, ((Q, -ONE - Q), (0, Q)), ((1, 0), (-DELTA, 1)))


def _normalize(r: Matrix) -> Matrix:
    # negate column 1, then row 1 += delta * row 0
    a, b = r[0, 0], -r[0, 1]
    c, d = r[1, 0], -r[1, 1]
    return Matrix([[a, b], [c + DELTA * a, d + DELTA * b]])


def wheel_two_by_two(k: int) -> Matrix:
    """[[q F(2k-4) + 1, q F(2k-2)], [F(2k-2), F(2k) - 1]]."""
    if not isinstance(k, int) or k < 3:
        raise InvalidArgument(f"k must be an int >= 3, got {k!r}")
    return Matrix(
        [
            [Q * fhat(2 * k - 4) + 1, Q * fhat(2 * k - 2)],
            [fhat(2 * k - 2), fhat(2 * k) - 1],
        ]
    )


def wheel_two_by_two_from_reduction(k: int) -> Matrix:
    """The banded reduction of the wheel, brought to wheel_two_by_two by
    unimodular moves (column negation, row addition, transpose)."""
    return _normalize(gensmith_reduce(wheel_gensmith_input(k))).transpose()


def deformed_two_by_two(k: int) -> Matrix:
    """[[q F(2k-2) + 1, F(2k) - t F(2k-2)], [q F(2k), F(2k+2) - t F(2k) - 1]]."""
    if not isinstance(k, int) or k < 2:
        raise InvalidArgument(f"k must be an int >= 2, got {k!r}")
    f = fhat
    return Matrix(
        [
            [Q * f(2 * k - 2) + 1, f(2 * k) - T * f(2 * k - 2)],
            [Q * f(2 * k), f(2 * k + 2) - T * f(2 * k) - 1],
        ]
    )


def deformed_two_by_two_from_reduction(k: int) -> Matrix:
    return _normalize(gensmith_reduce(deformed_gensmith_input(k)))


def wheel_banded_form(k: int) -> Matrix:
    """Reduced Laplacian of W_k transposed, negated and cycled down one row;
    equal entrywise to wheel_gensmith_input(k).full_matrix()."""
    m = reduced_laplacian(k).transpose().tolist()
    return Matrix([[-x for x in m[(r - 1) % k]] for r in range(k)])


def deformed_laplacian(k: int, q=None, t=None) -> Matrix:
    """Reduced Laplacian of W_{k+1} with every spoke at v_1 removed.

    Symbolic when q and t are omitted.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"k must be a positive int, got {k!r}")
    if q is None:
        rows = reduced_laplacian(k + 1).tolist()
        rows[0][0] = rows[0][0] - T
    else:
        rows = reduced_laplacian(WheelParams(k + 1, q, t)).tolist()
        rows[0][0] -= t
    return Matrix(rows)


def deformed_banded_form(k: int) -> Matrix:
    """Deformed Laplacian with v_1 moved last, then put through the same
    transpose/negate/cycle as wheel_banded_form."""
    m = deformed_laplacian(k).tolist()
    n = k + 1
    perm = list(range(1, n)) + [0]
    m = [[m[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    mt = [list(r) for r in zip(*m)]
    return Matrix([[-x for x in mt[(r - 1) % n]] for r in range(n)])


def wheel_group_invariants(params: WheelParams) -> SNFResult:
    """Invariant factors of K(W_k(q,t)); at most two exceed 1."""
    res = smith_normal_form(reduced_laplacian(params))
    if len(res.nontrivial()) > 2:
        raise InternalError(f"more than two nontrivial factors for {params}: {res.invariant_factors}")
    return res


def padded_snf(m2: Matrix, q: int, t: int, dim: int) -> SNFResult:
    """Smith form of a symbolic 2x2 matrix at (q,t), padded to ``dim`` with ones."""
    res = smith_normal_form(m2.evaluate(q, t))
    return SNFResult((1,) * (dim - 2) + res.invariant_factors)


def q_sum(k: int, q: int) -> int:
    """1 + q + ... + q**k."""
    return sum(q**i for i in range(k + 1))


def deformed_wheel_invariants(params: WheelParams) -> Tuple[SNFResult, int]:
    """Smith form of the deformed wheel built from W_{k+1}(q,t), and the
    predicted first factor gcd(t, 1+q+...+q**k)."""
    k, q, t = params.k, params.q, params.t
    res = smith_normal_form(deformed_laplacian(k, q, t))
    predicted = math.gcd(t, q_sum(k, q))
    d1 = res.invariant_factors[-2]
    if d1 != predicted:
        raise InternalError(f"deformed wheel {params}: first factor {d1}, predicted {predicted}")
    return res, predicted


def two_by_two_matches(k: int, q: int, t: int) -> bool:
    full = smith_normal_form(reduced_laplacian(WheelParams(k, q, t)))
    return padded_snf(wheel_two_by_two(k), q, t, k) == full


def det_two_by_two(k: int) -> BivariatePolynomial:
    return det_poly(wheel_two_by_two(k))
