"""Rational functions in T expanded as exact power series.

Coefficients live in Z[q, t].  ``log_series_counts`` recovers the sequence
a_k with  log r(T) = sum a_k T^k / k  through the logarithmic derivative
r'/r = sum a_k T^(k-1), which needs no fractions once r(0) = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Sequence

from ..errors import InvalidArgument, SingularSeries
from .poly import BivariatePolynomial, exact_quotient
from .unipoly import UniPoly


def _bp(c) -> BivariatePolynomial:
    return BivariatePolynomial.coerce(c)


@dataclass(frozen=True)
class RationalSeries:
    numerator: UniPoly
    denominator: UniPoly

    def __post_init__(self):
        if self.denominator.is_zero():
            raise SingularSeries("zero denominator")

    @classmethod
    def from_coeffs(cls, num: Sequence, den: Sequence) -> "RationalSeries":
        return cls(UniPoly(num), UniPoly(den))

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        return RationalSeries(self.numerator * other.numerator, self.denominator * other.denominator)

    def inverse(self) -> "RationalSeries":
        return RationalSeries(self.denominator, self.numerator)

    def same_function(self, other: "RationalSeries") -> bool:
        """Equality as rational functions, by cross-multiplication."""
        return self.numerator * other.denominator == other.numerator * self.denominator

    def is_one(self) -> bool:
        return self.numerator == self.denominator

    def substitute(self, q, t) -> "RationalSeries":
        def sub(c):
            return _bp(c).substitute(q, t)

        return RationalSeries(self.numerator.map_coeffs(sub), self.denominator.map_coeffs(sub))

    def to_json_obj(self) -> dict:
        def enc(c):
            if isinstance(c, int):
                return str(c)
            if c.is_constant():
                return str(c.constant_term())
            return c.to_json_obj()

        return {
            "num": [enc(c) for c in self.numerator.coeffs],
            "den": [enc(c) for c in self.denominator.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RationalSeries":
        def dec(c):
            if isinstance(c, str):
                return int(c)
            return BivariatePolynomial.from_json_obj(c)

        return cls(UniPoly([dec(c) for c in obj["num"]]), UniPoly([dec(c) for c in obj["den"]]))


def series_expand(r: RationalSeries, order: int) -> List[BivariatePolynomial]:
    """Taylor coefficients s_0..s_order of numerator/denominator."""
    if order < 0:
        raise InvalidArgument("order must be nonnegative")
    den = [_bp(r.denominator[i]) for i in range(order + 1)]
    d0 = den[0]
    if d0.is_zero():
        raise SingularSeries("denominator has zero constant term")
    out: List[BivariatePolynomial] = []
    for n in range(order + 1):
        acc = _bp(r.numerator[n])
        for j in range(1, n + 1):
            if not den[j].is_zero():
                acc = acc - den[j] * out[n - j]
        out.append(exact_quotient(acc, d0))
    return out


def log_series_counts(r: RationalSeries, order: int) -> List[BivariatePolynomial]:
    """[a_1, ..., a_order] where log r = sum_k a_k T^k / k."""
    s = series_expand(r, order)
    if s[0] != 1:
        raise InvalidArgument(f"log needs r(0) = 1, got {s[0]}")
    a: List[BivariatePolynomial] = []
    for k in range(1, order + 1):
        acc = k * s[k]
        for j in range(1, k):
            acc = acc - a[j - 1] * s[k - j]
        a.append(acc)
    return a


def exp_from_counts(a: Sequence, order: int) -> List[BivariatePolynomial]:
    """Coefficients of exp(sum_k a_k T^k / k) up to T^order.

    Uses n*s_n = sum_{j=1..n} a_j s_{n-j}; each division by n must be exact,
    which is the integrality a counting sequence guarantees.
    """
    s: List[BivariatePolynomial] = [BivariatePolynomial.const(1)]
    for n in range(1, order + 1):
        acc = BivariatePolynomial()
        for j in range(1, n + 1):
            acc = acc + _bp(a[j - 1]) * s[n - j]
        s.append(exact_quotient(acc, n))
    return s
