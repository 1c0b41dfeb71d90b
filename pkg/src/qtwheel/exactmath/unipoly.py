"""Univariate polynomials with int or BivariatePolynomial coefficients."""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence

from ..errors import DivisionError, InvalidArgument
from .poly import BivariatePolynomial, exact_quotient


def _is_zero(c) -> bool:
    return c == 0


class UniPoly:
    """Polynomial sum coeffs[i] * x**i, ascending, no trailing zeros.

    Coefficients are plain ints or BivariatePolynomial values; mixing is
    allowed since the two interoperate under +, -, *.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, n: int) -> "UniPoly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _other(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, BivariatePolynomial)):
            return UniPoly((other,))
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def __add__(self, other) -> "UniPoly":
        other = self._other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._other(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = self._other(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        out = UniPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, BivariatePolynomial)):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        divisor = self._other(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dlead = divisor.coeffs[-1]
        dn = divisor.degree
        quot = [0] * max(len(rem) - dn, 0)
        for i in range(len(rem) - 1, dn - 1, -1):
            if _is_zero(rem[i]):
                continue
            try:
                f = exact_quotient(rem[i], dlead)
            except DivisionError as exc:
                raise DivisionError(f"{divisor} does not divide {self}", exc.remainder) from None
            quot[i - dn] = f
            for j, dc in enumerate(divisor.coeffs):
                rem[i - dn + j] = rem[i - dn + j] - f * dc
        leftover = UniPoly(rem)
        if not leftover.is_zero():
            raise DivisionError(f"{divisor} does not divide {self}; remainder {leftover}", leftover)
        return UniPoly(quot)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs])

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = str(c)
            if isinstance(c, BivariatePolynomial) and len(c.terms) > 1:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            else:
                var = "x" if i == 1 else f"x^{i}"
                parts.append(var if cs == "1" else f"{cs}*{var}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> UniPoly:
    """The d-th cyclotomic polynomial, by dividing x**d - 1 by earlier ones."""
    if not isinstance(d, int) or d < 1:
        raise InvalidArgument(f"cyclotomic index must be a positive int, got {d!r}")
    poly = UniPoly.monomial(1, d) - 1
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(cyclotomic(e))
    return poly


def divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]
