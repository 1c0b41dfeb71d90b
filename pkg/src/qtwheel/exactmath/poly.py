"""Sparse integer polynomials in two formal variables.

The first variable is always ``q``.  The second is ``t`` for wheel-graph
quantities and ``N1`` for point-count quantities; the two readings are
related by :meth:`BivariatePolynomial.negate_t` (``N1 -> -t``).
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, Mapping, Tuple, Union

from ..errors import DivisionError, InvalidArgument

Exponent = Tuple[int, int]
Coercible = Union["BivariatePolynomial", int]


class BivariatePolynomial:
    """Immutable polynomial sum c * q**e_q * t**e_t with integer c.

    Zero coefficients are never stored, so the zero polynomial is the empty
    term map and equality is equality of term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: Dict[Exponent, int] = {}
        if terms:
            for (eq, et), c in terms.items():
                if eq < 0 or et < 0:
                    raise InvalidArgument(f"negative exponent ({eq}, {et})")
                if c:
                    clean[(int(eq), int(et))] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, eq: int = 0, et: int = 0) -> "BivariatePolynomial":
        return cls({(eq, et): c})

    @classmethod
    def q(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def coerce(cls, x: Coercible) -> "BivariatePolynomial":
        if isinstance(x, BivariatePolynomial):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to BivariatePolynomial")

    @classmethod
    def _raw(cls, terms: Dict[Exponent, int]) -> "BivariatePolynomial":
        # trusted path: caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, eq: int, et: int) -> int:
        return self._terms.get((eq, et), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def degree_q(self) -> int:
        return max((e[0] for e in self._terms), default=-1)

    def degree_t(self) -> int:
        return max((e[1] for e in self._terms), default=-1)

    def coefficients_in_t(self) -> Dict[int, "BivariatePolynomial"]:
        """Group by power of the second variable: {e_t: polynomial in q}."""
        out: Dict[int, Dict[Exponent, int]] = {}
        for (eq, et), c in self._terms.items():
            out.setdefault(et, {})[(eq, 0)] = c
        return {et: BivariatePolynomial._raw(d) for et, d in out.items()}

    # -- ring operations ----------------------------------------------
    def __add__(self, other: Coercible) -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.const(other)
        elif not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return BivariatePolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "BivariatePolynomial":
        return self

    def __sub__(self, other: Coercible) -> "BivariatePolynomial":
        if isinstance(other, (int, BivariatePolynomial)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Coercible) -> "BivariatePolynomial":
        if isinstance(other, int):
            return BivariatePolynomial.const(other) - self
        return NotImplemented

    def __mul__(self, other: Coercible) -> "BivariatePolynomial":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return BivariatePolynomial._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out: Dict[Exponent, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return BivariatePolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivariatePolynomial":
        if not isinstance(n, int) or n < 0:
            raise InvalidArgument("exponent must be a nonnegative int")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _leading(self) -> Tuple[Exponent, int]:
        # lex order with t dominant, then q
        e = max(self._terms, key=lambda x: (x[1], x[0]))
        return e, self._terms[e]

    def divmod_lex(self, divisor: Coercible) -> Tuple["BivariatePolynomial", "BivariatePolynomial"]:
        """Multivariate division by a single divisor, t-major lex order.

        Returns (quotient, remainder).  The remainder is zero exactly when
        ``divisor`` divides ``self`` in Z[q, t].
        """
        divisor = BivariatePolynomial.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        (dq, dt), dc = divisor._leading()
        quot: Dict[Exponent, int] = {}
        rem: Dict[Exponent, int] = {}
        work = self
        while not work.is_zero():
            (wq, wt), wc = work._leading()
            if wq >= dq and wt >= dt and wc % dc == 0:
                factor = BivariatePolynomial._raw({(wq - dq, wt - dt): wc // dc})
                quot[(wq - dq, wt - dt)] = quot.get((wq - dq, wt - dt), 0) + wc // dc
                work = work - factor * divisor
            else:
                rem[(wq, wt)] = wc
                work = work - BivariatePolynomial._raw({(wq, wt): wc})
        return BivariatePolynomial(quot), BivariatePolynomial(rem)

    def exact_div(self, divisor: Coercible) -> "BivariatePolynomial":
        quot, rem = self.divmod_lex(divisor)
        if not rem.is_zero():
            raise DivisionError(f"{divisor} does not divide {self}; remainder {rem}", rem)
        return quot

    # -- evaluation and substitution -----------------------------------
    def evaluate(self, q: int, t: int) -> int:
        total = 0
        for (eq, et), c in self._terms.items():
            total += c * q**eq * t**et
        return total

    def __call__(self, q, t):
        return self.substitute(q, t)

    def substitute(self, q: Coercible, t: Coercible):
        """Replace q and t by ints or polynomials; result in the same ring."""
        if isinstance(q, int) and isinstance(t, int):
            return self.evaluate(q, t)
        total = ZERO
        for (eq, et), c in self._terms.items():
            total = total + c * (q**eq) * (t**et)
        return total

    def negate_t(self) -> "BivariatePolynomial":
        """p(q, t) -> p(q, -t)."""
        return BivariatePolynomial._raw(
            {(eq, et): (-c if et % 2 else c) for (eq, et), c in self._terms.items()}
        )

    # -- comparison ----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, BivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            if other == 0:
                return not self._terms
            return self._terms == {(0, 0): other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- encoding ------------------------------------------------------
    def to_json_obj(self, second: str = "t") -> dict:
        """Terms in display order: t-degree descending, then q-degree ascending.

        ``second`` names the key of the second exponent (e.g. "n1").
        """
        order = sorted(self._terms.items(), key=lambda kv: (-kv[0][1], kv[0][0]))
        return {"terms": [{"q": eq, second: et, "c": str(c)} for (eq, et), c in order]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict, second: str = "t") -> "BivariatePolynomial":
        terms: Dict[Exponent, int] = {}
        for term in obj["terms"]:
            e = (int(term["q"]), int(term[second]))
            if e in terms:
                raise InvalidArgument(f"duplicate exponent {e}")
            terms[e] = int(term["c"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "BivariatePolynomial":
        return cls.from_json_obj(json.loads(text))

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, second: str = "t") -> str:
        """Render grouped by powers of the second variable, highest first."""
        if not self._terms:
            return "0"
        pieces = []
        groups = self.coefficients_in_t()
        for et in sorted(groups, reverse=True):
            inner = _format_q(groups[et])
            if et == 0:
                pieces.append(inner)
                continue
            var = second if et == 1 else f"{second}^{et}"
            if inner == "1":
                pieces.append(var)
            elif inner == "-1":
                pieces.append(f"-{var}")
            elif len(groups[et]._terms) == 1:
                pieces.append(f"{inner}*{var}")
            else:
                pieces.append(f"({inner})*{var}")
        out = " + ".join(pieces)
        return out.replace("+ -", "- ")


def _format_q(p: BivariatePolynomial) -> str:
    parts = []
    for (eq, _), c in sorted(p._terms.items()):
        if eq == 0:
            parts.append(str(c))
            continue
        var = "q" if eq == 1 else f"q^{eq}"
        if c == 1:
            parts.append(var)
        elif c == -1:
            parts.append(f"-{var}")
        else:
            parts.append(f"{c}*{var}")
    return " + ".join(parts).replace("+ -", "- ")


ZERO = BivariatePolynomial._raw({})
ONE = BivariatePolynomial._raw({(0, 0): 1})
Q = BivariatePolynomial.q()
T = BivariatePolynomial.t()


def poly_arith(a: Coercible, b: Coercible, op: str) -> BivariatePolynomial:
    a = BivariatePolynomial.coerce(a)
    b = BivariatePolynomial.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "exact_div":
        return a.exact_div(b)
    raise InvalidArgument(f"unknown op {op!r}")


def poly_eval(p: Coercible, q: int, t: int) -> int:
    return BivariatePolynomial.coerce(p).evaluate(q, t)


def exact_quotient(a, b):
    """Exact division for ints or polynomials; DivisionError otherwise."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        quo, rem = divmod(a, b)
        if rem:
            raise DivisionError(f"{b} does not divide {a}", rem)
        return quo
    return BivariatePolynomial.coerce(a).exact_div(b)


def product(factors: Iterable[Coercible]) -> BivariatePolynomial:
    out = ONE
    for f in factors:
        out = out * f
    return out
