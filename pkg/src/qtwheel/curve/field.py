"""Finite fields F_{p^n} for small odd primes p.

An element is an int whose base-p digits are its coefficients in the
power basis of a fixed irreducible modulus.  Multiplication goes through
discrete-log tables built from a primitive element.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Tuple

from ..errors import InvalidArgument

MAX_DEGREE = 4
ALLOWED_PRIMES = (5, 7, 11, 13)


# -- polynomials over F_p as coefficient lists, lowest degree first -----
def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    a = [x % p for x in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        f = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_mod(out, m, p)


def _monic_polys(degree: int, p: int):
    for code in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


@lru_cache(maxsize=None)
def monic_irreducibles(degree: int, p: int) -> Tuple[Tuple[int, ...], ...]:
    """All monic irreducibles of the given degree, by trial division."""
    lower = [f for d in range(1, degree // 2 + 1) for f in monic_irreducibles(d, p)]
    out = []
    for f in _monic_polys(degree, p):
        if all(poly_mod(f, g, p) for g in lower):
            out.append(tuple(f))
    return tuple(out)


def is_irreducible(f: Sequence[int], p: int) -> bool:
    f = _trim([x % p for x in f])
    n = len(f) - 1
    if n < 1:
        return False
    return all(poly_mod(f, g, p) for d in range(1, n // 2 + 1) for g in monic_irreducibles(d, p))


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _factorize(n: int) -> List[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """F_{p^n} with elements encoded as ints in range(p**n)."""

    def __init__(self, p: int, n: int, modulus: Sequence[int]):
        self.p = p
        self.n = n
        self.modulus = tuple(modulus)
        self.size = p**n
        if len(self.modulus) != n + 1 or self.modulus[-1] != 1:
            raise InvalidArgument("modulus must be monic of degree n")
        if not is_irreducible(self.modulus, p):
            raise InvalidArgument(f"modulus {self.modulus} is reducible over F_{p}")
        self._build_tables()

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, n={self.n}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    # -- encoding --------------------------------------------------------
    def to_coeffs(self, a: int) -> List[int]:
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        reduced = poly_mod(list(coeffs), self.modulus, self.p)
        out = 0
        for c in reversed(reduced):
            out = out * self.p + c
        return out

    def element(self, x) -> int:
        """Accept an int (read as a prime-field constant) or a coefficient list."""
        if isinstance(x, int):
            return x % self.p
        return self.from_coeffs(x)

    def _build_tables(self) -> None:
        order = self.size - 1
        primes = _factorize(order) if order > 1 else []
        m, p = self.modulus, self.p
        for g in range(1, self.size):
            gc = self.to_coeffs(g)
            if all(self._pow_slow(gc, order // r) != [1] for r in primes):
                break
        else:
            raise InvalidArgument("no primitive element found")
        exp = [0] * order
        log = [0] * self.size
        cur = [1]
        for i in range(order):
            v = self.from_coeffs(cur)
            exp[i] = v
            log[v] = i
            cur = poly_mulmod(cur, gc, m, p)
        self.generator = g
        self._exp = exp
        self._log = log

    def _pow_slow(self, a: List[int], e: int) -> List[int]:
        out = [1]
        base = a
        while e:
            if e & 1:
                out = poly_mulmod(out, base, self.modulus, self.p)
            base = poly_mulmod(base, base, self.modulus, self.p)
            e >>= 1
        return out

    # -- arithmetic ------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.n == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.n == 1:
            return -a % p
        out, scale = 0, 1
        while a:
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[-self._log[a] % (self.size - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.size - 1)]

    def scalar(self, m: int, a: int) -> int:
        """m * a for an integer m."""
        return self.mul(m % self.p, a)

    def elements(self) -> range:
        return range(self.size)

    def roots_of(self, coeffs: Sequence[int]) -> List[int]:
        """Roots in this field of a polynomial with prime-field coefficients."""
        out = []
        for x in self.elements():
            acc = 0
            for c in reversed(coeffs):
                acc = self.add(self.mul(acc, x), c % self.p)
            if acc == 0:
                out.append(x)
        return out


@lru_cache(maxsize=None)
def field_make(p: int, n: int = 1) -> FiniteField:
    """F_{p^n} using the first monic irreducible of degree n in lexicographic order."""
    if not isinstance(p, int) or not _is_prime(p) or p not in ALLOWED_PRIMES:
        raise InvalidArgument(f"p must be a prime in {ALLOWED_PRIMES}, got {p!r}")
    if not isinstance(n, int) or not 1 <= n <= MAX_DEGREE:
        raise InvalidArgument(f"extension degree must be an int in 1..{MAX_DEGREE}, got {n!r}")
    return FiniteField(p, n, monic_irreducibles(n, p)[0])


def embedding(small: FiniteField, big: FiniteField):
    """A field homomorphism small -> big, sending the generator of small's
    power basis to a root of small's modulus in big."""
    if small.p != big.p or big.n % small.n:
        raise InvalidArgument(f"F_{small.size} does not embed in F_{big.size}")
    if small.n == 1:
        return lambda a: a
    root = big.roots_of(small.modulus)[0]
    powers = [big.pow(root, i) for i in range(small.n)]

    def emb(a: int) -> int:
        out = 0
        for c, r in zip(small.to_coeffs(a), powers):
            out = big.add(out, big.scalar(c, r))
        return out

    return emb
