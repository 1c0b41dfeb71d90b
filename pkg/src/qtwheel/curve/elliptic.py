"""Short Weierstrass curves y^2 = x^3 + a x + b over small finite fields."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import InternalError, InvalidArgument, ResourceLimit
from ..exactmath import cyclotomic, smith_normal_form
from .field import FiniteField, embedding, field_make

POINT_BUDGET = 625


@dataclass(frozen=True)
class CurvePoint:
    """Affine point, or the point at infinity when ``x`` is None."""

    x: Optional[int] = None
    y: Optional[int] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_json_obj(self, field: FiniteField):
        if self.is_infinity:
            return "inf"
        return {"x": field.to_coeffs(self.x), "y": field.to_coeffs(self.y)}


INFINITY = CurvePoint()


class EllipticCurve:
    def __init__(self, field: FiniteField, a: int, b: int, base: "EllipticCurve | None" = None):
        self.field = field
        self.a = a
        self.b = b
        # the curve over F_q this one was extended from, if any
        self.base = base
        F = field
        disc = F.add(F.scalar(4, F.pow(a, 3)), F.scalar(27, F.pow(b, 2)))
        if disc == 0:
            raise InvalidArgument("singular curve: 4a^3 + 27b^2 = 0")

    @classmethod
    def over(cls, p: int, a, b, n: int = 1) -> "EllipticCurve":
        """Curve over F_{p^n}; a and b are ints or coefficient lists."""
        F = field_make(p, n)
        return cls(F, F.element(a), F.element(b))

    def __repr__(self) -> str:
        F = self.field
        return f"EllipticCurve(F_{F.size}, a={F.to_coeffs(self.a)}, b={F.to_coeffs(self.b)})"

    @property
    def q(self) -> int:
        """Size of the field the curve is defined over."""
        return (self.base or self).field.size

    def extend(self, k: int) -> "EllipticCurve":
        """The same curve over the degree-k extension of its field."""
        if not isinstance(k, int) or k < 1:
            raise InvalidArgument(f"k must be a positive int, got {k!r}")
        root = self.base or self
        if k == 1:
            return root
        big = field_make(root.field.p, root.field.n * k)
        emb = embedding(root.field, big)
        return EllipticCurve(big, emb(root.a), emb(root.b), base=root)

    def rhs(self, x: int) -> int:
        F = self.field
        return F.add(F.add(F.pow(x, 3), F.mul(self.a, x)), self.b)

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        return self.field.mul(P.y, P.y) == self.rhs(P.x)

    def point(self, x, y) -> CurvePoint:
        F = self.field
        P = CurvePoint(F.element(x), F.element(y))
        if not self.contains(P):
            raise InvalidArgument(f"({x}, {y}) is not on {self}")
        return P


def _check(E: EllipticCurve, *pts: CurvePoint) -> None:
    for P in pts:
        if not E.contains(P):
            raise InvalidArgument(f"{P} is not on {E}")


def ec_neg(E: EllipticCurve, P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x, E.field.neg(P.y))


def _add(E: EllipticCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    F = E.field
    if P.x == Q.x:
        if F.add(P.y, Q.y) == 0:
            return INFINITY
        # doubling, y != 0 here
        num = F.add(F.scalar(3, F.mul(P.x, P.x)), E.a)
        lam = F.div(num, F.scalar(2, P.y))
    else:
        lam = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x))
    x3 = F.sub(F.sub(F.mul(lam, lam), P.x), Q.x)
    y3 = F.sub(F.mul(lam, F.sub(P.x, x3)), P.y)
    return CurvePoint(x3, y3)


def ec_add(E: EllipticCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-and-tangent addition."""
    _check(E, P, Q)
    return _add(E, P, Q)


def _mul(E: EllipticCurve, m: int, P: CurvePoint) -> CurvePoint:
    if m < 0:
        return _mul(E, -m, ec_neg(E, P))
    out = INFINITY
    base = P
    while m:
        if m & 1:
            out = _add(E, out, base)
        base = _add(E, base, base)
        m >>= 1
    return out


def ec_mul(E: EllipticCurve, m: int, P: CurvePoint) -> CurvePoint:
    """m * P by double-and-add."""
    _check(E, P)
    return _mul(E, m, P)


def ec_frobenius(E: EllipticCurve, P: CurvePoint, times: int = 1) -> CurvePoint:
    """(x, y) -> (x^q, y^q) with q the size of the curve's field of definition."""
    _check(E, P)
    if P.is_infinity:
        return P
    e = pow(E.q, times, E.field.size - 1)
    F = E.field
    return CurvePoint(F.pow(P.x, e), F.pow(P.y, e))


def _check_budget(E: EllipticCurve, budget: int) -> None:
    if E.field.size > budget:
        raise ResourceLimit(f"field of size {E.field.size} exceeds the budget of {budget}")


def ec_points(E: EllipticCurve, budget: int = POINT_BUDGET) -> Tuple[List[CurvePoint], int]:
    """All points (infinity first) and their number."""
    _check_budget(E, budget)
    F = E.field
    roots: Dict[int, List[int]] = {}
    for y in F.elements():
        roots.setdefault(F.mul(y, y), []).append(y)
    pts = [INFINITY]
    for x in F.elements():
        for y in roots.get(E.rhs(x), ()):
            pts.append(CurvePoint(x, y))
    n = len(pts)
    size = F.size
    if (1 + size - n) ** 2 > 4 * size:
        raise InternalError(f"Hasse bound fails: {n} points over F_{size}")
    return pts, n


def point_order(E: EllipticCurve, P: CurvePoint, bound: int) -> int:
    Q = P
    for m in range(1, bound + 1):
        if Q.is_infinity:
            return m
        Q = _add(E, Q, P)
    raise InternalError(f"point order exceeds {bound}")


def ec_group_invariants(E: EllipticCurve, budget: int = POINT_BUDGET) -> Tuple[int, int]:
    """(n1, n2) with E(F) = Z/n1 x Z/n2 and n1 | n2; n2 is the exponent."""
    pts, n = ec_points(E, budget)
    n2 = 1
    for P in pts:
        n2 = math.lcm(n2, point_order(E, P, n))
    n1, rem = divmod(n, n2)
    if rem or n2 % n1:
        raise InternalError(f"inconsistent group structure: N = {n}, exponent {n2}")
    return n1, n2


def apply_frobenius_poly(E: EllipticCurve, coeffs: Sequence[int], P: CurvePoint) -> CurvePoint:
    """sum_j coeffs[j] * pi^j(P)."""
    out = INFINITY
    cur = P
    for j, c in enumerate(coeffs):
        if j:
            cur = ec_frobenius(E, cur)
        if c:
            out = _add(E, out, _mul(E, c, cur))
    return out


def kernel_frobenius_poly(E: EllipticCurve, coeffs: Sequence[int], k: int, budget: int = POINT_BUDGET) -> int:
    """Number of points of E(F_{q^k}) killed by sum_j coeffs[j] pi^j."""
    Ek = E.extend(k)
    pts, _ = ec_points(Ek, budget)
    return sum(1 for P in pts if apply_frobenius_poly(Ek, coeffs, P).is_infinity)


def kernel_cyc_frobenius(E: EllipticCurve, d: int, budget: int = POINT_BUDGET) -> int:
    """|ker cyclotomic_d(pi)|, counted inside E(F_{q^d})."""
    if not isinstance(d, int) or d < 1:
        raise InvalidArgument(f"d must be a positive int, got {d!r}")
    return kernel_frobenius_poly(E, cyclotomic(d).coeffs, d, budget)


def characteristic_witness(E: EllipticCurve, k: int, budget: int = POINT_BUDGET) -> Optional[CurvePoint]:
    """First point of E(F_{q^k}) where pi^2 - (1+q-N1) pi + q fails, else None."""
    _, n1 = ec_points(E.extend(1), budget)
    q = E.q
    coeffs = [q, -(1 + q - n1), 1]
    Ek = E.extend(k)
    pts, _ = ec_points(Ek, budget)
    for P in pts:
        if not apply_frobenius_poly(Ek, coeffs, P).is_infinity:
            return P
    return None


def coker_mk_compare(E: EllipticCurve, k: int, budget: int = POINT_BUDGET) -> dict:
    """Compare Z^k / M_k Z^k with the measured group E(F_{q^k}).

    Orders must agree.  Matching invariant factors additionally needs
    E(F_q) cyclic and End(E) = Z[pi], which is not checked here.
    """
    from ..ecnum import three_line_matrix

    _, n1 = ec_points(E.extend(1), budget)
    q = E.q
    mk = three_line_matrix(k).evaluate(q, n1)
    snf = smith_normal_form(mk)
    order = abs(snf.order())
    Ek = E.extend(k)
    _, nk = ec_points(Ek, budget)
    g1, g2 = ec_group_invariants(Ek, budget)
    predicted = [d for d in snf.invariant_factors if d != 1]
    measured = [d for d in (g1, g2) if d != 1]
    base_cyclic = ec_group_invariants(E.extend(1), budget)[0] == 1
    return {
        "k": k,
        "n": nk,
        "det": order,
        "order_match": order == nk,
        "invariants": predicted,
        "measured": [g1, g2],
        "matches": predicted == measured,
        "base_cyclic": base_cyclic,
    }


def frobenius_fixed_count(E: EllipticCurve, k: int, m: int, budget: int = POINT_BUDGET) -> int:
    """|ker(1 - pi^k)| inside E(F_{q^(k m)})."""
    coeffs = [1] + [0] * (k - 1) + [-1]
    return kernel_frobenius_poly(E, coeffs, k * m, budget)
