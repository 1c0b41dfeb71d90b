"""Identity suite: one named check per acceptance criterion.

Each check returns ``(passed, detail)``; ``run_checks`` adds wall-clock
timings and compares them with the per-check limits.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import chipfire, curve, ecnum, langzeta, shiftfrob, structure, treebij, wheel
from .chipfire import Configuration, WheelParams
from .exactmath import (
    ONE,
    Q,
    T,
    BivariatePolynomial,
    Matrix,
    UniPoly,
    cyclotomic,
    det_bareiss,
    divisors,
    exp_from_counts,
    log_series_counts,
    series_expand,
    smith_normal_form,
)

DEFAULT_SEED = 20240601
DEFAULT_KMAX = 5
PROPERTY_CASES = 200

# printed table of the cyclotomic wheel factors, transcribed term by term
WCYC_TABLE: Dict[int, BivariatePolynomial] = {
    1: T,
    2: T + 2 * (1 + Q),
    3: T**2 + (3 + 3 * Q) * T + 3 * (1 + Q + Q**2),
    4: T**2 + (2 + 2 * Q) * T + 2 * (1 + Q**2),
    5: T**4 + (5 + 5 * Q) * T**3 + (10 + 15 * Q + 10 * Q**2) * T**2
    + (10 + 15 * Q + 15 * Q**2 + 10 * Q**3) * T + 5 * (1 + Q + Q**2 + Q**3 + Q**4),
    6: T**2 + (1 + Q) * T + (1 - Q + Q**2),
    8: T**4 + (4 + 4 * Q) * T**3 + (6 + 8 * Q + 6 * Q**2) * T**2
    + (4 + 4 * Q + 4 * Q**2 + 4 * Q**3) * T + 2 * (1 + Q**4),
    9: T**6 + (6 + 6 * Q) * T**5 + (15 + 24 * Q + 15 * Q**2) * T**4
    + (21 + 36 * Q + 36 * Q**2 + 21 * Q**3) * T**3
    + (18 + 27 * Q + 27 * Q**2 + 27 * Q**3 + 18 * Q**4) * T**2
    + (9 + 9 * Q + 9 * Q**2 + 9 * Q**3 + 9 * Q**4 + 9 * Q**5) * T + 3 * (1 + Q**3 + Q**6),
    10: T**4 + (3 + 3 * Q) * T**3 + (4 + 3 * Q + 4 * Q**2) * T**2
    + (2 + Q + Q**2 + 2 * Q**3) * T + (1 - Q + Q**2 - Q**3 + Q**4),
    12: T**4 + (4 + 4 * Q) * T**3 + (5 + 8 * Q + 5 * Q**2) * T**2
    + (2 + 2 * Q + 2 * Q**2 + 2 * Q**3) * T + (1 - Q**2 + Q**4),
}


@dataclass
class Context:
    seed: int = DEFAULT_SEED
    kmax: int = DEFAULT_KMAX
    budget: int = chipfire.ENUMERATION_BUDGET
    groups: Dict[WheelParams, chipfire.CriticalGroup] = field(default_factory=dict)

    def group(self, params: WheelParams) -> chipfire.CriticalGroup:
        if params not in self.groups:
            self.groups[params] = chipfire.enumerate_criticals(params, self.budget)
        return self.groups[params]

    def census_grid(self):
        return [WheelParams(k, q, t) for k, q, t in itertools.product(range(1, self.kmax + 1), (1, 2, 3), (1, 2, 3))]


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    seconds: float
    limit: float
    detail: dict

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds <= self.limit

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        note = "" if self.seconds <= self.limit else " (over time limit)"
        return f"[{status}] {self.number:2d} {self.name}: {self.seconds:.2f}s / {self.limit:g}s{note}"

    def to_json_obj(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.ok,
            "seconds": f"{self.seconds:.3f}",
            "limit": str(self.limit),
            "detail": _stringify(self.detail),
        }


def _stringify(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _stringify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_stringify(v) for v in x]
    if isinstance(x, BivariatePolynomial):
        return x.format()
    return str(x)


# -- 1 -----------------------------------------------------------------
def check_wcyc_table(ctx: Context):
    bad = [d for d, expected in WCYC_TABLE.items() if wheel.wcyc(d) != expected]
    return not bad, {"checked": sorted(WCYC_TABLE), "mismatches": bad}


# -- 2 -----------------------------------------------------------------
def check_figure_one(ctx: Context):
    p3, p6 = WheelParams(3, 3, 2), WheelParams(6, 3, 2)
    a, b = Configuration((2, 4, 2), p3), Configuration((0, 4, 1), p3)
    s3 = chipfire.group_add(a, b)
    s6 = chipfire.group_add(shiftfrob.embed(a, 6), shiftfrob.embed(b, 6))
    ok = s3.chips == (1, 0, 4) and s6.chips == (1, 0, 4, 1, 0, 4)
    ok = ok and shiftfrob.embed(a, 6).chips == (2, 4, 2, 2, 4, 2)
    ok = ok and chipfire.is_critical(s6) and s6.params == p6
    return ok, {"sum_k3": list(s3.chips), "sum_k6": list(s6.chips)}


# -- 3 -----------------------------------------------------------------
def check_reciprocity(ctx: Context):
    bad = []
    for k in range(1, 11):
        n = ecnum.nk_poly(k)
        if n != -wheel.wheel_poly(k).negate_t() or n != ecnum.nk_via_detmk(k):
            bad.append(k)
    return not bad, {"k_max": 10, "mismatches": bad}


# -- 4 -----------------------------------------------------------------
def check_census(ctx: Context):
    bad = []
    vectors = 0
    for p in ctx.census_grid():
        group = ctx.group(p)
        if group.order != wheel.wheel_poly(p.k).evaluate(p.q, p.t):
            bad.append(("order", p.k, p.q, p.t))
        for c in chipfire.stable_vectors(p):
            vectors += 1
            if chipfire._is_critical_blocks(c, p.q, p.t) != chipfire._is_critical_dynamic(c, p.q, p.t):
                bad.append(("test", p.k, p.q, p.t, list(c)))
                break
    return not bad, {"grid_points": len(ctx.census_grid()), "vectors": vectors, "failures": bad[:5]}


# -- 5 -----------------------------------------------------------------
def check_bijection(ctx: Context):
    bad = []
    for p in ctx.census_grid():
        group = ctx.group(p)
        skeletons: Dict[tuple, int] = {}
        weights: Dict[tuple, Tuple[int, int]] = {}
        seen = set()
        for c in group:
            tr = treebij.config_to_tree(c)
            if not tr.is_valid() or tr in seen or treebij.tree_to_config(tr) != c:
                bad.append(("roundtrip", p.k, p.q, p.t, list(c.chips)))
                break
            seen.add(tr)
            sk = tr.skeleton()
            skeletons[sk] = skeletons.get(sk, 0) + 1
            weights[sk] = (tr.dist, tr.spoke_count)
        weighted: Dict[tuple, int] = {}
        for sk, n in skeletons.items():
            d, s = weights[sk]
            if n != p.q**d * p.t**s:
                bad.append(("labels", p.k, p.q, p.t))
                break
            weighted[(d, s)] = weighted.get((d, s), 0) + 1
        if BivariatePolynomial(weighted) != wheel.wheel_poly(p.k):
            bad.append(("weight", p.k, p.q, p.t))
    return not bad, {"grid_points": len(ctx.census_grid()), "failures": bad[:5]}


# -- 6 -----------------------------------------------------------------
def check_quadratic(ctx: Context):
    bad = []
    for p in ctx.census_grid():
        coeffs = [p.q, -(1 + p.q + p.t), 1]
        zero = ctx.group(p).identity.chips
        for c in ctx.group(p).elements:
            if chipfire._class_rep(shiftfrob._apply(coeffs, c), p.q, p.t) != zero:
                bad.append((p.k, p.q, p.t, list(c)))
                break
    return not bad, {"grid_points": len(ctx.census_grid()), "witnesses": bad[:5]}


# -- 7 -----------------------------------------------------------------
def check_cyclotomic_kernels(ctx: Context):
    ds = (1, 2, 3, 4, 6)
    sizes = {}
    bad = []
    for d, q, t in itertools.product(ds, (1, 2), (1, 2)):
        p = WheelParams(d, q, t)
        coeffs = cyclotomic(d).coeffs
        zero = ctx.group(p).identity.chips
        n = sum(
            1 for c in ctx.group(p).elements
            if chipfire._class_rep(shiftfrob._apply(coeffs, c), q, t) == zero
        )
        sizes[(d, q, t)] = n
        if n != wheel.wcyc(d).evaluate(q, t):
            bad.append(("kernel", d, q, t, n))
    for k, q, t in itertools.product(ds, (1, 2), (1, 2)):
        prod = math.prod(sizes[(d, q, t)] for d in divisors(k))
        if prod != ctx.group(WheelParams(k, q, t)).order:
            bad.append(("product", k, q, t))
    largest = ctx.group(WheelParams(6, 2, 2)).order
    return not bad, {"largest_group": largest, "failures": bad}


# -- 8 -----------------------------------------------------------------
EMBED_PAIRS = ((1, 2), (1, 3), (2, 4), (3, 6), (2, 6))


def check_embeddings(ctx: Context):
    bad = []
    for (k1, k2), q, t in itertools.product(EMBED_PAIRS, (1, 2), (1, 2)):
        small = ctx.group(WheelParams(k1, q, t))
        big = ctx.group(WheelParams(k2, q, t))
        image = {shiftfrob.embed(c, k2) for c in small}
        if len(image) != small.order or not all(c in big for c in image):
            bad.append(("injective", k1, k2, q, t))
            continue
        elems = small.configurations()
        rng = random.Random(ctx.seed + k1 * 100 + k2)
        pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(20)]
        for a, b in pairs:
            lhs = shiftfrob.embed(chipfire.group_add(a, b), k2)
            rhs = chipfire.group_add(shiftfrob.embed(a, k2), shiftfrob.embed(b, k2))
            if lhs != rhs:
                bad.append(("homomorphism", k1, k2, q, t))
                break
        coeffs = shiftfrob.one_minus_x_power(k1)
        zero = big.identity.chips
        kernel = {
            Configuration(c, big.params)
            for c in big.elements
            if chipfire._class_rep(shiftfrob._apply(coeffs, c), q, t) == zero
        }
        if kernel != image:
            bad.append(("kernel", k1, k2, q, t))
    return not bad, {"pairs": [list(pr) for pr in EMBED_PAIRS], "failures": bad}


# -- 9 -----------------------------------------------------------------
def check_structure(ctx: Context):
    bad = []
    for k, q, t in itertools.product(range(3, 9), (1, 2, 3), (1, 2, 3)):
        full = structure.wheel_group_invariants(WheelParams(k, q, t))
        if len(full.nontrivial()) > 2:
            bad.append(("two-factors", k, q, t))
        if structure.padded_snf(structure.wheel_two_by_two(k), q, t, k) != full:
            bad.append(("2x2", k, q, t))
    w3 = structure.wheel_group_invariants(WheelParams(3, 1, 1)).invariant_factors
    lucas3 = 4
    if w3 != (1, lucas3, lucas3):
        bad.append(("lucas", w3))
    return not bad, {"W3(1,1)": list(w3), "failures": bad}


# -- 10 ----------------------------------------------------------------
def check_deformed(ctx: Context):
    bad = []
    for k, q, t in itertools.product(range(1, 9), range(1, 6), range(1, 6)):
        res = smith_normal_form(structure.deformed_laplacian(k, q, t))
        predicted = math.gcd(t, structure.q_sum(k, q))
        if res.invariant_factors[-2] != predicted:
            bad.append((k, q, t, list(res.invariant_factors)))
        if (q, t) == (1, 1) and len(res.nontrivial()) > 1:
            bad.append(("not cyclic", k))
    return not bad, {"grid_points": 8 * 5 * 5, "failures": bad[:5]}


# -- 11 ----------------------------------------------------------------
TEST_CURVES = ((5, 1, 1), (5, 2, 1), (7, 1, 3), (7, 0, 2))


def _curve_report(p: int, a: int, b: int) -> Tuple[bool, dict]:
    E = curve.EllipticCurve.over(p, a, b)
    counts = [curve.ec_points(E.extend(k))[1] for k in (1, 2, 3)]
    n1 = counts[0]
    ok = True
    ok &= counts == [ecnum.nk_value(p, n1, k) for k in (1, 2, 3)]
    ok &= (1 + p - n1) ** 2 <= 4 * p
    kernels = [curve.kernel_cyc_frobenius(E, d) for d in (1, 2, 3)]
    ok &= kernels == [ecnum.ecyc_value(p, n1, d) for d in (1, 2, 3)]
    dets = [abs(det_bareiss(ecnum.three_line_matrix(k).evaluate(p, n1))) for k in (1, 2, 3)]
    ok &= dets == counts
    fixed = [curve.frobenius_fixed_count(E, 1, m) for m in (1, 2, 3)]
    ok &= fixed == [n1] * 3
    ok &= all(curve.characteristic_witness(E, k) is None for k in (1, 2, 3))
    pts, _ = curve.ec_points(E)
    ok &= all(curve.ec_frobenius(E, P) == P for P in pts)
    return ok, {
        "curve": f"y^2 = x^3 + {a}x + {b} over F_{p}",
        "N": counts,
        "cyc_kernels": kernels,
        "det_Mk": dets,
        "group": list(curve.ec_group_invariants(E)),
    }


def check_curves(ctx: Context):
    reports = []
    ok = True
    for p, a, b in TEST_CURVES:
        good, rep = _curve_report(p, a, b)
        ok &= good
        rep["passed"] = good
        reports.append(rep)
    first = reports[0]
    ok &= first["N"] == [9, 27, 108] and first["cyc_kernels"] == [9, 3, 12]
    return ok, {"curves": reports}


# -- 12 ----------------------------------------------------------------
def check_language_zeta(ctx: Context):
    z = langzeta.zeta_language()
    ok = z.same_function(langzeta.zeta_det_form())
    logs = log_series_counts(z, 8)
    ok &= logs == [wheel.wheel_poly(k) for k in range(1, 9)]
    ok &= exp_from_counts(logs, 8) == series_expand(z, 8)
    ok &= langzeta.reciprocity_holds()
    bad = []
    for k, q, t in itertools.product(range(1, 5), (1, 2, 3), (1, 2, 3)):
        n = langzeta.count_accepted_words(k, q, t)
        if n != langzeta.word_count(k, q, t) or n != wheel.wheel_poly(k).evaluate(q, t):
            bad.append((k, q, t, n))
    ok &= not bad
    return ok, {"log_series_order": 8, "scan_failures": bad}


# -- 13 ----------------------------------------------------------------
def _random_poly(rng: random.Random) -> BivariatePolynomial:
    return BivariatePolynomial(
        {(rng.randrange(4), rng.randrange(4)): rng.randint(-9, 9) for _ in range(rng.randrange(5))}
    )


def _random_order_stabilize(chips: Sequence[int], q: int, t: int, rng: random.Random) -> tuple:
    c = list(chips)
    thr = 1 + q + t
    while True:
        ready = [i for i, x in enumerate(c) if x >= thr]
        if not ready:
            return tuple(c)
        chipfire._fire_rim(c, rng.choice(ready), q, t)


def check_properties(ctx: Context):
    rng = random.Random(ctx.seed)
    n = PROPERTY_CASES
    failures: Dict[str, list] = {"stabilization": [], "ring": [], "snf": [], "cyclotomic": []}

    for _ in range(n):
        k, q, t = rng.randint(1, 6), rng.randint(0, 3), rng.randint(1, 3)
        chips = [rng.randint(0, 4 * (q + t + 1)) for _ in range(k)]
        ref = chipfire._stabilize(chips, q, t, "lowest")
        others = (
            chipfire._stabilize(chips, q, t, "highest"),
            _random_order_stabilize(chips, q, t, rng),
        )
        if any(o != ref for o in others):
            failures["stabilization"].append((k, q, t, chips))

    for _ in range(n):
        a, b, c = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        x, y = rng.randint(-5, 5), rng.randint(-5, 5)
        good = (
            (a + b) + c == a + (b + c)
            and (a * b) * c == a * (b * c)
            and a * b == b * a
            and a * (b + c) == a * b + a * c
            and a - a == 0
            and a * ONE == a
            and (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
        )
        if not good:
            failures["ring"].append((a.format(), b.format(), c.format()))

    for _ in range(n):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix([[rng.randint(-12, 12) for _ in range(c)] for _ in range(r)])
        res = smith_normal_form(m, transforms=True)
        f = res.invariant_factors
        good = all(x >= 0 for x in f)
        good &= all(f[i + 1] % f[i] == 0 if f[i] else f[i + 1] == 0 for i in range(len(f) - 1))
        d = res.left * m * res.right
        good &= all(d[i, j] == (f[i] if i == j else 0) for i in range(r) for j in range(c))
        good &= abs(det_bareiss(res.left)) == 1 and abs(det_bareiss(res.right)) == 1
        if r == c:
            good &= res.order() == abs(det_bareiss(m))
        if not good:
            failures["snf"].append(m.tolist())

    for _ in range(n):
        m = rng.randint(1, 60)
        prod = UniPoly([1])
        for d in divisors(m):
            prod = prod * cyclotomic(d)
        if prod != UniPoly([-1] + [0] * (m - 1) + [1]):
            failures["cyclotomic"].append(m)

    ok = not any(failures.values())
    return ok, {"seed": ctx.seed, "cases_per_suite": n, "failures": {k: v[:3] for k, v in failures.items()}}


CHECKS: List[Tuple[int, str, float, Callable[[Context], Tuple[bool, dict]]]] = [
    (1, "wcyc-table", 5, check_wcyc_table),
    (2, "figure-1", 1, check_figure_one),
    (3, "point-count-reciprocity", 10, check_reciprocity),
    (4, "critical-census", 60, check_census),
    (5, "tree-bijection", 60, check_bijection),
    (6, "shift-quadratic", 60, check_quadratic),
    (7, "cyclotomic-kernels", 300, check_cyclotomic_kernels),
    (8, "embeddings", 60, check_embeddings),
    (9, "two-by-two-structure", 30, check_structure),
    (10, "deformed-wheel", 30, check_deformed),
    (11, "curves", 120, check_curves),
    (12, "language-zeta", 120, check_language_zeta),
    (13, "property-suites", 120, check_properties),
]

SUITES = {
    "all": [c[0] for c in CHECKS],
    "poly": [1, 3],
    "crit": [2, 4, 5],
    "shift": [6, 7, 8],
    "group": [9, 10],
    "curve": [11],
    "lang": [12],
    "props": [13],
}


def run_check(number: int, ctx: Optional[Context] = None) -> CheckResult:
    ctx = ctx or Context()
    num, name, limit, fn = CHECKS[number - 1]
    start = time.perf_counter()
    passed, detail = fn(ctx)
    return CheckResult(num, name, bool(passed), time.perf_counter() - start, limit, detail)


def run_checks(numbers: Sequence[int], ctx: Optional[Context] = None) -> List[CheckResult]:
    # a fresh context per check keeps each timing self-contained
    base = ctx or Context()
    return [run_check(n, Context(base.seed, base.kmax, base.budget)) for n in numbers]
