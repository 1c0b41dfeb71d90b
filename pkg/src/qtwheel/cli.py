"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical check fails (a JSON
witness is printed), 2 on usage errors.  Large integers are printed as
decimal strings; chip configurations stay plain integer arrays.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

from . import __version__, chipfire, curve, ecnum, langzeta, shiftfrob, structure, treebij, verify, wheel
from .errors import InternalError, QTWheelError
from .exactmath import BivariatePolynomial, Matrix, SNFResult, cyclotomic, series_expand
from .wheel import WheelParams


@dataclass
class Output:
    obj: Any
    text: Optional[str] = None
    code: int = 0


# -- argument parsing helpers -------------------------------------------
def int_list(s: str) -> List[int]:
    try:
        return [int(x) for x in s.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def eval_point(names):
    """Parser for "Q,T" or "q=Q,t=T" style evaluation points."""

    def parse(s: str):
        parts = [x for x in s.replace(" ", "").split(",") if x]
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"expected two values, got {s!r}")
        out = {}
        for i, part in enumerate(parts):
            key, _, val = part.rpartition("=")
            key = key or names[i]
            if key not in names:
                raise argparse.ArgumentTypeError(f"unknown variable {key!r}; use {names}")
            try:
                out[key] = int(val)
            except ValueError:
                raise argparse.ArgumentTypeError(f"not an integer: {val!r}")
        if len(out) != 2:
            raise argparse.ArgumentTypeError(f"need both of {names}")
        return out[names[0]], out[names[1]]

    return parse


def _params(args) -> WheelParams:
    return WheelParams(args.k, args.q, args.t)


def _budget(args, default: int) -> int:
    return args.budget if getattr(args, "budget", None) is not None else default


def _poly_out(p: BivariatePolynomial, second: str = "t") -> Output:
    return Output(p.to_json_obj(second), p.format(second))


def _config(args, chips) -> chipfire.Configuration:
    return chipfire.Configuration(tuple(chips), _params(args))


def _snf_text(res: SNFResult) -> str:
    return " ".join(str(d) for d in res.invariant_factors)


def _matrix_json(m: Matrix):
    return [[BivariatePolynomial.coerce(x).to_json_obj() for x in row] for row in m.rows]


# -- poly ------------------------------------------------------------------
def cmd_poly(args) -> Output:
    if args.which in ("wk", "wcyc"):
        p = wheel.wheel_poly(args.k) if args.which == "wk" else wheel.wcyc(args.d)
        if args.eval:
            v = p.evaluate(*args.eval)
            return Output({"value": str(v)}, str(v))
        return _poly_out(p)
    p = ecnum.nk_poly(args.k) if args.which == "nk" else ecnum.ecyc(args.d)
    if args.eval:
        v = p.evaluate(*args.eval)
        return Output({"value": str(v)}, str(v))
    return _poly_out(p, "n1")


# -- crit ------------------------------------------------------------------
def cmd_crit(args) -> Output:
    params = _params(args)
    budget = _budget(args, chipfire.ENUMERATION_BUDGET)
    if args.which == "list":
        g = chipfire.enumerate_criticals(params, budget)
        rows = [list(c) for c in g.elements]
        text = "\n".join(",".join(map(str, r)) for r in rows)
        return Output({"order": str(g.order), "identity": list(g.identity.chips), "elements": rows}, text)
    if args.which == "identity":
        c = chipfire.group_identity(params)
        return Output({"result": list(c.chips)}, ",".join(map(str, c.chips)))
    configs = [_config(args, c) for c in (args.config or [])]
    need = {"check": 1, "add": 2, "inverse": 1, "scalar": 1, "tree": 1}[args.which]
    if len(configs) != need:
        raise UsageError(f"crit {args.which} takes exactly {need} --config")
    c = configs[0]
    if args.which == "check":
        blocks = chipfire.is_critical_blocks(c) if params.q >= 1 else None
        dynamic = chipfire.is_critical_dynamic(c)
        obj = {"critical": dynamic, "stable": c.is_stable(), "blocks": blocks, "dynamic": dynamic}
        return Output(obj, "critical" if dynamic else "not critical")
    if args.which == "add":
        for x in configs:
            if not x.is_legal():
                raise UsageError("configurations must be nonnegative")
        r = chipfire.group_add(configs[0], configs[1])
    elif args.which == "inverse":
        r = chipfire.group_inverse(c)
    elif args.which == "scalar":
        r = chipfire.group_scalar(args.m, c)
    else:
        tr = treebij.config_to_tree(c)
        obj = tr.to_json_obj()
        obj["dist"] = tr.dist
        lines = [f"spoke v{v} label {lab}" for v, lab in tr.spokes]
        lines += [f"arc v{a['from']}->v{a['to']} label {a['label']}" for a in obj["arcs"]]
        return Output(obj, "\n".join(lines))
    return Output({"result": list(r.chips)}, ",".join(map(str, r.chips)))


# -- group -----------------------------------------------------------------
def cmd_group(args) -> Output:
    if args.which == "wheel":
        res = structure.wheel_group_invariants(_params(args))
        return Output(res.to_json_obj(), _snf_text(res))
    if args.which == "deformed":
        res, d1 = structure.deformed_wheel_invariants(_params(args))
        obj = res.to_json_obj()
        obj["predicted_d1"] = str(d1)
        return Output(obj, f"{_snf_text(res)} (predicted d1 = {d1})")
    m = structure.wheel_two_by_two(args.k)
    if args.eval:
        q, t = args.eval
        res = structure.padded_snf(m, q, t, args.k)
        ev = m.evaluate(q, t)
        obj = {"matrix": [[str(x) for x in row] for row in ev.rows]}
        obj.update(res.to_json_obj())
        return Output(obj, f"{ev.tolist()}\n{_snf_text(res)}")
    text = "\n".join(" | ".join(BivariatePolynomial.coerce(x).format() for x in row) for row in m.rows)
    return Output({"matrix": _matrix_json(m)}, text)


# -- shift -----------------------------------------------------------------
def cmd_shift(args) -> Output:
    budget = _budget(args, chipfire.ENUMERATION_BUDGET)
    if args.which == "kernel":
        size, expected = verify_kernel(args.d, args.q, args.t, budget)
        ok = size == expected
        obj = {"kernel_size": str(size), "expected": str(expected), "matches": ok}
        return Output(obj, f"{size} (expected {expected})", 0 if ok else 1)
    if args.which == "quad":
        witness = shiftfrob.quadratic_witness(_params(args), budget)
        obj = {"holds": witness is None, "witness": None if witness is None else list(witness.chips)}
        return Output(obj, "holds" if witness is None else f"fails at {witness.chips}", 0 if witness is None else 1)
    small = chipfire.Configuration(tuple(args.config), WheelParams(args.k1, args.q, args.t))
    r = shiftfrob.embed(small, args.k2)
    return Output({"result": list(r.chips)}, ",".join(map(str, r.chips)))


def verify_kernel(d: int, q: int, t: int, budget: int):
    # unlike shiftfrob.verify_wcyc_kernel, report a mismatch instead of raising
    size = len(shiftfrob.kernel_of_rho_poly(cyclotomic(d), WheelParams(d, q, t), budget))
    return size, wheel.wcyc(d).evaluate(q, t)


# -- curve -----------------------------------------------------------------
def cmd_curve(args) -> Output:
    E = curve.EllipticCurve.over(args.p, args.a, args.b, args.n)
    budget = _budget(args, curve.POINT_BUDGET)
    if args.which == "count":
        k = args.k or 1
        _, n = curve.ec_points(E.extend(k), budget)
        return Output({"k": k, "n": str(n)}, str(n))
    if args.which == "group":
        k = args.k or 1
        n1, n2 = curve.ec_group_invariants(E.extend(k), budget)
        return Output({"k": k, "n": str(n1 * n2), "invariants": [str(n1), str(n2)]}, f"Z/{n1} x Z/{n2}")
    if args.which == "cyc-kernel":
        d = args.d or 1
        size = curve.kernel_cyc_frobenius(E, d, budget)
        _, n1 = curve.ec_points(E, budget)
        expected = ecnum.ecyc(d).evaluate(E.q, n1)
        ok = size == expected
        obj = {"d": d, "n": str(size), "expected": str(expected), "matches": ok}
        return Output(obj, f"{size} (expected {expected})", 0 if ok else 1)
    k = args.k or 1
    rep = curve.coker_mk_compare(E, k, budget)
    obj = {
        "k": k,
        "n": str(rep["n"]),
        "det": str(rep["det"]),
        "order_match": rep["order_match"],
        "invariants": [str(x) for x in rep["invariants"]],
        "measured": [str(x) for x in rep["measured"]],
        "matches": rep["matches"],
        "base_cyclic": rep["base_cyclic"],
    }
    text = f"N = {rep['n']}, |det M_k| = {rep['det']}, coker {rep['invariants']} vs {rep['measured']}"
    return Output(obj, text, 0 if rep["order_match"] else 1)


# -- lang ------------------------------------------------------------------
def cmd_lang(args) -> Output:
    if args.which == "accept":
        ok = langzeta.mg_accepts(args.word, args.q, args.t)
        return Output({"accepted": ok}, "accepted" if ok else "rejected")
    if args.which == "count":
        n = langzeta.word_count(args.k, args.q, args.t)
        return Output({"count": str(n)}, str(n))
    if (args.q is None) != (args.t is None):
        raise UsageError("give both --q and --t, or neither for the symbolic zeta")
    z = langzeta.zeta_language() if args.q is None else langzeta.zeta_language(args.q, args.t)
    obj = z.to_json_obj()
    if args.series is not None:
        coeffs = series_expand(z, args.series)
        obj["series"] = [
            str(c.constant_term()) if c.is_constant() else c.to_json_obj() for c in coeffs
        ]
    return Output(obj, f"({z.numerator}) / ({z.denominator})")


# -- verify ----------------------------------------------------------------
def cmd_verify(args) -> Output:
    ctx = verify.Context(
        seed=args.seed if args.seed is not None else verify.DEFAULT_SEED,
        kmax=args.kmax,
        budget=_budget(args, chipfire.ENUMERATION_BUDGET),
    )
    results = verify.run_checks(verify.SUITES[args.suite], ctx)
    ok = all(r.ok for r in results)
    obj = {"passed": ok, "checks": [r.to_json_obj() for r in results]}
    return Output(obj, "\n".join(r.line() for r in results), 0 if ok else 1)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="qtwheel",
        description="(q,t)-wheel critical groups, elliptic point counts and cyclic-language zetas.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    parser.add_argument("--budget", type=int, default=None, help="enumeration budget")
    top = parser.add_subparsers(dest="command", required=True)

    def wheel_args(p, k=True):
        if k:
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--t", type=int, required=True)

    # poly
    poly = top.add_parser("poly", help="wheel and point-count polynomials")
    poly_sub = poly.add_subparsers(dest="which", required=True)
    p = poly_sub.add_parser("wk", parents=[common], help="W_k(q,t)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eval", type=eval_point(("q", "t")), metavar="Q,T")
    p = poly_sub.add_parser("wcyc", parents=[common], help="cyclotomic factor of W_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--eval", type=eval_point(("q", "t")), metavar="Q,T")
    p = poly_sub.add_parser("nk", parents=[common], help="N_k(q,N1)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eval", type=eval_point(("q", "n1")), metavar="q=Q,n1=N")
    p = poly_sub.add_parser("ecyc", parents=[common], help="cyclotomic factor of N_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--eval", type=eval_point(("q", "n1")), metavar="q=Q,n1=N")
    poly.set_defaults(func=cmd_poly)

    # crit
    crit = top.add_parser("crit", help="critical configurations and the group law")
    crit_sub = crit.add_subparsers(dest="which", required=True)
    for name in ("list", "check", "add", "identity", "inverse", "scalar", "tree"):
        p = crit_sub.add_parser(name, parents=[common])
        wheel_args(p)
        if name not in ("list", "identity"):
            p.add_argument("--config", type=int_list, action="append", metavar="C1,C2,...")
        if name == "scalar":
            p.add_argument("--m", type=int, required=True)
    crit.set_defaults(func=cmd_crit)

    # group
    group = top.add_parser("group", help="invariant factors")
    group_sub = group.add_subparsers(dest="which", required=True)
    for name in ("wheel", "deformed"):
        wheel_args(group_sub.add_parser(name, parents=[common]))
    p = group_sub.add_parser("two-by-two", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eval", type=eval_point(("q", "t")), metavar="Q,T")
    group.set_defaults(func=cmd_group)

    # shift
    shift = top.add_parser("shift", help="the rotation map")
    shift_sub = shift.add_subparsers(dest="which", required=True)
    p = shift_sub.add_parser("kernel", parents=[common])
    p.add_argument("--d", type=int, required=True)
    wheel_args(p, k=False)
    wheel_args(shift_sub.add_parser("quad", parents=[common]))
    p = shift_sub.add_parser("embed", parents=[common])
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    wheel_args(p, k=False)
    p.add_argument("--config", type=int_list, required=True)
    shift.set_defaults(func=cmd_shift)

    # curve
    cv = top.add_parser("curve", help="elliptic curves y^2 = x^3 + ax + b")
    cv_sub = cv.add_subparsers(dest="which", required=True)
    for name in ("count", "group", "cyc-kernel", "coker"):
        p = cv_sub.add_parser(name, parents=[common])
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--n", type=int, default=1, help="curve defined over F_{p^n}")
        p.add_argument("--a", type=int_list, required=True, help="coefficient list of a")
        p.add_argument("--b", type=int_list, required=True, help="coefficient list of b")
        if name == "cyc-kernel":
            p.add_argument("--d", type=int)
        else:
            p.add_argument("--k", type=int)
    cv.set_defaults(func=cmd_curve)

    # lang
    lang = top.add_parser("lang", help="the cyclic language and its zeta")
    lang_sub = lang.add_subparsers(dest="which", required=True)
    p = lang_sub.add_parser("accept", parents=[common])
    wheel_args(p, k=False)
    p.add_argument("--word", type=int_list, required=True)
    p = lang_sub.add_parser("count", parents=[common])
    wheel_args(p)
    p = lang_sub.add_parser("zeta", parents=[common])
    p.add_argument("--q", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--series", type=int, metavar="N")
    lang.set_defaults(func=cmd_lang)

    # verify
    p = top.add_parser("verify", parents=[common], help="run the identity suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), default="all")
    p.add_argument("--kmax", type=int, default=verify.DEFAULT_KMAX, help="largest k in the census grid")
    p.set_defaults(func=cmd_verify)
    return parser


def emit(out: Output, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "text":
        stream.write((out.text if out.text is not None else json.dumps(out.obj)) + "\n")
    else:
        stream.write(json.dumps(out.obj) + "\n")
    stream.flush()


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        emit(Output({"error": "check failed", "witness": str(exc)}, f"check failed: {exc}"), args.format)
        return 1
    except QTWheelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(out, args.format)
    return out.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
