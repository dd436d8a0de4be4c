"""``rigid-calc`` command line.

Exit status: 0 on success, 1 when a verification or comparison fails,
2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import fixtures as F
from . import verify as V
from .algebra import format_rational
from .errors import ExpressionSyntaxError, RigidCalcError
from .expr import parse_operator, parse_param, parse_theta_poly
from .hodge import (
    INFINITY,
    HodgeProfile,
    compare_with_table,
    derive_counts,
    mc_profile,
    parabolic_rigidity_solve,
    pullback_profile,
    selfdual_completion_solve,
    stationary_phase_table,
)
from .monodromy import (
    ExponentClass,
    MonodromyTuple,
    kummer_pullback_tuple,
    mc_local,
    mc_rank,
    rigidity_index,
    tensor_rank_one,
)
from .operators import (
    INF,
    ThetaFormOperator,
    fourier_quotient,
    ft_theta,
    format_exponents,
    indicial_at,
    inversion_normalized,
    kummer_pullback,
    left_factor_divide,
    match_up_to_twist,
    newton_slopes_at_infinity,
    op_mul,
    point_label,
    riemann_scheme,
    twist_shift,
)


class UsageError(Exception):
    pass


class Failure(Exception):
    """Raised to exit with status 1 after printing a result."""


# ---------------------------------------------------------------------------
# input helpers


def _operators(args) -> list[ThetaFormOperator]:
    out = []
    for fid in args.fixture or []:
        fx = F.get_fixture(fid)
        if fx.kind != "operator":
            raise UsageError(f"{fid} is a {fx.kind}, not an operator")
        out.append(fx.payload)
    for src in args.expr or []:
        out.append(parse_operator(src))
    return out


def _one_operator(args) -> ThetaFormOperator:
    ops = _operators(args)
    if len(ops) != 1:
        raise UsageError("give exactly one operator via --fixture or --expr")
    return ops[0]


def _witness(args, required: bool = False):
    if not args.witness:
        if required:
            raise UsageError("--witness is required")
        return None
    fx = F.get_fixture(args.witness)
    if fx.kind != "witness":
        raise UsageError(f"{args.witness} is not a witness")
    return fx.payload


def _typed(fid: str, kind: str):
    fx = F.get_fixture(fid)
    if fx.kind != kind:
        raise UsageError(f"{fid} is a {fx.kind}, expected {kind}")
    return fx.payload


def _one_fixture(args, kind: str):
    if not args.fixture or len(args.fixture) != 1:
        raise UsageError(f"give exactly one {kind} fixture via --fixture")
    return _typed(args.fixture[0], kind)


def _profile(args) -> HodgeProfile:
    return _one_fixture(args, "profile")


def _with_delta(P: HodgeProfile) -> HodgeProfile:
    if P.delta is not None or not P.points:
        return P
    c = derive_counts(P)
    return P.with_delta(parabolic_rigidity_solve(c.h, c.omega))


def _preimages(labels, k: int) -> dict:
    labels = [l for l in labels if l not in ("0", INFINITY)]
    for known in F.PREIMAGES.values():
        if set(known) == set(labels) and all(len(v) == k for v in known.values()):
            return known
    return {l: [f"{l}#{i}" for i in range(k)] for l in labels}


def _vector(text: str | None) -> tuple | None:
    if text is None:
        return None
    return tuple(int(x) for x in text.split(",") if x.strip())


# ---------------------------------------------------------------------------
# output


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _op_json(op: ThetaFormOperator) -> dict:
    return {str(i): str(p) for i, p in sorted(op.terms.items())}


def _emit_op(args, op: ThetaFormOperator, extra: dict | None = None) -> None:
    data = {"operator": _op_json(op), "text": str(op)}
    lines = [str(op)]
    for k, v in (extra or {}).items():
        data[k] = v
        lines.append(f"{k}: {v}")
    _emit(args, "\n".join(lines), data)


def _profile_text(P: HodgeProfile) -> str:
    lines = []
    if P.points:
        c = derive_counts(P)
        n = len(c.h)
        lines.append("p       " + "  ".join(f"{p:>4}" for p in range(n)))
        lines.append("h       " + "  ".join(f"{x:>4}" for x in c.h))
        if P.delta is not None:
            lines.append("delta   " + "  ".join(f"{x:>4}" for x in P.delta))
        lines.append("omega   " + "  ".join(f"{x:>4}" for x in c.omega))
        lines.append("omega!= " + "  ".join(f"{x:>4}" for x in c.omega_ne_inf))
        for label, data in P.points:
            for (cls, level, p), m in data.counts:
                lines.append(f"nu[{label}, {cls}, l={level}, p={p}] = {m}")
    else:
        lines.append(f"h={list(P.h or ())} delta={list(P.delta or ())} omega={list(P.omega or ())}")
    return "\n".join(lines)


def _emit_profile(args, P: HodgeProfile) -> None:
    _emit(args, _profile_text(P), P.to_json())


def _emit_tuple(args, T: MonodromyTuple) -> None:
    lines = [f"rank {T.rank}"]
    for lbl, lt in T.all_points():
        lines.append(f"{lbl}: " + ", ".join(str(b) for b in lt.blocks))
    _emit(args, "\n".join(lines), T.to_json())


# ---------------------------------------------------------------------------
# op


def cmd_op(args) -> int:
    action = args.action
    if action == "parse":
        _emit_op(args, _one_operator(args))
    elif action == "mul":
        ops = _operators(args)
        if len(ops) < 2:
            raise UsageError("mul needs at least two operators")
        out = ops[0]
        for op in ops[1:]:
            out = op_mul(out, op)
        _emit_op(args, out)
    elif action == "ft":
        op = _one_operator(args)
        extra = {}
        if args.divide_theta_factorial is not None:
            out = fourier_quotient(op, args.divide_theta_factorial)
        else:
            out = ft_theta(op)
        if args.match_pullback:
            target = kummer_pullback(_typed(args.match_pullback, "operator"), args.k or 1)
            m = match_up_to_twist(out, target)
            if m is None:
                _emit_op(args, out, {"match": None})
                raise Failure("no scalar and twist match the target")
            extra["match"] = f"(c={m.scale}, s={m.shift})"
        _emit_op(args, out, extra)
    elif action == "pullback":
        _emit_op(args, kummer_pullback(_one_operator(args), args.k or 1))
    elif action == "twist":
        if args.shift is None:
            raise UsageError("twist needs --shift")
        _emit_op(args, twist_shift(_one_operator(args), parse_param(args.shift)))
    elif action == "invert":
        _emit_op(args, inversion_normalized(_one_operator(args)))
    elif action == "divide":
        if args.by is None:
            raise UsageError("divide needs --by")
        _emit_op(args, left_factor_divide(_one_operator(args), parse_theta_poly(args.by)))
    elif action == "indicial":
        point = args.point or "0"
        pt = INF if point == "inf" else parse_param(point)
        poly = indicial_at(_one_operator(args), pt, _witness(args))
        _emit(args, str(poly), {"point": point, "indicial": str(poly)})
    elif action == "scheme":
        op = _one_operator(args)
        w = _witness(args, required=True)
        if args.points:
            points = [INF if p == "inf" else parse_param(p) for p in args.points.split(",")]
        else:
            points = _default_points(args)
        scheme = riemann_scheme(op, points, w)
        text = "\n".join(f"{point_label(pt)}: {format_exponents(e)}" for pt, e in scheme.exponents.items())
        _emit(args, text, scheme.to_json())
    elif action == "slopes":
        slopes = newton_slopes_at_infinity(_one_operator(args))
        text = ", ".join(f"{format_rational(s)} x{m}" for s, m in slopes)
        _emit(args, text, [{"slope": format_rational(s), "multiplicity": m} for s, m in slopes])
    elif action == "match":
        ops = _operators(args)
        if len(ops) != 2:
            raise UsageError("match needs two operators")
        m = match_up_to_twist(*ops)
        if m is None:
            _emit(args, "no match", None)
            raise Failure("no scalar and twist match")
        _emit(args, f"(c={m.scale}, s={m.shift})", {"c": m.scale, "s": str(m.shift)})
    return 0


def _default_points(args) -> list:
    fids = args.fixture or []
    for sid, opid in F.SCHEME_OPERATOR.items():
        if fids and opid == fids[0]:
            return list(F.get(sid).exponents)
    raise UsageError("scheme needs --points for this operator")


# ---------------------------------------------------------------------------
# mono


def cmd_mono(args) -> int:
    T = _one_fixture(args, "tuple")
    if args.action == "mc":
        if args.lam is None:
            raise UsageError("mc needs --lambda")
        lam = ExponentClass.of(parse_param(args.lam))
        _emit_tuple(args, mc_local(T, lam))
    elif args.action == "tensor":
        if not args.other:
            raise UsageError("tensor needs --other with a rank-one tuple fixture")
        _emit_tuple(args, tensor_rank_one(T, _typed(args.other, "tuple")))
    elif args.action == "pullback":
        k = args.k or 1
        _emit_tuple(args, kummer_pullback_tuple(T, k, _preimages(T.labels, k)))
    elif args.action == "rigidity":
        data = {"rigidity_index": rigidity_index(T)}
        text = f"rigidity index {data['rigidity_index']}"
        if args.lam is not None:
            data["mc_rank"] = mc_rank(T, ExponentClass.of(parse_param(args.lam)))
            text += f"\nmc rank {data['mc_rank']}"
        _emit(args, text, data)
    return 0


# ---------------------------------------------------------------------------
# hodge


def cmd_hodge(args) -> int:
    action = args.action
    if action == "selfdual":
        if args.rank is None or args.length is None:
            raise UsageError("selfdual needs --rank and --length")
        fixed = {}
        for item in args.fix or []:
            key, value = item.split("=")
            level, p = key.split(":")
            fixed[(int(level), int(p))] = int(value)
        blocks = [int(b) for b in args.blocks.split(",")] if args.blocks else None
        sol = selfdual_completion_solve(args.rank, args.length, blocks, parse_param(args.cls), fixed)
        _emit(args, f"h = {list(sol.h)}", sol.to_json())
        return 0
    if action == "solve-delta" and args.h is not None:
        delta = parabolic_rigidity_solve(_vector(args.h), _vector(args.omega) or ())
        _emit(args, f"delta = {list(delta)}", {"delta": list(delta)})
        return 0
    P = _profile(args)
    w = _witness(args)
    if action == "derive":
        if w is not None:
            P = P.specialize(w)
        c = derive_counts(P)
        _emit(args, _profile_text(P), c.to_json())
    elif action == "solve-delta":
        c = derive_counts(P.specialize(w) if w else P)
        delta = parabolic_rigidity_solve(c.h, c.omega)
        _emit(args, f"delta = {list(delta)}", {"delta": list(delta)})
    elif action == "pullback":
        k = args.k or 1
        P = _with_delta(P.specialize(w) if w else P)
        _emit_profile(args, pullback_profile(P, k, _preimages(P.labels, k), w))
    elif action == "mc":
        if args.lam is None:
            raise UsageError("mc needs --lambda")
        P = _with_delta(P.specialize(w) if w else P)
        if args.k and args.k > 1:
            P = pullback_profile(P, args.k, _preimages(P.labels, args.k), w)
        _emit_profile(args, mc_profile(P, parse_param(args.lam), None, w))
    elif action == "phase":
        shift = parse_param(args.shift).evaluate(w) if args.shift else _default_shift(args, w)
        table = stationary_phase_table(P, w, shift)
        _emit(args, str(table), table.to_json())
    elif action == "compare":
        if not args.table:
            raise UsageError("compare needs --table")
        table = _typed(args.table, "hodge-table")
        if P.delta is None and P.points:
            P = _with_delta(P.specialize(w) if w else P)
        problems = compare_with_table(P, table, w)
        _emit(args, "\n".join(problems) or "match", {"problems": problems, "ok": not problems})
        if problems:
            raise Failure(f"{len(problems)} mismatches")
    return 0


def _default_shift(args, w):
    fid = (args.fixture or [""])[0]
    for case in F.CASES.values():
        if "profile." + case["output"][len("table."):] == fid:
            return parse_param(case["untwist"]).evaluate(w) if w else 0
    return 0


# ---------------------------------------------------------------------------
# fixtures / verify


def cmd_fixtures(args) -> int:
    if args.action == "list":
        items = F.list_fixtures(args.kind)
        _emit(
            args,
            "\n".join(f"{f.id:32} {f.kind:16} {f.provenance}" for f in items),
            [{"id": f.id, "kind": f.kind, "provenance": f.provenance} for f in items],
        )
    else:
        print(F.export_json())
    return 0


def cmd_verify(args) -> int:
    checks = V.run(args.action)
    summary = V.summary(checks)
    if args.format == "json":
        print(json.dumps({"checks": [c.to_json() for c in checks], "summary": summary}, indent=2, sort_keys=True))
    else:
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.group}/{c.name}"
            if c.detail and not c.passed:
                line += f": {c.detail}"
            print(line)
            if c.note:
                print(f"NOTE {c.group}/{c.name}: {c.note}")
        print(f"{summary['total'] - len(summary['failed'])}/{summary['total']} checks passed")
    if not summary["ok"]:
        raise Failure("verification failed")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigid-calc", description="Exact calculus for rigid local systems and their Hodge data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--fixture", action="append", help="fixture id (repeatable)")
        p.add_argument("--expr", action="append", help="operator expression (repeatable)")
        p.add_argument("--witness", help="witness fixture id")
        p.add_argument("--k", type=int, help="pullback degree")
        p.add_argument("--lambda", dest="lam", help="convolution class")
        p.add_argument("--format", choices=("text", "json"), default="text")

    op = sub.add_parser("op", help="operator calculus")
    op.add_argument(
        "action",
        choices=("parse", "mul", "ft", "pullback", "twist", "invert", "divide", "indicial", "scheme", "slopes", "match"),
    )
    common(op)
    op.add_argument("--divide-theta-factorial", type=int, metavar="N", help="divide by T(T-1)...(T-N+1)")
    op.add_argument("--match-pullback", metavar="ID", help="match against the pullback of this operator fixture")
    op.add_argument("--shift", help="twist shift")
    op.add_argument("--by", help="theta polynomial to divide by on the left")
    op.add_argument("--point", help="point for the indicial polynomial (0, inf, or a value)")
    op.add_argument("--points", help="comma separated singular points")
    op.set_defaults(func=cmd_op)

    mono = sub.add_parser("mono", help="monodromy tuples")
    mono.add_argument("action", choices=("mc", "tensor", "pullback", "rigidity"))
    common(mono)
    mono.add_argument("--other", help="rank-one tuple fixture for tensor")
    mono.set_defaults(func=cmd_mono)

    hodge = sub.add_parser("hodge", help="Hodge bookkeeping")
    hodge.add_argument("action", choices=("derive", "solve-delta", "pullback", "mc", "selfdual", "phase", "compare"))
    common(hodge)
    hodge.add_argument("--table", help="hodge-table fixture for compare")
    hodge.add_argument("--shift", help="untwist shift for phase")
    hodge.add_argument("--h", help="comma separated Hodge numbers for solve-delta")
    hodge.add_argument("--omega", help="comma separated omega for solve-delta")
    hodge.add_argument("--rank", type=int)
    hodge.add_argument("--length", type=int)
    hodge.add_argument("--blocks", help="comma separated Jordan block sizes")
    hodge.add_argument("--class", dest="cls", default="0", help="class of the blocks")
    hodge.add_argument("--fix", action="append", metavar="LEVEL:P=N", help="pin nu at (level, p)")
    hodge.set_defaults(func=cmd_hodge)

    fx = sub.add_parser("fixtures", help="embedded reference data")
    fx.add_argument("action", choices=("list", "export"))
    fx.add_argument("--kind", choices=F.KINDS)
    fx.add_argument("--format", choices=("text", "json"), default="text")
    fx.set_defaults(func=cmd_fixtures)

    ver = sub.add_parser("verify", help="replay the reference checks")
    ver.add_argument("action", choices=("all",) + V.GROUPS)
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except Failure as exc:
        print(f"rigid-calc: {exc}", file=sys.stderr)
        return 1
    except ExpressionSyntaxError as exc:
        print(f"rigid-calc: syntax error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, RigidCalcError, ValueError, KeyError) as exc:
        print(f"rigid-calc: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
