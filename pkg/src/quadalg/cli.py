"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
Results go to stdout; diagnostics to stderr.  ``--json`` prints one JSON
object with every number encoded as a string.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence, TextIO

from . import fibapp, mat2, quadratic, verify
from .bench import bench_suite
from .quadratic import Engine, QuadParams
from .ring import INTEGERS, ModularRing, Ring, int_to_str, parse_int

ENGINES = [e.value for e in Engine]


class UsageError(ValueError):
    pass


def _index(text: str) -> int:
    try:
        value = parse_int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _modulus(text: str) -> int:
    try:
        value = parse_int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value < 2:
        raise argparse.ArgumentTypeError(f"modulus must be >= 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadalg",
        description="Exact powers in quadratic algebras: x^m = P_m(t,d) x - d P_(m-1)(t,d).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--json", action="store_true", help="machine-readable output")

    engine = argparse.ArgumentParser(add_help=False)
    engine.add_argument("--engine", choices=ENGINES, default=Engine.DOUBLING.value)

    mod = argparse.ArgumentParser(add_help=False)
    mod.add_argument("--mod", type=_modulus, metavar="N", help="work in Z/NZ")

    def td(p):
        p.add_argument("--t", required=True, help="trace parameter (signed decimal)")
        p.add_argument("--d", required=True, help="norm parameter (signed decimal)")
        p.add_argument("--m", required=True, type=_index, help="exponent m >= 0")

    td(sub.add_parser("pm", parents=[out, engine, mod], help="P_m(t, d)"))
    td(sub.add_parser("xpow", parents=[out, engine, mod], help="x^m as 'a,b' meaning a*x + b"))

    p = sub.add_parser("matpow", parents=[out, engine, mod], help="M^m via Cayley-Hamilton")
    p.add_argument("--matrix", required=True, help="'a,b;c,d' (use --matrix=-1,... for a leading minus)")
    p.add_argument("--m", required=True, type=_index)

    for name, help_ in (("fib", "Fibonacci number F_n"), ("lucas", "Lucas number L_n")):
        p = sub.add_parser(name, parents=[out, mod] + ([engine] if name == "fib" else []), help=help_)
        p.add_argument("--n", required=True, type=_index)

    p = sub.add_parser("fibnm", parents=[out], help="F_(nm) from the binomial expansion in L_n")
    p.add_argument("--n", required=True, type=_index)
    p.add_argument("--m", required=True, type=_index)

    p = sub.add_parser("symbolic", parents=[out], help="universal polynomial P_m(T, D)")
    p.add_argument("--m", required=True, type=_index)

    p = sub.add_parser("verify", parents=[out], help="run invariant sweeps")
    p.add_argument("--scope", choices=list(verify.SCOPES) + ["all"], default="all")

    p = sub.add_parser("bench", parents=[out, mod], help="operation counts and timings")
    p.add_argument("--m", required=True, type=_index, action="append", help="repeatable")
    p.add_argument("--engine", choices=ENGINES, action="append", help="repeatable")
    p.add_argument("--t", default="1")
    p.add_argument("--d", default="-1")
    p.add_argument("--repeats", type=int, default=3)
    return parser


def _ring(args) -> Ring:
    modulus = getattr(args, "mod", None)
    return ModularRing(modulus) if modulus is not None else INTEGERS


def _params(args, ring: Ring) -> QuadParams:
    return QuadParams(ring.parse(args.t), ring.parse(args.d))


def _emit(args, out: TextIO, plain: str, payload: dict) -> None:
    if args.json:
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(plain + "\n")


def _cmd_pm(args, out) -> int:
    ring = _ring(args)
    params = _params(args, ring)
    value = ring.render(quadratic.p_m(params, args.m, args.engine))
    _emit(args, out, value, {
        "t": ring.render(params.t), "d": ring.render(params.d), "m": str(args.m),
        "engine": args.engine, "ring": ring.name, "p": value,
    })
    return 0


def _cmd_xpow(args, out) -> int:
    ring = _ring(args)
    params = _params(args, ring)
    form = quadratic.x_power(params, args.m, args.engine)
    a, b = ring.render(form.a), ring.render(form.b)
    _emit(args, out, f"{a},{b}", {
        "t": ring.render(params.t), "d": ring.render(params.d), "m": str(args.m),
        "engine": args.engine, "ring": ring.name, "a": a, "b": b,
    })
    return 0


def _cmd_matpow(args, out) -> int:
    ring = _ring(args)
    matrix = mat2.parse_matrix(args.matrix, ring)
    result = mat2.render_matrix(mat2.pow_ch(matrix, args.m, args.engine))
    _emit(args, out, result, {
        "matrix": mat2.render_matrix(matrix), "m": str(args.m),
        "engine": args.engine, "ring": ring.name, "result": result,
    })
    return 0


def _cmd_fib(args, out) -> int:
    ring = _ring(args)
    value = ring.render(fibapp.fib(args.n, args.engine, ring))
    _emit(args, out, value, {"n": str(args.n), "ring": ring.name, "fib": value})
    return 0


def _cmd_lucas(args, out) -> int:
    ring = _ring(args)
    value = ring.render(fibapp.lucas(args.n, ring))
    _emit(args, out, value, {"n": str(args.n), "ring": ring.name, "lucas": value})
    return 0


def _cmd_fibnm(args, out) -> int:
    if args.n < 1 or args.m < 1:
        raise UsageError(f"fibnm needs n >= 1 and m >= 1, got n={args.n}, m={args.m}")
    fnm = fibapp.fib_nm_identity(args.n, args.m)
    check = fibapp.fib(args.n * args.m)
    ok = fnm == check
    _emit(args, out, int_to_str(fnm), {"fnm": int_to_str(fnm), "check": int_to_str(check), "pass": ok})
    if not ok:
        print(f"mismatch: expansion gives {fnm}, fib(n*m) gives {check}", file=sys.stderr)
    return 0 if ok else 1


def _cmd_symbolic(args, out) -> int:
    poly = str(quadratic.p_m_symbolic(args.m))
    _emit(args, out, poly, {"m": str(args.m), "poly": poly})
    return 0


def _cmd_verify(args, out) -> int:
    checks = verify.verify_suite(args.scope)
    ok = all(c.passed for c in checks)
    if args.json:
        out.write(json.dumps({"scope": args.scope, "pass": ok, "checks": [c.to_dict() for c in checks]}) + "\n")
    else:
        for c in checks:
            out.write(c.line() + "\n")
        n_fail = sum(not c.passed for c in checks)
        out.write(f"{'OK' if ok else 'FAILED'}: {len(checks) - n_fail}/{len(checks)} checks passed\n")
    return 0 if ok else 1


def _cmd_bench(args, out) -> int:
    ring = _ring(args)
    engines = args.engine or [Engine.ITERATIVE.value, Engine.DOUBLING.value]
    records = bench_suite(
        args.m, engines, ring, t=parse_int(args.t), d=parse_int(args.d), repeats=args.repeats
    )
    if args.json:
        out.write(json.dumps([r.to_json() for r in records]) + "\n")
    else:
        out.write(f"{'engine':<10} {'m':>10} {'ring':<16} {'mults':>10} {'adds':>10} {'ns':>14}\n")
        for r in records:
            out.write(
                f"{r.engine:<10} {r.m:>10} {r.ring:<16} {r.multiplications:>10} "
                f"{r.additions:>10} {r.wall_time:>14}\n"
            )
    return 0


_COMMANDS = {
    "pm": _cmd_pm,
    "xpow": _cmd_xpow,
    "matpow": _cmd_matpow,
    "fib": _cmd_fib,
    "lucas": _cmd_lucas,
    "fibnm": _cmd_fibnm,
    "symbolic": _cmd_symbolic,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except ValueError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
