"""Command line interface: ``skewpbw <command> ...``.

Exit codes: 0 on success, 1 when a check reports violations, 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import reduce

from . import algebras, serialize
from .errors import SkewPBWError
from .graded import principal_symbol
from .orelocal import LEFT, RIGHT, NonzeroCoefficients, OreFraction, frac_add, frac_eq, frac_mul
from .orelocal import ore_solve_left, ore_solve_right
from .parsing import split_top_level
from .pbwcore import Element, add, check_presentation, mul
from .quantum import QuantumSetSpec, QuantumTorus, fraction_to_laurent, gk_structure_check, laurent_to_fraction


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# helpers


def _load(args, check=True):
    if not args.presentation:
        raise UsageError("a presentation file is required (-p FILE)")
    return serialize.load_presentation(args.presentation, check=check)


def _mset(args, P):
    if args.set == "quantum":
        return QuantumSetSpec(P, P.n if args.r is None else args.r)
    return NonzeroCoefficients(P)


def parse_fraction(text: str, P, S) -> OreFraction:
    """``s \\ a`` is a left fraction, ``a / s`` (spaces around ``/``) a right one."""
    left = split_top_level(text, "\\")
    if left is not None:
        s, a = left
        return OreFraction(LEFT, S.parse(s), P.parse(a), S)
    right = split_top_level(text, "/", last=True, spaced=True)
    if right is not None:
        a, s = right
        return OreFraction(RIGHT, S.parse(s), P.parse(a), S)
    raise UsageError(f"{text!r} is not a fraction; write 's \\ a' or 'a / s'")


def _terms_json(terms):
    return serialize.terms_to_json(terms)


def _emit(args, text: str, payload: dict | None = None):
    if args.format == "json" and payload is not None:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _emit_element(args, f):
    _emit(args, str(f), {"terms": _terms_json(f.terms), "text": str(f)})


def _fraction_json(phi: OreFraction) -> dict:
    return {
        "side": phi.side,
        "denominator": str(phi.denom),
        "numerator": _terms_json(phi.numer.terms),
        "text": str(phi),
    }


def _torus(args):
    q, sigma, ring = serialize.load_qmatrix(args.qfile)
    return QuantumTorus(q, sigma, args.r, ring)


# --------------------------------------------------------------------------
# commands


def cmd_check(args):
    P = _load(args, check=False)
    report = check_presentation(P, args.degree_bound)
    payload = {
        "ok": report.ok,
        "violations": [{"kind": v.kind, "location": v.location, "detail": v.detail} for v in report.violations],
    }
    _emit(args, str(report), payload)
    return 0 if report.ok else 1


def cmd_mul(args):
    P = _load(args)
    _emit_element(args, reduce(mul, [P.parse(e) for e in args.exprs]))
    return 0


def cmd_nf(args):
    P = _load(args)
    _emit_element(args, P.parse(args.expr))
    return 0


def cmd_add(args):
    P = _load(args)
    _emit_element(args, reduce(add, [P.parse(e) for e in args.exprs]))
    return 0


def cmd_gr(args):
    P = _load(args)
    sys.stdout.write(serialize.dumps_presentation(P.graded()))
    return 0


def cmd_symbol(args):
    P = _load(args)
    _emit_element(args, principal_symbol(P.parse(args.expr)))
    return 0


def _cmd_ore(args, side):
    P = _load(args)
    S = _mset(args, P)
    f = P.parse(args.f)
    s = S.parse(args.s)
    if side == LEFT:
        u, g = ore_solve_left(f, s, S)
        lhs, rhs = mul(S.as_element(u), f), mul(g, S.as_element(s))
        identity = "u*f == g*s"
    else:
        u, g = ore_solve_right(f, s, S)
        lhs, rhs = mul(f, S.as_element(u)), mul(S.as_element(s), g)
        identity = "f*u == s*g"
    assert lhs == rhs
    text = f"u = {u}\ng = {g}\n{identity}: {lhs} == {rhs}"
    payload = {
        "u": str(u),
        "g": _terms_json(g.terms),
        "identity": identity,
        "lhs": _terms_json(lhs.terms),
        "rhs": _terms_json(rhs.terms),
    }
    _emit(args, text, payload)
    return 0


def cmd_ore_left(args):
    return _cmd_ore(args, LEFT)


def cmd_ore_right(args):
    return _cmd_ore(args, RIGHT)


def _fractions(args):
    P = _load(args)
    S = _mset(args, P)
    return [parse_fraction(text, P, S) for text in args.fractions]


def cmd_frac_add(args):
    result = reduce(frac_add, _fractions(args))
    _emit(args, str(result), _fraction_json(result))
    return 0


def cmd_frac_mul(args):
    result = reduce(frac_mul, _fractions(args))
    _emit(args, str(result), _fraction_json(result))
    return 0


def cmd_frac_eq(args):
    phi, psi = _fractions(args)
    same = frac_eq(phi, psi)
    _emit(args, "true" if same else "false", {"equal": same})
    return 0


def cmd_qspace(args):
    q, sigma, ring = serialize.load_qmatrix(args.qfile)
    from .quantum import quantum_space_presentation

    sys.stdout.write(serialize.dumps_presentation(quantum_space_presentation(q, sigma, ring)))
    return 0


def cmd_torus_mul(args):
    T = _torus(args)
    result = reduce(T.mul, [T.parse(e) for e in args.exprs])
    _emit_element(args, result)
    return 0


def cmd_to_laurent(args):
    T = _torus(args)
    S = QuantumSetSpec(T.presentation, T.r)
    phi = parse_fraction(args.fraction, T.presentation, S)
    _emit_element(args, fraction_to_laurent(phi, T))
    return 0


def cmd_to_fraction(args):
    T = _torus(args)
    phi = laurent_to_fraction(T.parse(args.expr), args.side)
    _emit(args, str(phi), _fraction_json(phi))
    return 0


def cmd_gk_check(args):
    q, sigma, ring = serialize.load_qmatrix(args.qfile)
    route_b = None
    if args.corrupt:
        from .coeffring import extend_endo, fraction_field
        from .quantum import quantum_space_presentation

        F = fraction_field(ring)
        route_b = quantum_space_presentation(q.over(F).swapped(0, 1), [extend_endo(s, ring) for s in sigma], F)
    report = gk_structure_check(args.rank, args.n, q, sigma, ring, k=args.samples, seed=args.seed, route_b=route_b)
    payload = {
        "ok": report.ok,
        "structural_mismatches": report.structural_mismatches,
        "samples": report.samples,
        "agreements": report.agreements,
    }
    _emit(args, str(report), payload)
    return 0 if report.ok else 1


def cmd_catalog(args):
    if args.action == "list":
        names = algebras.catalog_names()
        _emit(args, "\n".join(names), {"catalog": names, "corrupted": list(algebras.CORRUPTED)})
        return 0
    if not args.name:
        raise UsageError("catalog emit needs a name")
    try:
        P = algebras.build_catalog(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    text = serialize.dumps_presentation(P)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    pres = argparse.ArgumentParser(add_help=False, parents=[common])
    pres.add_argument("-p", "--presentation", metavar="FILE", help="presentation JSON file")

    mset = argparse.ArgumentParser(add_help=False)
    mset.add_argument("--set", choices=["nonzero", "quantum"], default="nonzero", help="denominator set")
    mset.add_argument("--r", type=int, default=None, help="invertible block size for --set quantum")

    torus = argparse.ArgumentParser(add_help=False, parents=[common])
    torus.add_argument("qfile", help="q-matrix JSON file")
    torus.add_argument("--r", type=int, default=None, help="number of invertible generators (default n)")

    parser = argparse.ArgumentParser(prog="skewpbw", description="Exact arithmetic in skew PBW extensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[pres], help="validate a presentation")
    p.add_argument("--degree-bound", type=int, default=3)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mul", parents=[pres], help="multiply expressions left to right")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("nf", parents=[pres], help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("add", parents=[pres], help="sum of expressions")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("gr", parents=[pres], help="emit the associated graded presentation")
    p.set_defaults(func=cmd_gr)

    p = sub.add_parser("symbol", parents=[pres], help="principal symbol of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_symbol)

    for name, func in (("ore-left", cmd_ore_left), ("ore-right", cmd_ore_right)):
        p = sub.add_parser(name, parents=[pres, mset], help="solve the Ore condition for f and s")
        p.add_argument("f")
        p.add_argument("s")
        p.set_defaults(func=func)

    for name, func, nargs in (("frac-add", cmd_frac_add, "+"), ("frac-mul", cmd_frac_mul, "+"), ("frac-eq", cmd_frac_eq, 2)):
        p = sub.add_parser(name, parents=[pres, mset], help="fraction arithmetic ('s \\ a' or 'a / s')")
        p.add_argument("fractions", nargs=nargs)
        p.set_defaults(func=func)

    p = sub.add_parser("qspace", parents=[common], help="emit the quantum space presentation of a q-matrix file")
    p.add_argument("qfile")
    p.set_defaults(func=cmd_qspace)

    p = sub.add_parser("torus-mul", parents=[torus], help="multiply Laurent expressions")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_torus_mul)

    p = sub.add_parser("to-laurent", parents=[torus], help="evaluate a fraction in the quantum torus")
    p.add_argument("fraction")
    p.set_defaults(func=cmd_to_laurent)

    p = sub.add_parser("to-fraction", parents=[torus], help="write a Laurent expression as a fraction")
    p.add_argument("expr")
    p.add_argument("--side", choices=[LEFT, RIGHT], default=LEFT)
    p.set_defaults(func=cmd_to_fraction)

    p = sub.add_parser("gk-check", parents=[common], help="dual-route localization check")
    p.add_argument("rank", type=int, metavar="r")
    p.add_argument("n", type=int)
    p.add_argument("qfile")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt", action="store_true", help="swap q12 and q21 in the second route")
    p.set_defaults(func=cmd_gk_check)

    p = sub.add_parser("catalog", parents=[common], help="list or emit catalog presentations")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, SkewPBWError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
