"""Command line front end.

    quarticprimes factor -a 22 -b 66 -p 3
    quarticprimes factor -a 22 -b 66 --all-ramified --json
    quarticprimes verify -a 48 -b 188
    quarticprimes batch queries.txt        # lines "a b p" or "a b *"
    quarticprimes polygon -a 22 -b 66 -p 3 --phi "X+1"
    quarticprimes schema

Exit status: 0 ok, 1 a verification check failed, 2 bad input,
3 no table row matched the input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from sympy import isprime

from .classify import (NoRowMatched, NotNormalizedError, PrimeFactorization, PrimeIdealFactor, TableTrace, factor,
                       factor_all_ramified, UnfactoredDiscriminant)
from .newton import build_polygon, is_p_regular, lifted_factors
from .polyz import AlgebraicElement, QuarticField, ReducibleQuarticError, normalize, zformat
from .verify import check_factorization

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NO_ROW = 0, 1, 2, 3


class InputError(ValueError):
    """Bad user input; reported with exit status 2."""


# -- serialization ------------------------------------------------------------------


def _generator_dict(w: AlgebraicElement) -> dict:
    return {"shift": w.shift, "numerator_coeffs": list(w.numerator), "denom_exp": w.denom_exp}


def factorization_to_dict(res: PrimeFactorization, a: int | None = None, b: int | None = None,
                          alpha: bool = False, verification=None) -> dict:
    """The JSON object for one prime.  (a, b) is the input before normalization."""
    nz = res.normalization
    a = res.field.a if a is None else a
    b = res.field.b if b is None else b
    out = {
        "schema_version": SCHEMA_VERSION,
        "input": {"a": a, "b": b, "p": res.p},
        "normalized": {
            "a": res.field.a,
            "b": res.field.b,
            "scale": nz.scale if nz else 1,
            "q_log": [list(x) for x in nz.log] if nz else [],
        },
        "factors": [
            {
                "e": F.e,
                "f": F.f,
                "generator": _generator_dict(F.generator.in_alpha() if alpha else F.generator),
                "inert": F.generator_is_whole_ideal,
                "exact": F.exact,
            }
            for F in res.factors
        ],
        "table_trace": {
            "row": res.table_trace.row,
            "path": list(res.table_trace.path),
            "auxiliaries": dict(res.table_trace.auxiliaries),
        },
    }
    if verification is not None:
        out["verification"] = {
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in verification.checks],
            "overall": verification.overall,
        }
    return out


def factorization_from_dict(d: dict) -> PrimeFactorization:
    """Inverse of factorization_to_dict (normalization and verification are not rebuilt)."""
    p = d["input"]["p"]
    field_ = QuarticField(d["normalized"]["a"], d["normalized"]["b"])
    factors = tuple(
        PrimeIdealFactor(
            F["e"], F["f"],
            AlgebraicElement(p, F["generator"]["shift"], tuple(F["generator"]["numerator_coeffs"]),
                             F["generator"]["denom_exp"]),
            generator_is_whole_ideal=F["inert"], exact=F.get("exact", False),
        )
        for F in d["factors"]
    )
    tr = d["table_trace"]
    return PrimeFactorization(p, field_, factors, TableTrace(tr["row"], tuple(tr["path"]), tr["auxiliaries"]))


def json_schema() -> dict:
    """JSON Schema (draft 2020-12) for factor output and batch error lines."""
    integer = {"type": "integer"}
    generator = {
        "type": "object",
        "properties": {
            "shift": integer,
            "numerator_coeffs": {"type": "array", "items": integer, "maxItems": 4},
            "denom_exp": {"type": "integer", "minimum": 0},
        },
        "required": ["shift", "numerator_coeffs", "denom_exp"],
        "additionalProperties": False,
    }
    factor_ = {
        "type": "object",
        "properties": {
            "e": {"type": "integer", "minimum": 1, "maximum": 4},
            "f": {"type": "integer", "minimum": 1, "maximum": 4},
            "generator": generator,
            "inert": {"type": "boolean"},
            "exact": {"type": "boolean"},
        },
        "required": ["e", "f", "generator", "inert"],
        "additionalProperties": False,
    }
    triple = {
        "type": "object",
        "properties": {"a": integer, "b": integer, "p": integer},
        "required": ["a", "b", "p"],
    }
    result = {
        "type": "object",
        "properties": {
            "schema_version": {"const": SCHEMA_VERSION},
            "input": triple,
            "normalized": {
                "type": "object",
                "properties": {
                    "a": integer,
                    "b": integer,
                    "scale": {"type": "integer", "minimum": 1},
                    "q_log": {"type": "array", "items": {"type": "array", "items": integer,
                                                         "minItems": 2, "maxItems": 2}},
                },
                "required": ["a", "b", "q_log"],
            },
            "factors": {"type": "array", "items": factor_, "minItems": 1, "maxItems": 4},
            "table_trace": {
                "type": "object",
                "properties": {
                    "row": {"type": "string"},
                    "path": {"type": "array", "items": {"type": "string"}},
                    "auxiliaries": {"type": "object", "additionalProperties": integer},
                },
                "required": ["row", "auxiliaries"],
            },
            "verification": {
                "type": "object",
                "properties": {
                    "checks": {"type": "array", "items": {
                        "type": "object",
                        "properties": {"name": {"type": "string"}, "passed": {"type": "boolean"},
                                       "detail": {"type": "string"}},
                        "required": ["name", "passed"],
                    }},
                    "overall": {"type": "boolean"},
                },
                "required": ["checks"],
            },
        },
        "required": ["schema_version", "input", "normalized", "factors", "table_trace"],
        "additionalProperties": False,
    }
    error = {
        "type": "object",
        "properties": {
            "schema_version": {"const": SCHEMA_VERSION},
            "input": {"type": "string"},
            "error": {"type": "string"},
            "exit": {"enum": [EXIT_USAGE, EXIT_NO_ROW]},
        },
        "required": ["schema_version", "input", "error", "exit"],
        "additionalProperties": False,
    }
    sweep = {
        "type": "object",
        "properties": {
            "schema_version": {"const": SCHEMA_VERSION},
            "input": {
                "type": "object",
                "properties": {"a": integer, "b": integer, "p": {"const": "*"}},
                "required": ["a", "b", "p"],
            },
            "primes": {"type": "array", "items": result},
        },
        "required": ["schema_version", "input", "primes"],
        "additionalProperties": False,
    }
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "quarticprimes output",
        "oneOf": [result, sweep, error],
        "$defs": {"result": result, "sweep": sweep, "error": error},
    }


# -- text rendering -----------------------------------------------------------------


def render_text(res: PrimeFactorization, a: int, b: int, alpha: bool = False, verification=None) -> str:
    p = res.p
    lines = [f"{zformat((b, a, 0, 0, 1))}, p = {p}"]
    nz = res.normalization
    if nz and nz.log:
        sub = ", ".join(f"{q}^{k}" for q, k in nz.log)
        lines.append(f"normalized: alpha -> alpha/{nz.scale} ({sub}), a = {nz.a}, b = {nz.b}")
    tr = res.table_trace
    lines.append(f"row: {tr.row}" + (f" (via {' -> '.join(tr.path)})" if len(tr.path) > 1 else ""))
    if tr.auxiliaries:
        lines.append("auxiliaries: " + ", ".join(f"{k} = {v}" for k, v in tr.auxiliaries.items()))
    shifts = {F.generator.shift for F in res.factors if not alpha and F.generator.shift}
    for s in sorted(shifts):
        lines.append(f"θ = α{-s:+d}")
    lines.append(f"{p}Z_K = {res.render(alpha=alpha)}")
    for F in res.factors:
        w = F.generator.in_alpha() if alpha else F.generator
        gen = f"({p})" if F.generator_is_whole_ideal else f"({p}, {w})"
        lines.append(f"  e={F.e} f={F.f} {gen}")
    if verification is not None:
        lines.append(verification.to_text())
    return "\n".join(lines)


# -- argument handling ---------------------------------------------------------------


def _int(text: str) -> int:
    try:
        return int(text.replace("_", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _check_prime(p: int) -> int:
    if not isprime(p):
        raise InputError(f"{p} is not prime")
    return p


def _field(a: int, b: int) -> QuarticField:
    try:
        nz = normalize(a, b)
        return QuarticField(nz.a, nz.b)
    except ReducibleQuarticError as exc:
        raise InputError(f"reducible: {exc}") from None


def _one(a: int, b: int, p: int) -> PrimeFactorization:
    _field(a, b)
    return factor(a, b, _check_prime(p))


def _all(a: int, b: int) -> list[PrimeFactorization]:
    _field(a, b)
    try:
        return list(factor_all_ramified(a, b).values())
    except UnfactoredDiscriminant as exc:
        raise InputError(f"discriminant could not be factored: cofactor {exc.cofactor}") from None


def _emit(results, args, out, verify: bool) -> int:
    status = EXIT_OK
    blocks = []
    for res in results:
        rep = check_factorization(res) if verify else None
        if rep is not None and not rep.overall:
            status = EXIT_VERIFY
        if args.json:
            blocks.append(json.dumps(factorization_to_dict(res, args.a, args.b, args.alpha, rep)))
        else:
            blocks.append(render_text(res, args.a, args.b, args.alpha, rep))
    print(("\n" if args.json else "\n\n").join(blocks), file=out)
    return status


def cmd_factor(args, out) -> int:
    if (args.p is None) == (not args.all_ramified):
        raise InputError("give exactly one of -p P or --all-ramified")
    results = _all(args.a, args.b) if args.all_ramified else [_one(args.a, args.b, args.p)]
    return _emit(results, args, out, verify=args.verify)


def cmd_verify(args, out) -> int:
    results = [_one(args.a, args.b, args.p)] if args.p is not None else _all(args.a, args.b)
    return _emit(results, args, out, verify=True)


def _batch_line(line: str) -> str:
    """The JSON line for one query; errors become error objects."""
    text = line.strip()
    try:
        parts = text.split()
        if len(parts) != 3:
            raise InputError("expected 'a b p' or 'a b *'")
        a, b = int(parts[0]), int(parts[1])
        if parts[2] == "*":
            return json.dumps({"schema_version": SCHEMA_VERSION, "input": {"a": a, "b": b, "p": "*"},
                               "primes": [factorization_to_dict(r, a, b) for r in _all(a, b)]})
        return json.dumps(factorization_to_dict(_one(a, b, int(parts[2])), a, b))
    except NoRowMatched as exc:
        code, msg = EXIT_NO_ROW, str(exc)
    except (InputError, ValueError, NotNormalizedError) as exc:
        code, msg = EXIT_USAGE, str(exc)
    return json.dumps({"schema_version": SCHEMA_VERSION, "input": text, "error": msg, "exit": code})


def cmd_batch(args, out) -> int:
    src = sys.stdin if args.file == "-" else open(args.file, encoding="utf-8")
    with src:
        lines = [ln for ln in src if ln.strip() and not ln.lstrip().startswith("#")]
    if args.jobs > 1:
        # map keeps input order
        with ProcessPoolExecutor(args.jobs) as pool:
            answers = list(pool.map(_batch_line, lines, chunksize=8))
    else:
        answers = [_batch_line(ln) for ln in lines]
    status = EXIT_OK
    for js in answers:
        print(js, file=out)
        status = max(status, json.loads(js).get("exit", EXIT_OK))
    return status


def _parse_poly(text: str) -> tuple[int, ...]:
    """'X^2+1', 'x**2 + 1' or ascending coefficients '1,0,1'."""
    if "," in text or text.lstrip("-").isdigit():
        return tuple(int(c) for c in text.split(","))
    from sympy import Poly, Symbol, sympify

    X = Symbol("X")
    try:
        expr = sympify(text.replace("^", "**"), locals={"X": X, "x": X})
        coeffs = Poly(expr, X).all_coeffs()
    except Exception as exc:  # sympy raises several types for junk input
        raise InputError(f"cannot read polynomial {text!r}: {exc}") from None
    if any(not c.is_integer for c in coeffs):
        raise InputError(f"{text!r} does not have integer coefficients")
    return tuple(int(c) for c in reversed(coeffs))


def cmd_polygon(args, out) -> int:
    fld = _field(args.a, args.b)
    p = _check_prime(args.p)
    P = fld.poly
    if args.phi:
        phis = [_parse_poly(args.phi)]
    else:
        phis = [phi for phi, _ in lifted_factors(P, p)]
    for phi in phis:
        print(build_polygon(P, phi, p).render(), file=out)
    ok, _ = is_p_regular(P, p)
    print(f"P = {zformat(P)} is {'' if ok else 'not '}{p}-regular", file=out)
    return EXIT_OK


def cmd_schema(args, out) -> int:
    print(json.dumps(json_schema(), indent=2), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quarticprimes", description="Factor pZ_K for K = Q(alpha), alpha^4 + a alpha + b = 0.")
    sub = ap.add_subparsers(dest="command", required=True)

    def ab(sp):
        sp.add_argument("-a", type=_int, required=True)
        sp.add_argument("-b", type=_int, required=True)

    def fmt(sp):
        sp.add_argument("--json", action="store_true", help="one JSON object per prime")
        sp.add_argument("--alpha", action="store_true", help="write generators in alpha, not theta")

    f = sub.add_parser("factor", help="factor one prime, or every ramified prime")
    ab(f)
    f.add_argument("-p", type=_int)
    f.add_argument("--all-ramified", action="store_true")
    f.add_argument("--verify", action="store_true", help="attach the verification report")
    fmt(f)
    f.set_defaults(func=cmd_factor)

    v = sub.add_parser("verify", help="run the verification checks (all ramified primes without -p)")
    ab(v)
    v.add_argument("-p", type=_int)
    fmt(v)
    v.set_defaults(func=cmd_verify)

    bt = sub.add_parser("batch", help="queries 'a b p' or 'a b *', one per line; one JSON line per query")
    bt.add_argument("file", help="query file, or - for stdin")
    bt.add_argument("-j", "--jobs", type=int, default=1)
    bt.set_defaults(func=cmd_batch)

    pg = sub.add_parser("polygon", help="print Newton polygons")
    ab(pg)
    pg.add_argument("-p", type=_int, required=True)
    pg.add_argument("--phi", help="polynomial in X, default: each factor of P mod p")
    pg.set_defaults(func=cmd_polygon)

    sc = sub.add_parser("schema", help="print the JSON schema")
    sc.set_defaults(func=cmd_schema)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except NoRowMatched as exc:
        print(f"error: {exc}", file=err)
        return EXIT_NO_ROW
    except (InputError, NotNormalizedError, ReducibleQuarticError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
