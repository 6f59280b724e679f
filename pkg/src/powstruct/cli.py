"""
Command-line front end.

    powstruct power --ring laurent --series "1" --exponent "L^2" --order 4
    powstruct hilb --surface "1+L+L^2" --order 5 --check --format json

Series arguments list the coefficients of t^1 .. t^r separated by commas (the
constant term is always 1); missing trailing coefficients are zero.

Exit status: 0 on success, 1 on parse/usage errors, 2 on domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .errors import DomainError, InvariantError, ParseError
from .hilbert import check_hilb_forms, hilb_series_product
from .laurent import LaurentPoly
from .power import decompose, power, sym_pow
from .rings import LAURENT, ZZ, euler_spec, euler_spec_series
from .series import TruncSeries

RINGS = {"int": ZZ, "laurent": LAURENT}
MAX_ORDER = 64


class UsageError(Exception):
    pass


# -- serialization ------------------------------------------------------------


def element_json(x) -> list[dict]:
    """Element as ``[{"exp": e, "coeff": "<decimal>"}, ...]``; an integer is an exponent-0 term."""
    if isinstance(x, int):
        return [{"exp": 0, "coeff": str(x)}] if x else []
    return [{"exp": e, "coeff": str(c)} for e, c in x.terms()]


def element_from_json(terms: list[dict], ring):
    poly = LaurentPoly((int(t["exp"]), int(t["coeff"])) for t in terms)
    if ring is ZZ:
        if any(e != 0 for e, _ in poly.terms()):
            raise ParseError("integer value with nonzero exponent")
        return poly.coeff(0)
    return poly


def series_json(a: TruncSeries) -> dict:
    return {
        "order": a.order,
        "coefficients": [{"t": k, "value": element_json(c)} for k, c in enumerate(a)],
    }


def series_from_json(doc: dict, ring) -> TruncSeries:
    coeffs = [ring.zero] * (doc["order"] + 1)
    for entry in doc["coefficients"]:
        coeffs[entry["t"]] = element_from_json(entry["value"], ring)
    return TruncSeries(ring, coeffs)


def series_text(a: TruncSeries) -> str:
    return "\n".join(f"t^{k}: {a.ring.format(c)}" for k, c in enumerate(a))


# -- argument handling --------------------------------------------------------


def _parse_order(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}")
    if not 0 <= r <= MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must be in [0, {MAX_ORDER}]")
    return r


def _parse_series(text: str, ring, order: int) -> TruncSeries:
    tail = [ring.parse(part) for part in text.split(",")] if text.strip() else []
    if len(tail) > order:
        raise UsageError(f"{len(tail)} coefficients given but --order is {order}")
    return TruncSeries.from_tail(ring, tail, order)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", choices=sorted(RINGS), default="laurent")
    common.add_argument("--order", type=_parse_order, default=8)
    common.add_argument("--format", choices=["text", "json"], default="text")

    p = argparse.ArgumentParser(
        prog="powstruct", description="Powers of series over Z and Z[L, 1/L]."
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("zeta", parents=[common], help="zeta function zeta_M(t)")
    s.add_argument("--element", required=True)

    s = sub.add_parser("power", parents=[common], help="A(t)^M")
    s.add_argument("--series", required=True, help="coefficients of t^1..t^r, comma separated")
    s.add_argument("--exponent", required=True)

    s = sub.add_parser("decompose", parents=[common], help="exponents of the zeta factorization")
    s.add_argument("--series", required=True)

    s = sub.add_parser("sympow", parents=[common], help="symmetric power S^k M")
    s.add_argument("--element", required=True)
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("hilb", parents=[common], help="Hilbert scheme of points series")
    s.add_argument("--surface", required=True)
    s.add_argument("--check", action="store_true", help="verify all equivalent forms")

    s = sub.add_parser("euler", parents=[common], help="specialize L -> 1")
    s.add_argument("--element")
    s.add_argument("--series")

    s = sub.add_parser("selftest", parents=[common], help="run the randomized self-verification suite")
    s.add_argument("--cases", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    return p


# -- commands -----------------------------------------------------------------


def _emit_series(a: TruncSeries, fmt: str, out, extra: dict | None = None) -> None:
    if fmt == "json":
        doc = series_json(a)
        doc.update(extra or {})
        print(json.dumps(doc), file=out)
    else:
        print(series_text(a), file=out)
        for key, val in (extra or {}).items():
            print(f"{key}: {val}", file=out)


def _emit_element(x, ring, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps({"value": element_json(x)}), file=out)
    else:
        print(ring.format(x), file=out)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1

    ring = RINGS[args.ring]
    try:
        if args.command == "zeta":
            _emit_series(ring.zeta(ring.parse(args.element), args.order), args.format, out)
        elif args.command == "power":
            a = _parse_series(args.series, ring, args.order)
            _emit_series(power(a, ring.parse(args.exponent)), args.format, out)
        elif args.command == "decompose":
            d = decompose(_parse_series(args.series, ring, args.order))
            if args.format == "json":
                doc = {
                    "order": d.order,
                    "exponents": [
                        {"i": i, "value": element_json(e)} for i, e in enumerate(d.exponents, 1)
                    ],
                }
                print(json.dumps(doc), file=out)
            else:
                for i, e in enumerate(d.exponents, 1):
                    print(f"t^{i}: {ring.format(e)}", file=out)
        elif args.command == "sympow":
            if args.k < 0:
                raise UsageError("--k must be nonnegative")
            _emit_element(sym_pow(ring, ring.parse(args.element), args.k), ring, args.format, out)
        elif args.command == "hilb":
            if args.ring != "laurent":
                raise UsageError("hilb works over the laurent ring only")
            surface = LAURENT.parse(args.surface)
            if args.check:
                series = check_hilb_forms(surface, args.order)
                check = True if args.format == "json" else "all forms agree"
                _emit_series(series, args.format, out, {"check": check})
            else:
                _emit_series(hilb_series_product(surface, args.order), args.format, out)
        elif args.command == "euler":
            if (args.element is None) == (args.series is None):
                raise UsageError("euler needs exactly one of --element / --series")
            if args.element is not None:
                _emit_element(euler_spec(LAURENT.parse(args.element)), ZZ, args.format, out)
            else:
                a = _parse_series(args.series, LAURENT, args.order)
                _emit_series(euler_spec_series(a), args.format, out)
        elif args.command == "selftest":
            if args.cases < 1:
                raise UsageError("--cases must be positive")
            results = acceptance.run_all(order=args.order, cases=args.cases, seed=args.seed)
            if args.format == "json":
                doc = [
                    {"criterion": r.number, "title": r.title, "passed": r.passed,
                     "checks": r.checked, "failures": r.failures}
                    for r in results
                ]
                print(json.dumps(doc), file=out)
            else:
                for r in results:
                    print(r.line(), file=out)
            return 0 if all(r.passed for r in results) else 2
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except (DomainError, InvariantError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
