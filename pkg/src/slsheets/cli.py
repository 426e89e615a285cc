"""Command-line front end: ``slsheets <command> [--input FILE|-] ...``.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 resource guard, 4 matrix not square, 5 matrix not traceless.
"""
from __future__ import annotations

import argparse
import json
import sys

from .centralizer import centralizer_report
from .closure import GuardLimitError, closure_contains, weyman_generators
from .matrices import NotSquareError, NotTracelessError, RationalMatrix, gcd_minor_profile
from .partitions import Partition
from .poly import format_rational
from .quotient import QuotientPoint, chart_coordinates, format_point, from_chart, quotient_point, section
from .sheets import classify_sheet, enumerate_sheets
from .verify import run_suite

EXIT_OK, EXIT_VERIFY_FAIL, EXIT_INPUT, EXIT_GUARD, EXIT_NOT_SQUARE, EXIT_NOT_TRACELESS = range(6)


class InputError(ValueError):
    pass


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def _matrix(data, ambient: str | None) -> RationalMatrix:
    if not isinstance(data, dict) or "entries" not in data:
        raise InputError("expected a matrix object with 'entries'")
    if ambient:
        data = dict(data, ambient=ambient)
    try:
        return RationalMatrix.from_json(data)
    except (NotSquareError, NotTracelessError):
        raise
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad matrix: {exc}") from exc


def _traceless(x: RationalMatrix) -> RationalMatrix:
    if x.trace() != 0:
        raise NotTracelessError(f"trace is {format_rational(x.trace())}, not 0")
    return x


def _point(data) -> QuotientPoint:
    try:
        if isinstance(data, dict) and "p" not in data and "chart" in data:
            return from_chart(Partition(data["sigma"]), data["chart"])
        return QuotientPoint.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad quotient point: {exc}") from exc


def _emit(args, payload, text: str):
    if args.pretty:
        print(text)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_factors(args) -> int:
    x = _matrix(_read_json(args.input), args.ambient)
    prof = gcd_minor_profile(x)
    lines = [f"Q_{i} = {p}" for i, p in enumerate(prof.Q, start=1)]
    lines += [f"q_{i} = {p}" for i, p in enumerate(prof.q, start=1)]
    _emit(args, prof.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    x = _traceless(_matrix(_read_json(args.input), args.ambient))
    d = classify_sheet(x)
    text = (f"sigma={tuple(d.sigma)} conjugate={tuple(d.conjugate)} "
            f"orbit_dim={d.orbit_dim} quotient_dim={d.quotient_dim}")
    _emit(args, d.to_json(), text)
    return EXIT_OK


def cmd_quotient(args) -> int:
    x = _traceless(_matrix(_read_json(args.input), args.ambient))
    z = quotient_point(x)
    payload = dict(z.to_json(), chart=[format_rational(c) for c in chart_coordinates(z)])
    _emit(args, payload, format_point(z))
    return EXIT_OK


def cmd_section(args) -> int:
    x = section(_point(_read_json(args.input)))
    _emit(args, x.to_json(), str(x))
    return EXIT_OK


def cmd_contains(args) -> int:
    data = _read_json(args.input)
    if isinstance(data, list) and len(data) == 2:
        xd, yd = data
    elif isinstance(data, dict) and "x" in data and "y" in data:
        xd, yd = data["x"], data["y"]
    else:
        raise InputError("expected {'x': matrix, 'y': matrix} or a two-element list")
    x = _traceless(_matrix(xd, args.ambient))
    y = _traceless(_matrix(yd, args.ambient))
    if x.n != y.n:
        raise InputError(f"size mismatch: {x.n} vs {y.n}")
    result = closure_contains(x, y)
    _emit(args, {"contains": result}, "true" if result else "false")
    return EXIT_OK


def cmd_ideal(args) -> int:
    ideal = weyman_generators(_point(_read_json(args.input)))
    text = ideal.formatted()
    payload = dict(ideal.to_json(), text=text)
    _emit(args, payload, "\n".join(text) if text else "(no generators)")
    return EXIT_OK


def cmd_centralizer(args) -> int:
    x = _matrix(_read_json(args.input), args.ambient)
    ambient = args.ambient or x.ambient
    rep = centralizer_report(x, ambient)
    _emit(args, rep, " ".join(f"{k}={v}" for k, v in rep.items()))
    return EXIT_OK


def cmd_sheets(args) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    if args.n > 12:
        raise GuardLimitError("sheet enumeration limited to n <= 12")
    descs = enumerate_sheets(args.n)
    text = "\n".join(
        f"{tuple(d.sigma)}  orbit_dim={d.orbit_dim}  quotient_dim={d.quotient_dim}" for d in descs
    )
    _emit(args, [d.to_json() for d in descs], text)
    return EXIT_OK


def cmd_verify(args) -> int:
    def progress(case):
        if args.verbose:
            print(f"{case.status:4}  {case.name}", file=sys.stderr)

    report = run_suite(args.n_max, args.seed, args.samples, only=args.only, progress=progress)
    if args.pretty:
        for c in report.cases:
            print(f"{c.status.upper():4}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        print(f"{len(report.cases) - len(report.failures())}/{len(report.cases)} passed "
              f"in {report.elapsed:.1f}s (seed={report.seed})")
    else:
        print(json.dumps(report.to_json(include_elapsed=not args.no_elapsed), indent=2, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slsheets", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="JSON output (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable output")
    common.set_defaults(pretty=False)
    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--input", default="-", help="JSON input file, '-' for stdin")
    io.add_argument("--ambient", choices=("sl", "gl"), default=None)

    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, help_ in [
        ("factors", cmd_factors, "invariant factors Q_i, q_i of x - tI"),
        ("classify", cmd_classify, "sheet of a traceless matrix"),
        ("quotient", cmd_quotient, "quotient coordinates (p_1, ..., p_n) and chart"),
        ("section", cmd_section, "matrix over a quotient point"),
        ("contains", cmd_contains, "is y in the orbit closure of x"),
        ("ideal", cmd_ideal, "generators cutting out the fiber over a quotient point"),
        ("centralizer", cmd_centralizer, "centralizer / derived algebra dimensions"),
    ]:
        p = sub.add_parser(name, parents=[common, io], help=help_)
        p.set_defaults(func=fn)

    p = sub.add_parser("sheets", parents=[common], help="list the sheets of sl(n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sheets)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--only", default=None, help="run cases whose name starts with this prefix")
    p.add_argument("--no-elapsed", action="store_true", help="omit timing for byte-stable output")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except NotSquareError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_SQUARE
    except NotTracelessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_TRACELESS
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
