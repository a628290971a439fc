"""Command-line front end: ``communal <command> --alpha 1/3,2/5,2/7 ...``."""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .alpha import AlphaSystem, format_alpha, parse_alpha
from .counting import DEFAULT_ENUM_CAP, count, enumerate_bijective
from .errors import CapExceeded, CommunalError, InvalidAlpha, InvalidTuple
from .genfun import build_gf, render_denominator, render_poly, series
from .monoid import DEFAULT_SCAN_CAP, base_set, decompose, generators, recompose
from .quasipoly import extract_quasipoly, render_poly as render_qp

EXIT_OK, EXIT_INTERNAL, EXIT_ALPHA, EXIT_CAP, EXIT_TUPLE = 0, 1, 2, 3, 4


def _s(n) -> str:
    return str(n)


def _tuple_text(t, brackets="[]") -> str:
    return brackets[0] + ",".join(str(x) for x in t) + brackets[1]


def _parse_tuple(text: str) -> list[int]:
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",")]
    except ValueError:
        raise InvalidTuple(f"malformed tuple {text!r}") from None
    if any(p < 0 for p in parts):
        raise InvalidTuple(f"negative part in {text!r}")
    return parts


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def cmd_count(sys_: AlphaSystem, args):
    f = count(sys_, args.g)
    return {"g": _s(args.g), "count": _s(f)}, str(f)


def cmd_enumerate(sys_, args):
    comps = enumerate_bijective(sys_, args.g, cap=args.cap)
    payload = {"g": _s(args.g), "count": _s(len(comps)),
               "compositions": [[_s(x) for x in c] for c in comps]}
    return payload, "\n".join(_tuple_text(c) for c in comps)


def cmd_generators(sys_, args):
    gens = generators(sys_)
    payload = [{"index": i + 1, "tuple": [_s(x) for x in x_i], "total": _s(x_i.total)}
               for i, x_i in enumerate(gens)]
    text = "\n".join(f"x{i + 1} = {_tuple_text(x_i)}  total {x_i.total}"
                     for i, x_i in enumerate(gens))
    return payload, text


def cmd_base_set(sys_, args):
    elems = base_set(sys_, scan_cap=args.scan_cap)
    payload = [{"a": [_s(x) for x in e.a], "base": [_s(x) for x in e.b],
                "weight": _s(e.weight)} for e in elems]
    text = "\n".join(f"a={_tuple_text(e.a, '()')} base={_tuple_text(e.b)} weight={e.weight}"
                     for e in elems)
    return payload, text


def cmd_genfun(sys_, args):
    gf = build_gf(sys_, base_set(sys_, scan_cap=args.scan_cap))
    payload = {
        "numerator": [[_s(e), _s(c)] for e, c in gf.numerator],
        "denominator_exponents": [_s(e) for e in gf.denominator_exponents],
        "text": f"({render_poly(gf.numerator)}) / {render_denominator(gf.denominator_exponents)}",
    }
    lines = [f"F(x) = {payload['text']}"]
    if args.series_order is not None:
        coeffs = series(gf, args.series_order)
        payload["series"] = [_s(c) for c in coeffs]
        lines += [f"{g} {c}" for g, c in enumerate(coeffs)]
    return payload, "\n".join(lines)


def cmd_decompose(sys_, args):
    d = decompose(sys_, _parse_tuple(args.tuple))
    back = recompose(sys_, d)
    payload = {"residue": [_s(x) for x in d.base.a], "base": [_s(x) for x in d.base.b],
               "weight": _s(d.base.weight), "coefficients": [_s(x) for x in d.coeffs],
               "recomposed": [_s(x) for x in back]}
    text = "\n".join([f"residue {_tuple_text(d.base.a, '()')}",
                      f"base {_tuple_text(d.base.b)}",
                      f"coefficients {_tuple_text(d.coeffs, '()')}",
                      f"recomposed {_tuple_text(back)}"])
    return payload, text


def cmd_quasipoly(sys_, args):
    qp = extract_quasipoly(sys_, verify_points=args.verify_points)
    payload = [{"residue": _s(r), "start": _s(qp.starts[r]),
                "coefficients": [str(c) for c in qp.polys[r]],
                "text": render_qp(qp.polys[r])} for r in range(qp.period)]
    text = "\n".join(f"g = {r} mod {qp.period} (g >= {qp.starts[r]}): {render_qp(qp.polys[r])}"
                     for r in range(qp.period))
    return payload, text


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "generators": cmd_generators,
    "base-set": cmd_base_set,
    "genfun": cmd_genfun,
    "decompose": cmd_decompose,
    "quasipoly": cmd_quasipoly,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", required=True, help='bounds as "m1/n1,m2/n2,..."')
    common.add_argument("--json", action="store_true", help="emit the JSON envelope")

    parser = argparse.ArgumentParser(
        prog="communal", description="Count and decompose compositions with proportional bounds.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of compositions of G")
    p.add_argument("--g", type=_nonneg, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list compositions of G")
    p.add_argument("--g", type=_nonneg, required=True)
    p.add_argument("--cap", type=_positive, default=DEFAULT_ENUM_CAP)

    sub.add_parser("generators", parents=[common], help="the k monoid generators")

    p = sub.add_parser("base-set", parents=[common], help="residue tuples and base tuples")
    p.add_argument("--scan-cap", type=_positive, default=DEFAULT_SCAN_CAP)

    p = sub.add_parser("genfun", parents=[common], help="rational generating function")
    p.add_argument("--series-order", type=_nonneg)
    p.add_argument("--scan-cap", type=_positive, default=DEFAULT_SCAN_CAP)

    p = sub.add_parser("decompose", parents=[common], help="split a tuple into base + generators")
    p.add_argument("--tuple", required=True)

    p = sub.add_parser("quasipoly", parents=[common], help="per-residue polynomials for f(g)")
    p.add_argument("--verify-points", type=_nonneg, default=None,
                   help="held-out checks per residue class (default k)")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        sys_ = parse_alpha(args.alpha)
        payload, text = COMMANDS[args.command](sys_, args)
    except InvalidAlpha as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_ALPHA
    except CapExceeded as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_CAP
    except InvalidTuple as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_TUPLE
    except CommunalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL

    if args.json:
        envelope = {"command": args.command, "alpha": format_alpha(sys_).split(","),
                    "N": _s(sys_.N), "A": _s(sys_.A), "L": _s(sys_.L), "result": payload}
        print(json.dumps(envelope, sort_keys=True), file=stdout)
    elif text:
        print(text, file=stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
