"""Command-line surface.

Exit codes: 0 success, 1 usage error, 2 computational failure (oracle
mismatch, non-convergence, or a conjecture violation under --strict).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

from . import benchmark, conjecture, frf, oracle, pleating, serialize
from .errors import FareySliceError, SingularParameter
from .rings import GeneratorParams
from .recursion import farey_polynomial, get_engine, homogeneous_farey_polynomial
from .slopes import CFExpansion, Slope, enumerate_farey
from .words import farey_word


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise _UsageError(message)


def _add_ring_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ring", choices=["parabolic", "generic", "numeric"],
                   default="parabolic")
    p.add_argument("--a", default="inf", help="cone order of the first generator")
    p.add_argument("--b", default="inf", help="cone order of the second generator")


def _parse_order(text: str) -> float:
    return math.inf if text in ("inf", "oo") else int(text)


def _resolve_ring(args):
    if args.ring == "numeric":
        return GeneratorParams(_parse_order(args.a), _parse_order(args.b))
    return args.ring


def _parse_cf(args) -> CFExpansion:
    terms = tuple(int(t) for t in args.cf.split(","))
    return CFExpansion(terms, period=args.periodic)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="fareyslice")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="Farey word of a slope")
    p.add_argument("--slope", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")

    p = sub.add_parser("poly", help="trace polynomial of a slope")
    p.add_argument("--slope", required=True)
    _add_ring_flags(p)
    p.add_argument("--out")

    p = sub.add_parser("homog", help="homogeneous polynomial of a slope")
    p.add_argument("--slope", required=True)
    p.add_argument("--out")

    p = sub.add_parser("closed-form", help="left-fan value by closed form")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--z", required=True, help="complex number, e.g. '1+2j'")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="recursion against the matrix oracle")
    p.add_argument("--qmax", type=int, default=8)
    p.add_argument("--out")

    p = sub.add_parser("slice", help="root cloud over all small slopes")
    p.add_argument("--qmax", type=int, required=True)
    _add_ring_flags(p)
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out")

    p = sub.add_parser("cusp-path", help="root sets along a continued fraction")
    p.add_argument("--cf", required=True, help="comma-separated terms")
    p.add_argument("--periodic", type=int, default=0,
                   help="repeat the final N terms forever")
    p.add_argument("--depth", type=int, required=True)
    _add_ring_flags(p)
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out")

    p = sub.add_parser("conjecture", help="square-structure scan")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--out", help="JSON report path")
    p.add_argument("--svg", help="colored tree scatter path")
    p.add_argument("--strict", action="store_true")

    sub.add_parser("dynsys", help="fixed-point checks of the cubic step map")

    p = sub.add_parser("bench", help="recursion vs matrix-product benchmark")
    p.add_argument("--path", choices=["left", "fibonacci"], default="fibonacci")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out")

    return parser


def _cmd_word(args) -> int:
    s = Slope.parse(args.slope)
    w = farey_word(s)
    if args.format == "json":
        payload = {"slope": str(s), "word": str(w), "length": len(w)}
        _emit(serialize.dumps_canonical(payload), args.out)
    else:
        _emit(str(w), args.out)
    return 0


def _cmd_poly(args) -> int:
    s = Slope.parse(args.slope)
    ring = _resolve_ring(args)
    poly = farey_polynomial(s, ring)
    label = ring if isinstance(ring, str) else f"numeric({ring.label()})"
    _emit(serialize.dumps_canonical(serialize.polynomial_payload(s, label, poly)),
          args.out)
    return 0


def _cmd_homog(args) -> int:
    s = Slope.parse(args.slope)
    poly = homogeneous_farey_polynomial(s)
    payload = serialize.polynomial_payload(s, "homogeneous", poly)
    _emit(serialize.dumps_canonical(payload), args.out)
    return 0


def _cmd_closed_form(args) -> int:
    z = complex(args.z)
    try:
        value = frf.closed_form_left(z, args.q)
        method = "closed"
    except SingularParameter:
        value = complex(frf.left_sequence(z, args.q))
        method = "recurrence-fallback"
    payload = {
        "q": args.q,
        "z": [z.real, z.imag],
        "value": [value.real, value.imag],
        "method": method,
    }
    _emit(serialize.dumps_canonical(payload), args.out)
    return 0


def _cmd_verify(args) -> int:
    engine = get_engine("generic")
    lines = []
    failures = 0
    for s in enumerate_farey(args.qmax):
        ok = engine.polynomial(s) == oracle.farey_polynomial(s, "generic")
        failures += not ok
        lines.append(f"{'OK  ' if ok else 'FAIL'} {s}")
    lines.append(f"{'all slopes agree' if not failures else f'{failures} mismatches'}"
                 f" (q <= {args.qmax})")
    _emit("\n".join(lines), args.out)
    return 2 if failures else 0


def _root_sets_output(root_sets, args) -> int:
    worst = max((r for rs in root_sets for r in rs.residuals), default=0.0)
    if args.format == "svg":
        pts = [(z.real, z.imag) for rs in root_sets for z in rs.roots]
        _emit(serialize.scatter_svg(pts), args.out)
    else:
        _emit(serialize.roots_csv(root_sets), args.out)
    if worst > args.tol or not all(rs.converged for rs in root_sets):
        print(f"warning: worst residual {worst:.2e} over tolerance {args.tol}",
              file=sys.stderr)
        return 2
    return 0


def _cmd_slice(args) -> int:
    ring = _resolve_ring(args)
    params = ring if isinstance(ring, GeneratorParams) else None
    if ring == "generic":
        raise _UsageError("root extraction needs a numeric specialisation")
    return _root_sets_output(pleating.slice_cloud(args.qmax, params), args)


def _cmd_cusp_path(args) -> int:
    ring = _resolve_ring(args)
    params = ring if isinstance(ring, GeneratorParams) else None
    if ring == "generic":
        raise _UsageError("root extraction needs a numeric specialisation")
    cf = _parse_cf(args)
    sets = pleating.irrational_cusp_path(cf, args.depth, params)
    return _root_sets_output(sets, args)


def _cmd_conjecture(args) -> int:
    rules = conjecture.bad_points(args.qmax)
    parity = conjecture.epsilon_k_check(args.qmax)
    failures = [str(s) for s, rule in rules.items() if rule == "neither"]
    report = {
        "qmax": args.qmax,
        "rules": {str(s): rule for s, rule in sorted(rules.items())},
        "rule_failures": failures,
        "sign_parity": {
            "seed_signs_match": parity.seed_signs_match,
            "seed_k_match": parity.seed_k_match,
            "raw_sign_multiplicative": parity.raw_sign_multiplicative,
            "negated_sign_multiplicative": parity.negated_sign_multiplicative,
            "k_additive": parity.k_additive,
        },
    }
    _emit(serialize.dumps_canonical(report), args.out)
    if args.svg:
        pts = [(s.p / s.q, 1.0 / s.q) for s in rules]
        colors = {
            "plus": "steelblue", "minus": "crimson",
            "both": "purple", "neither": "black",
        }
        svg = serialize.scatter_svg(pts, [colors[r] for r in rules.values()],
                                    radius=0.006)
        with open(args.svg, "w") as fh:
            fh.write(svg)
    if failures and args.strict:
        return 2
    return 0


def _cmd_dynsys(args) -> int:
    report = pleating.dynsys_check()
    print(report)
    return 0 if report.all_pass else 2


def _cmd_bench(args) -> int:
    report = benchmark.run_benchmark(args.path, args.size)
    _emit(serialize.dumps_canonical(report.payload()), args.out)
    return 0


_DISPATCH = {
    "word": _cmd_word,
    "poly": _cmd_poly,
    "homog": _cmd_homog,
    "closed-form": _cmd_closed_form,
    "verify": _cmd_verify,
    "slice": _cmd_slice,
    "cusp-path": _cmd_cusp_path,
    "conjecture": _cmd_conjecture,
    "dynsys": _cmd_dynsys,
    "bench": _cmd_bench,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except FareySliceError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
