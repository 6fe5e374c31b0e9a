"""Command-line surface.

Subcommands: classify, width, strength, bound, montecarlo, sweep, plotdata.
Bodies are passed as JSON descriptors (inline or @file), rationals as "p/q"
strings.  Exit codes: 0 success, 2 usage error, 3 validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import bound_for, special_values
from .descriptors import format_rational, parse_body, parse_pair, parse_rational
from .cuts import strength_report
from .geometry import SplitBody, classify, lattice_width
from .montecarlo import monte_carlo_lower
from .sweeps import DEFAULT_STEP, FAMILIES, sweep_grid

USAGE_ERROR = 2
VALIDATION_ERROR = 3


def _body_arg(parser, required=True):
    parser.add_argument(
        "--body",
        required=required,
        help="JSON body descriptor, inline or @path to a file",
    )


def _load_body(raw: str):
    if raw.startswith("@"):
        with open(raw[1:], encoding="utf-8") as fh:
            raw = fh.read()
    return parse_body(raw)


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="cutstrength")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a body or vertex cycle")
    _body_arg(p)

    p = sub.add_parser("width", help="lattice width of a body")
    _body_arg(p)

    p = sub.add_parser("strength", help="cut strength at a root vertex")
    _body_arg(p)
    p.add_argument("--f", required=True, help='root vertex, e.g. \'["1/4","1/2"]\'')
    p.add_argument("--N", type=int, default=5, help="split enumeration radius (default 5)")

    p = sub.add_parser("bound", help="closed-form probability lower bound")
    _body_arg(p)
    p.add_argument("--z", required=True, help="strength threshold, rational > 1")

    p = sub.add_parser("montecarlo", help="Monte Carlo check of the bound")
    _body_arg(p)
    p.add_argument("--z", required=True)
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("sweep", help="parameter grid sweep (CSV)")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--z", required=True)
    p.add_argument("--step", default=None, help=f"grid step (default {DEFAULT_STEP})")
    p.add_argument(
        "--range",
        action="append",
        default=[],
        metavar="PARAM=LO:HI",
        help="override a parameter range, repeatable",
    )
    p.add_argument("--mc-samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None, help="write to a file instead of stdout")

    p = sub.add_parser("plotdata", help="(w, bound) pairs for the two width curves")
    p.add_argument("--curve", required=True, choices=("z2", "z32"))
    p.add_argument("--step", default="1/100")
    p.add_argument("--output", default=None)
    return top


def _emit(text: str, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_classify(args) -> str:
    body = _load_body(args.body)
    if not isinstance(body, (list, SplitBody)):
        body = body.polygon()
    return json.dumps({"class": classify(body).value}) + "\n"


def _run_width(args) -> str:
    body = _load_body(args.body)
    if isinstance(body, list):
        raise ValueError("width needs a typed body descriptor, not a vertex list")
    return json.dumps({"w": format_rational(lattice_width(body))}) + "\n"


def _run_strength(args) -> str:
    body = _load_body(args.body)
    if isinstance(body, list):
        raise ValueError("strength needs a typed body descriptor, not a vertex list")
    f = parse_pair(json.loads(args.f))
    if args.N < 1:
        raise ValueError(f"need N >= 1, got {args.N}")
    rep = strength_report(body, f, args.N)
    return (
        json.dumps(
            {
                "region": str(rep.region),
                "chosen_split_normal": list(rep.chosen_split_normal)
                if rep.chosen_split_normal
                else None,
                "t_bar": format_rational(rep.t_bar),
                "t_n": format_rational(rep.t_n),
                "n": rep.n,
            }
        )
        + "\n"
    )


def _run_bound(args) -> str:
    body = _load_body(args.body)
    if isinstance(body, list) or isinstance(body, SplitBody):
        raise ValueError("bound needs a typed bounded body descriptor")
    z = parse_rational(args.z)
    return json.dumps({"z": args.z, "bound": format_rational(bound_for(body, z))}) + "\n"


def _run_montecarlo(args) -> str:
    body = _load_body(args.body)
    if isinstance(body, list) or isinstance(body, SplitBody):
        raise ValueError("montecarlo needs a typed bounded body descriptor")
    z = parse_rational(args.z)
    est = monte_carlo_lower(body, z, args.samples, args.seed)
    return (
        json.dumps(
            {
                "z": args.z,
                "bound": format_rational(bound_for(body, z)),
                "estimate": est.estimate,
                "std_error": est.std_error,
                "samples": est.samples,
                "seed": est.seed,
            }
        )
        + "\n"
    )


def _parse_ranges(items):
    out = {}
    for item in items:
        try:
            name, span = item.split("=", 1)
            lo, hi = span.split(":", 1)
        except ValueError as exc:
            raise ValueError(f"malformed --range {item!r}, expected PARAM=LO:HI") from exc
        out[name] = (parse_rational(lo), parse_rational(hi))
    return out or None


def _run_sweep(args) -> str:
    rows = sweep_grid(
        args.family,
        parse_rational(args.z),
        step=parse_rational(args.step) if args.step else DEFAULT_STEP,
        ranges=_parse_ranges(args.range),
        mc_samples=args.mc_samples,
        seed=args.seed,
    )
    if args.format == "json":
        payload = [
            {
                "params": [format_rational(p) for p in r.params],
                "w": format_rational(r.w),
                "z": format_rational(r.z),
                "bound": format_rational(r.bound),
                "mc": None
                if r.mc is None
                else {
                    "estimate": r.mc.estimate,
                    "std_error": r.mc.std_error,
                    "samples": r.mc.samples,
                    "seed": r.mc.seed,
                },
            }
            for r in rows
        ]
        return json.dumps(payload) + "\n"
    lines = ["params,w,z,bound,mc_estimate,mc_stderr,samples,seed"]
    for r in rows:
        params = ";".join(format_rational(p) for p in r.params)
        mc = (
            (repr(r.mc.estimate), repr(r.mc.std_error), str(r.mc.samples))
            if r.mc
            else ("", "", "")
        )
        lines.append(
            ",".join(
                (
                    params,
                    format_rational(r.w),
                    format_rational(r.z),
                    format_rational(r.bound),
                    *mc,
                    str(args.seed),
                )
            )
        )
    return "\n".join(lines) + "\n"


def _run_plotdata(args) -> str:
    step = parse_rational(args.step)
    if step <= 0:
        raise ValueError(f"need step > 0, got {args.step}")
    lines = ["w,bound"]
    w = 1 + step
    while w <= 2:
        upper_z2, lower_z32 = special_values(w)
        value = upper_z2 if args.curve == "z2" else lower_z32
        lines.append(f"{format_rational(w)},{format_rational(value)}")
        w += step
    return "\n".join(lines) + "\n"


_RUNNERS = {
    "classify": _run_classify,
    "width": _run_width,
    "strength": _run_strength,
    "bound": _run_bound,
    "montecarlo": _run_montecarlo,
    "sweep": _run_sweep,
    "plotdata": _run_plotdata,
}


def run(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_ERROR
    try:
        text = _RUNNERS[args.command](args)
    except (ValueError, ZeroDivisionError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_ERROR
    _emit(text, getattr(args, "output", None))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
