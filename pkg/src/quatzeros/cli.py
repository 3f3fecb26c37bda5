"""Command-line front end.

Exit codes: 0 success, 1 containment violation (``verify``) or failed zero
computation (``roots``), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from . import polyfile
from .bounds import BoundMethod, BoundPresets, all_bounds, results_to_csv
from .companion import build_companion, default_kind
from .gershgorin import gershgorin_balls
from .harness import (
    BENCH_COLUMNS,
    GERSHGORIN,
    BenchConfig,
    ConfigError,
    parse_degrees,
    render_summary,
    run_bench,
    run_verify,
)
from .polynomial import lacunary_profile, normalize_monic
from .roots import ConvergenceError, find_zeros

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_methods(text: Optional[str], allow_gershgorin: bool) -> Optional[frozenset[str]]:
    if not text:
        return None
    names = set()
    for raw in text.split(","):
        name = raw.strip().upper()
        if not name:
            continue
        if name == GERSHGORIN and allow_gershgorin:
            names.add(name)
            continue
        try:
            names.add(BoundMethod.parse(name).value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return frozenset(names)


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _load(path: str):
    p = polyfile.load(path)
    if p.degree < 1:
        raise polyfile.PolyFileError("degree >= 1 required")
    return p


def cmd_bounds(args) -> int:
    p = _load(args.input)
    monic = normalize_monic(p)
    if monic is not p:
        print("# input normalised to monic form")
    methods = _parse_methods(args.methods, allow_gershgorin=False)
    presets = BoundPresets(
        methods=None if methods is None else frozenset(BoundMethod(m) for m in methods),
        weights=[_parse_floats(w) for w in args.weights or []],
        fujiwara=_parse_floats(args.fujiwara) if args.fujiwara else None,
    )
    try:
        results = all_bounds(monic, presets)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    print(f"degree {monic.degree}, side {monic.side.value}, lacunary r = {lacunary_profile(monic)}")
    print(f"{'method':<14}{'params':<20}{'radius':>22}  {'applicable':<11}note")
    for r in results:
        radius = f"{r.radius:.15g}" if r.applicable else "-"
        print(f"{r.method.value:<14}{r.params:<20}{radius:>22}  {str(r.applicable).lower():<11}{r.note}")

    comp = build_companion(monic, default_kind(monic))
    print(f"gershgorin balls of {default_kind(monic).value}:")
    print(gershgorin_balls(comp).render())
    if args.dump_matrix:
        print(f"{default_kind(monic).value} =")
        print(comp.render())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(results_to_csv(monic.degree, results))
    return EXIT_OK


def cmd_roots(args) -> int:
    p = _load(args.input)
    try:
        zeros = find_zeros(p)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    for z in zeros:
        line = z.line()
        if z.note:
            line += f"  # {z.note}"
        print(line)
    if zeros and all(not z.ok for z in zeros):
        return EXIT_VIOLATION
    return EXIT_OK


def _config(args) -> BenchConfig:
    cfg = BenchConfig(
        degrees=parse_degrees(args.degrees),
        samples=args.samples,
        scale=args.scale,
        seed=args.seed,
        methods=_parse_methods(args.methods, allow_gershgorin=True),
        out=args.out,
        transforms=args.transforms,
        workers=args.workers,
    )
    cfg.validate()
    return cfg


def cmd_verify(args) -> int:
    cfg = _config(args)
    start = time.perf_counter()
    report = run_verify(cfg)
    print(report.render())
    print(f"elapsed {time.perf_counter() - start:.2f}s")
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_bench(args) -> int:
    cfg = _config(args)
    rows, summary = run_bench(cfg)
    if not cfg.out:
        print(",".join(BENCH_COLUMNS))
        for row in rows:
            print(",".join(row))
    print(render_summary(summary))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatzeros",
                                     description="Inclusion balls for zeros of quaternionic polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="evaluate all zero-inclusion radii for a polynomial file")
    b.add_argument("--input", required=True)
    b.add_argument("--methods", help="comma-separated subset, e.g. CAUCHY,FUJIWARA")
    b.add_argument("--weights", action="append", metavar="A1,A2,...",
                   help="extra WEIGHTED preset alpha_1..alpha_{n-1} (repeatable)")
    b.add_argument("--fujiwara", metavar="L1,...,LN", help="FUJIWARA weights summing to 1")
    b.add_argument("--out", help="write the rows as CSV")
    b.add_argument("--dump-matrix", action="store_true", help="print the companion matrix")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("roots", help="list the zeros of a polynomial file")
    r.add_argument("--input", required=True)
    r.set_defaults(func=cmd_roots)

    for name, func, default_samples, help_ in (
        ("verify", cmd_verify, 1000, "check every zero of random polynomials against every bound"),
        ("bench", cmd_bench, 100, "tabulate bound slack over random polynomials"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--seed", type=int, default=42)
        s.add_argument("--degrees", default="2..8", help="inclusive range A..B (default 2..8)")
        s.add_argument("--samples", type=int, default=default_samples)
        s.add_argument("--scale", type=float, default=5.0, help="coefficient components in [-scale, scale]")
        s.add_argument("--methods", help="comma-separated subset; GERSHGORIN selects companion balls")
        s.add_argument("--out", help="CSV output path")
        s.add_argument("--transforms", type=int, default=3,
                       help="random diagonal similarities per sample (verify)")
        s.add_argument("--workers", type=int, default=1)
        s.set_defaults(func=func)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigError, polyfile.PolyFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
