"""Randomised containment checks and slack benchmarks.

Each sample ``i`` draws its polynomial from a generator seeded with
``(seed, i)``, so results do not depend on evaluation order or worker count.
"""

from __future__ import annotations

import csv
import hashlib
import io
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .bounds import BoundMethod, BoundPresets, BoundResult, all_bounds
from .companion import CompanionKind, build_companion, diagonal_similarity
from .gershgorin import BallUnion, enclosing_radius, gershgorin_balls
from .polynomial import QPolynomial, Side, lacunary_profile
from .quaternion import ONE, ZERO, Quaternion, norm
from .roots import ZeroRecord, find_zeros, sample_unit_pure

GERSHGORIN = "GERSHGORIN"
CONTAINMENT_TOL = 1e-9
MAX_DEGREE = 64

VERIFY_COLUMNS = ("sample", "degree", "side", "r", "method", "params", "radius",
                  "maxZeroNorm", "slack", "tolerance", "ok")
BENCH_COLUMNS = ("sample", "degree", "side", "method", "radius", "maxZeroNorm", "slack")


class ConfigError(ValueError):
    pass


@dataclass
class BenchConfig:
    degrees: tuple[int, int] = (2, 8)
    samples: int = 100
    scale: float = 5.0
    seed: int = 42
    methods: Optional[frozenset[str]] = None   # bound method names and/or "GERSHGORIN"
    out: Optional[str] = None
    transforms: int = 3
    workers: int = 1

    def validate(self) -> None:
        lo, hi = self.degrees
        if not (1 <= lo <= hi <= MAX_DEGREE):
            raise ConfigError(f"degree range must lie within 1..{MAX_DEGREE}, got {lo}..{hi}")
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if not (self.scale > 0) or not math.isfinite(self.scale):
            raise ConfigError("scale must be a positive finite number")
        if not (0 <= self.seed < 2 ** 64):
            raise ConfigError("seed must be an unsigned 64-bit integer")
        if self.transforms < 0:
            raise ConfigError("transforms must be >= 0")
        if self.methods is not None:
            known = {m.value for m in BoundMethod} | {GERSHGORIN}
            unknown = set(self.methods) - known
            if unknown:
                raise ConfigError(f"unknown method(s): {', '.join(sorted(unknown))}")

    def presets(self) -> BoundPresets:
        if self.methods is None:
            return BoundPresets()
        return BoundPresets(methods=frozenset(BoundMethod(m) for m in self.methods if m != GERSHGORIN))

    def wants_gershgorin(self) -> bool:
        return self.methods is None or GERSHGORIN in self.methods


def parse_degrees(text: str) -> tuple[int, int]:
    """``"A..B"`` or a single ``"A"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        d = int(text)
        return d, d
    except ValueError:
        raise ConfigError(f"bad degree range {text!r}; expected A..B") from None


# -- sample generation -------------------------------------------------------

def sample_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def random_quaternion(rng: np.random.Generator, scale: float) -> Quaternion:
    return Quaternion.from_seq(rng.uniform(-scale, scale, 4))


def random_polynomial(rng: np.random.Generator, degree: int, scale: float, side: Side,
                      r: Optional[int] = None) -> QPolynomial:
    """Monic polynomial with ``a_j`` uniform in ``[-scale, scale]^4`` for ``j <= r``.

    Coefficients strictly between ``r`` and ``degree`` are exact zeros;
    ``r = degree - 1`` (the default) gives a full polynomial.
    """
    if r is None:
        r = degree - 1
    if not (0 <= r < degree):
        raise ValueError("need 0 <= r < degree")
    coeffs = [random_quaternion(rng, scale) for _ in range(r + 1)]
    while coeffs[r].is_zero():
        coeffs[r] = random_quaternion(rng, scale)
    coeffs += [ZERO] * (degree - 1 - r) + [ONE]
    return QPolynomial(coeffs, side)


def draw_sample(config: BenchConfig, index: int) -> tuple[QPolynomial, np.random.Generator]:
    """The polynomial for sample ``index`` and the generator positioned after it.

    Sides alternate LEFT/RIGHT. Half of the samples are lacunary with the gap
    index ``r`` uniform in ``0 .. n-2``.
    """
    rng = sample_rng(config.seed, index)
    lo, hi = config.degrees
    n = int(rng.integers(lo, hi + 1))
    side = Side.LEFT if index % 2 == 0 else Side.RIGHT
    r = n - 1
    if n >= 2 and rng.random() < 0.5:
        r = int(rng.integers(0, n - 1))
    return random_polynomial(rng, n, config.scale, side, r), rng


def random_scales(rng: np.random.Generator, n: int) -> list[float]:
    """Positive diagonal entries, log-uniform in ``[e^-2, e^2]``."""
    return [float(x) for x in np.exp(rng.uniform(-2.0, 2.0, n))]


def digest(p: QPolynomial) -> str:
    text = p.side.value + ";" + ";".join(",".join(repr(v) for v in c.as_tuple()) for c in p.coeffs)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


# -- per-sample evaluation ---------------------------------------------------

@dataclass
class Check:
    method: str
    params: str
    radius: Optional[float]       # None when the bound does not apply
    slack: Optional[float]
    tolerance: float
    ok: bool
    worst_zero: Optional[str] = None


@dataclass
class SampleOutcome:
    index: int
    degree: int
    side: str
    r: Optional[int]
    digest: str
    max_zero_norm: float
    checks: list[Check]
    zeros: list[ZeroRecord]
    oracle_ok: bool


def _zero_points(zero: ZeroRecord) -> list[Quaternion]:
    if zero.value is not None:
        return [zero.value]
    return [zero.cls.member(u) for u in sample_unit_pure()]


def _zero_label(zero: ZeroRecord) -> str:
    if zero.value is not None:
        return str(zero.value)
    return f"sphere({zero.cls.real_part:.12g},{zero.cls.imag_norm:.12g})"


def _check_bound(res: BoundResult, zeros: Sequence[ZeroRecord], max_norm: float) -> Check:
    if not res.applicable:
        return Check(res.method.value, res.params, None, None, 0.0, True)
    tol = CONTAINMENT_TOL * (1.0 + res.radius)
    slack = res.radius - max_norm
    worst = None
    if zeros and slack < -tol:
        worst = _zero_label(max(zeros, key=lambda z: z.modulus))
    return Check(res.method.value, res.params, res.radius, slack, tol, slack >= -tol, worst)


def _check_union(union: BallUnion, zeros: Sequence[ZeroRecord], params: str) -> Check:
    """Containment slack of the zeros in a ball union.

    A point's slack is its best ``radius - distance`` over the balls; the
    union's slack is the worst point. Each ball gets its own tolerance.
    """
    worst_slack = math.inf
    worst_excess = -math.inf
    worst_zero = None
    for zero in zeros:
        for pt in _zero_points(zero):
            best_slack = -math.inf
            best_excess = math.inf
            for ball in union:
                gap = ball.radius - norm(pt - ball.center)
                best_slack = max(best_slack, gap)
                best_excess = min(best_excess, -gap - CONTAINMENT_TOL * (1.0 + ball.radius))
            worst_slack = min(worst_slack, best_slack)
            if best_excess > worst_excess:
                worst_excess, worst_zero = best_excess, _zero_label(zero)
    radius = enclosing_radius(union)
    ok = worst_excess <= 0.0
    return Check(GERSHGORIN, params, radius, worst_slack if zeros else 0.0,
                 CONTAINMENT_TOL * (1.0 + radius), ok, None if ok else worst_zero)


def evaluate_polynomial(p: QPolynomial, config: BenchConfig, rng: Optional[np.random.Generator] = None,
                        index: int = 0) -> SampleOutcome:
    zeros = find_zeros(p)
    max_norm = max((z.modulus for z in zeros), default=0.0)
    checks = [_check_bound(res, zeros, max_norm) for res in all_bounds(p, config.presets())]

    r = lacunary_profile(p)
    if config.wants_gershgorin():
        n = p.degree
        gap = r is None or r < n - 1
        if p.side is Side.LEFT:
            kind = CompanionKind.CP if gap else CompanionKind.CF
        else:
            kind = CompanionKind.CH if gap else CompanionKind.CG
        comp = build_companion(p, kind)
        checks.append(_check_union(gershgorin_balls(comp), zeros, f"{kind.value};d=ones"))
        if rng is None:
            rng = sample_rng(config.seed, index)
        for t in range(config.transforms):
            scaled = diagonal_similarity(comp, random_scales(rng, n))
            checks.append(_check_union(gershgorin_balls(scaled), zeros, f"{kind.value};d=random{t + 1}"))

    return SampleOutcome(index, p.degree, p.side.value, r, digest(p), max_norm, checks, zeros,
                         all(z.ok for z in zeros))


def run_sample(config: BenchConfig, index: int) -> SampleOutcome:
    p, rng = draw_sample(config, index)
    return evaluate_polynomial(p, config, rng, index)


def _run_all(config: BenchConfig) -> list[SampleOutcome]:
    indices = range(config.samples)
    if config.workers <= 1:
        return [run_sample(config, i) for i in indices]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(run_sample, [config] * config.samples, indices, chunksize=16))


# -- verify ------------------------------------------------------------------

def stat_key(check: Check) -> str:
    if check.method == BoundMethod.WEIGHTED.value:
        return f"{check.method}[{check.params}]"
    return check.method


@dataclass
class MethodStats:
    checked: int = 0
    violations: int = 0
    max_slack: float = -math.inf
    min_slack: float = math.inf


@dataclass
class Failure:
    digest: str
    method: str
    zero: str
    excess: float


@dataclass
class VerifyReport:
    per_method: dict[str, MethodStats] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    oracle_failures: list[str] = field(default_factory=list)
    samples: int = 0
    sides: dict[str, int] = field(default_factory=dict)
    lacunary: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return sum(s.violations for s in self.per_method.values())

    def render(self) -> str:
        lines = [f"{'method':<28}{'checked':>9}{'violations':>12}{'min slack':>16}{'max slack':>16}"]
        for key, s in self.per_method.items():
            lines.append(f"{key:<28}{s.checked:>9}{s.violations:>12}{s.min_slack:>16.6g}{s.max_slack:>16.6g}")
        lines.append(f"samples={self.samples} sides={dict(sorted(self.sides.items()))} "
                     f"violations={self.violations} oracle_failures={len(self.oracle_failures)}")
        for f in self.failures[:20]:
            lines.append(f"VIOLATION poly={f.digest} method={f.method} zero={f.zero} excess={f.excess:.3e}")
        for d in self.oracle_failures[:20]:
            lines.append(f"ORACLE poly={d}")
        return "\n".join(lines)


def _fmt(v: Optional[float]) -> str:
    return "" if v is None else repr(float(v))


def verify_rows(outcomes: Iterable[SampleOutcome]) -> list[list[str]]:
    rows = []
    for o in outcomes:
        for c in o.checks:
            if c.radius is None:
                continue
            rows.append([str(o.index), str(o.degree), o.side, "none" if o.r is None else str(o.r),
                         c.method, c.params, _fmt(c.radius), _fmt(o.max_zero_norm), _fmt(c.slack),
                         _fmt(c.tolerance), str(c.ok).lower()])
    return rows


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def run_verify(config: BenchConfig) -> VerifyReport:
    config.validate()
    outcomes = _run_all(config)
    report = VerifyReport(samples=len(outcomes))
    for o in outcomes:
        report.sides[o.side] = report.sides.get(o.side, 0) + 1
        if o.r is not None and o.r < o.degree - 1:
            report.lacunary[(o.degree, o.r)] = report.lacunary.get((o.degree, o.r), 0) + 1
        if not o.oracle_ok:
            report.oracle_failures.append(o.digest)
        for c in o.checks:
            if c.radius is None:
                continue
            s = report.per_method.setdefault(stat_key(c), MethodStats())
            s.checked += 1
            s.max_slack = max(s.max_slack, c.slack)
            s.min_slack = min(s.min_slack, c.slack)
            if not c.ok:
                s.violations += 1
                report.failures.append(Failure(o.digest, f"{c.method}[{c.params}]", c.worst_zero or "?",
                                               -c.slack - c.tolerance))
    if config.out:
        write_csv(config.out, VERIFY_COLUMNS, verify_rows(outcomes))
    return report


# -- bench -------------------------------------------------------------------

def bench_label(check: Check) -> str:
    if check.method == BoundMethod.WEIGHTED.value:
        return f"{check.method}[{check.params}]"
    return check.method


def bench_rows(outcomes: Iterable[SampleOutcome], sample_ids: Optional[Sequence[str]] = None) -> list[list[str]]:
    """One row per sample and method; ``slack = radius - maxZeroNorm``.

    Only the untransformed Gershgorin union is benchmarked. Inapplicable
    bounds keep their row with blank radius and slack.
    """
    rows = []
    for pos, o in enumerate(outcomes):
        sid = sample_ids[pos] if sample_ids is not None else str(o.index)
        for c in o.checks:
            if c.method == GERSHGORIN and not c.params.endswith("d=ones"):
                continue
            slack = None if c.radius is None else c.radius - o.max_zero_norm
            rows.append([sid, str(o.degree), o.side, bench_label(c), _fmt(c.radius),
                         _fmt(o.max_zero_norm), _fmt(slack)])
    return rows


@dataclass
class BenchSummary:
    method: str
    count: int
    mean_slack: float
    median_slack: float
    min_slack: float


def summarize(rows: Sequence[Sequence[str]]) -> list[BenchSummary]:
    by: dict[str, list[float]] = {}
    for row in rows:
        if row[6] == "":
            by.setdefault(row[3], [])
            continue
        by.setdefault(row[3], []).append(float(row[6]))
    out = []
    for method, vals in by.items():
        if vals:
            out.append(BenchSummary(method, len(vals), statistics.fmean(vals), statistics.median(vals), min(vals)))
        else:
            out.append(BenchSummary(method, 0, math.nan, math.nan, math.nan))
    return out


def run_bench(config: BenchConfig, extra: Sequence[QPolynomial] = ()) -> tuple[list[list[str]], list[BenchSummary]]:
    """Slack table for the sampled polynomials plus any ``extra`` ones.

    Extra polynomials (smoke cases such as ``q^n``) are appended with sample
    ids ``extra0``, ``extra1``, ...
    """
    config.validate()
    outcomes = _run_all(config)
    ids = [str(o.index) for o in outcomes]
    for k, p in enumerate(extra):
        outcomes.append(evaluate_polynomial(p, config, sample_rng(config.seed, config.samples + k),
                                            config.samples + k))
        ids.append(f"extra{k}")
    rows = bench_rows(outcomes, ids)
    summary = summarize(rows)
    if config.out:
        write_csv(config.out, BENCH_COLUMNS, rows)
        summary_path = _summary_path(config.out)
        write_csv(summary_path, ("method", "count", "meanSlack", "medianSlack", "minSlack"),
                  [[s.method, str(s.count), _fmt(s.mean_slack) if s.count else "",
                    _fmt(s.median_slack) if s.count else "", _fmt(s.min_slack) if s.count else ""]
                   for s in summary])
    return rows, summary


def _summary_path(out: str) -> str:
    if out.endswith(".csv"):
        return out[:-4] + ".summary.csv"
    return out + ".summary.csv"


def render_summary(summary: Sequence[BenchSummary]) -> str:
    lines = [f"{'method':<34}{'n':>7}{'mean slack':>16}{'median slack':>16}{'min slack':>16}"]
    for s in summary:
        lines.append(f"{s.method:<34}{s.count:>7}{s.mean_slack:>16.6g}{s.median_slack:>16.6g}{s.min_slack:>16.6g}")
    return "\n".join(lines)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
