"""Origin-centred inclusion radii for the zeros of monic quaternionic polynomials.

Every function returns a :class:`BoundResult` whose ``radius`` ``R`` satisfies
``|z| <= R`` for all zeros ``z``. Each bound is stated for one coefficient
side; a polynomial of the other side is mirrored first. Mirroring conjugates
the coefficients and the zeros, so norms and radii are unchanged.

The radii come from Gershgorin balls of companion matrices rescaled by a
positive diagonal similarity:

* ``cauchy_bound``        ``1 + max |a_k|``
* ``weighted_bound``      ``max (alpha_i + |a_i|) / alpha_{i+1}``, ``alpha_0 = 0``, ``alpha_n = 1``
* ``ratio_bound``         weights ``alpha_i = |a_i|``
* ``fujiwara_bound``      ``max (|a_{n-j}| / lambda_j)^(1/j)`` with ``sum lambda_j = 1``
* ``lacunary_sum_bound``  ``lambda + ... + lambda^(r+1)``, ``lambda = (max_{j<=r} |a_j|)^(1/n)``
* ``lacunary_max_bound``  ``lambda + max(lambda^2, lambda^(r+1))``
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .polynomial import QPolynomial, Side, as_side, lacunary_profile
from .quaternion import norm

WEIGHT_SUM_TOL = 1e-12


class BoundMethod(enum.Enum):
    CAUCHY = "CAUCHY"
    WEIGHTED = "WEIGHTED"
    RATIO = "RATIO"
    FUJIWARA = "FUJIWARA"
    LACUNARY_SUM = "LACUNARY_SUM"
    LACUNARY_MAX = "LACUNARY_MAX"

    @property
    def native_side(self) -> Side:
        if self in (BoundMethod.FUJIWARA, BoundMethod.LACUNARY_SUM):
            return Side.LEFT
        return Side.RIGHT

    @classmethod
    def parse(cls, name: str) -> "BoundMethod":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown bound method {name!r}") from None


@dataclass(frozen=True)
class BoundResult:
    method: BoundMethod
    radius: float
    applicable: bool = True
    note: str = ""
    params: str = ""

    @property
    def label(self) -> str:
        return f"{self.method.value}[{self.params}]" if self.params else self.method.value


def _check(p: QPolynomial, method: BoundMethod) -> tuple[QPolynomial, list[str]]:
    if p.degree < 1:
        raise ValueError("bounds need degree >= 1")
    if not p.is_monic():
        raise ValueError("bounds need a monic polynomial; call normalize_monic first")
    q, mirrored = as_side(p, method.native_side)
    notes = [f"evaluated on mirrored {q.side.value} form"] if mirrored else []
    return q, notes


def _norms(p: QPolynomial) -> list[float]:
    return [norm(c) for c in p.coeffs[:-1]]


def cauchy_bound(p: QPolynomial) -> BoundResult:
    _, notes = _check(p, BoundMethod.CAUCHY)
    radius = 1.0 + max(_norms(p))
    return BoundResult(BoundMethod.CAUCHY, radius, True, "; ".join(notes))


def weighted_bound(p: QPolynomial, alpha: Sequence[float], params: str = "") -> BoundResult:
    """Radius from the weights ``alpha_1 .. alpha_{n-1}`` (all positive)."""
    _, notes = _check(p, BoundMethod.WEIGHTED)
    n = p.degree
    alpha = [float(a) for a in alpha]
    if len(alpha) != n - 1:
        raise ValueError(f"need {n - 1} weights for degree {n}, got {len(alpha)}")
    if any(not (a > 0) for a in alpha):
        raise ValueError("weights must be positive")
    ext = [0.0] + alpha + [1.0]
    a = _norms(p)
    radius = max((ext[i] + a[i]) / ext[i + 1] for i in range(n))
    if not params:
        params = "alpha=" + ",".join(f"{x:g}" for x in alpha) if alpha else "alpha=()"
    return BoundResult(BoundMethod.WEIGHTED, radius, True, "; ".join(notes), params)


def ratio_bound(p: QPolynomial) -> BoundResult:
    """``max{|a_0|/|a_1|, 2|a_1|/|a_2|, ..., 2|a_{n-2}|/|a_{n-1}|, 2|a_{n-1}|}``."""
    _, notes = _check(p, BoundMethod.RATIO)
    n = p.degree
    a = _norms(p)
    if n == 1:
        # no interior coefficients; the leading term 2|a_{n-1}| is all that is left
        notes.append("degree 1: formula degenerates to 2|a_0|")
        return BoundResult(BoundMethod.RATIO, 2.0 * a[0], True, "; ".join(notes))
    if any(a[i] == 0.0 for i in range(1, n)):
        notes.append("zero interior coefficient")
        return BoundResult(BoundMethod.RATIO, math.nan, False, "; ".join(notes))
    terms = [a[0] / a[1]]
    terms += [2.0 * a[i] / a[i + 1] for i in range(1, n - 1)]
    terms.append(2.0 * a[n - 1])
    return BoundResult(BoundMethod.RATIO, max(terms), True, "; ".join(notes))


def dyadic_weights(n: int) -> list[float]:
    """``2^-1, 2^-2, ..., 2^-(n-1), 2^-(n-1)``; sums to exactly 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [2.0 ** -j for j in range(1, n)] + [2.0 ** -(n - 1)]


def fujiwara_bound(p: QPolynomial, lam: Optional[Sequence[float]] = None) -> BoundResult:
    _, notes = _check(p, BoundMethod.FUJIWARA)
    n = p.degree
    if lam is None:
        lam = dyadic_weights(n)
        params = "lambda=dyadic"
    else:
        params = "lambda=" + ",".join(f"{x:g}" for x in lam)
    lam = [float(x) for x in lam]
    if len(lam) != n:
        raise ValueError(f"need {n} weights for degree {n}, got {len(lam)}")
    if any(not (x > 0) for x in lam):
        raise ValueError("weights must be positive")
    if abs(math.fsum(lam) - 1.0) > WEIGHT_SUM_TOL:
        raise ValueError(f"weights must sum to 1, got {math.fsum(lam)!r}")
    a = _norms(p)
    radius = max((a[n - j] / lam[j - 1]) ** (1.0 / j) for j in range(1, n + 1))
    return BoundResult(BoundMethod.FUJIWARA, radius, True, "; ".join(notes), params)


def _lacunary_lambda(p: QPolynomial, r: int) -> float:
    return max(norm(p.coeffs[j]) for j in range(r + 1)) ** (1.0 / p.degree)


def _lacunary(p: QPolynomial, method: BoundMethod) -> tuple[Optional[int], float, list[str]]:
    _, notes = _check(p, method)
    r = lacunary_profile(p)
    if r is None:
        notes.append("q^n: every zero is 0")
        return None, 0.0, notes
    if r == 0:
        notes.append("r=0 (only a_0 nonzero)")
    elif r == p.degree - 1:
        notes.append("r=n-1 (no gap)")
    return r, _lacunary_lambda(p, r), notes


def lacunary_sum_bound(p: QPolynomial) -> BoundResult:
    r, lam, notes = _lacunary(p, BoundMethod.LACUNARY_SUM)
    params = "r=none" if r is None else f"r={r}"
    if r is None:
        return BoundResult(BoundMethod.LACUNARY_SUM, 0.0, True, "; ".join(notes), params)
    radius = math.fsum(lam ** m for m in range(1, r + 2))
    return BoundResult(BoundMethod.LACUNARY_SUM, radius, True, "; ".join(notes), params)


def lacunary_max_bound(p: QPolynomial) -> BoundResult:
    r, lam, notes = _lacunary(p, BoundMethod.LACUNARY_MAX)
    params = "r=none" if r is None else f"r={r}"
    if r is None:
        return BoundResult(BoundMethod.LACUNARY_MAX, 0.0, True, "; ".join(notes), params)
    radius = lam + max(lam ** 2, lam ** (r + 1))
    return BoundResult(BoundMethod.LACUNARY_MAX, radius, True, "; ".join(notes), params)


@dataclass
class BoundPresets:
    """Which bounds ``all_bounds`` evaluates, and with which parameters.

    ``weights`` lists extra WEIGHTED presets (each ``alpha_1 .. alpha_{n-1}``)
    on top of the two defaults; ``fujiwara`` replaces the dyadic weights.
    """

    methods: Optional[frozenset[BoundMethod]] = None
    weights: list[Sequence[float]] = field(default_factory=list)
    fujiwara: Optional[Sequence[float]] = None

    def wants(self, method: BoundMethod) -> bool:
        return self.methods is None or method in self.methods


def all_bounds(p: QPolynomial, presets: Optional[BoundPresets] = None) -> list[BoundResult]:
    """Evaluate every requested bound; inapplicable ones are flagged, not raised."""
    presets = presets or BoundPresets()
    n = p.degree
    out: list[BoundResult] = []
    if presets.wants(BoundMethod.CAUCHY):
        out.append(cauchy_bound(p))
    if presets.wants(BoundMethod.WEIGHTED):
        out.append(weighted_bound(p, [1.0] * (n - 1), params="alpha=ones"))
        interior = _norms(p)[1:n]
        if all(x > 0 for x in interior):
            out.append(weighted_bound(p, interior, params="alpha=|a_i|"))
        else:
            out.append(BoundResult(BoundMethod.WEIGHTED, math.nan, False,
                                   "zero interior coefficient", "alpha=|a_i|"))
        for alpha in presets.weights:
            out.append(weighted_bound(p, alpha))
    if presets.wants(BoundMethod.RATIO):
        out.append(ratio_bound(p))
    if presets.wants(BoundMethod.FUJIWARA):
        out.append(fujiwara_bound(p, presets.fujiwara))
    if presets.wants(BoundMethod.LACUNARY_SUM):
        out.append(lacunary_sum_bound(p))
    if presets.wants(BoundMethod.LACUNARY_MAX):
        out.append(lacunary_max_bound(p))
    return out


CSV_COLUMNS = ("degree", "method", "params", "radius", "applicable", "note")


def results_to_csv(degree: int, results: Iterable[BoundResult]) -> str:
    """Rows ``degree,method,params,radius,applicable,note``; radius blank when inapplicable."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in results:
        w.writerow([degree, r.method.value, r.params,
                    repr(r.radius) if r.applicable else "", str(r.applicable).lower(), r.note])
    return buf.getvalue()
