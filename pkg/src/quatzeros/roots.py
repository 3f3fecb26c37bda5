"""Independent zero finder for unilateral quaternionic polynomials.

The zeros of a LEFT polynomial ``f`` live in the similarity classes of the
complex roots of the real polynomial ``F = conj(f) * f`` (degree ``2n``). Each
such class holds either exactly one zero or consists entirely of zeros (a
spherical zero). The classes are found with Aberth's simultaneous iteration;
the zero inside each class is then recovered in closed form.

RIGHT polynomials are handled through their mirror image, whose zeros are the
conjugates.

``solve_quadratic`` is a second, unrelated route for degree two: it reduces
``q^2 + bq + c = 0`` to real equations in the trace and norm of ``q``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .polynomial import QPolynomial, Side, evaluate, mirror_convention, normalize_monic
from .quaternion import (
    ONE,
    Quaternion,
    SimilarityClass,
    conjugate,
    inverse,
    left_matrix,
    norm,
    right_matrix,
    similarity_invariants,
)

ISOLATED = "isolated"
SPHERICAL = "spherical"

CLUSTER_TOL = 1e-10
UNIT_PURE_TOL = 1e-6
MAX_ABERTH_ITER = 500
MERGE_RADIUS = 0.05
MULTIPLE_TOL = 1e-14
RING_FACTOR = 16.0
GOLDEN_ANGLE = math.pi * (3 - math.sqrt(5))

# fixed directions used to spot-check spherical classes
_SAMPLE_DIRECTIONS = [
    (1.0, 0.0, 0.0),
    (0.0, 1.0, 0.0),
    (0.0, 0.0, 1.0),
    (1.0, 1.0, 1.0),
    (1.0, -1.0, 1.0),
    (-1.0, 2.0, 0.5),
    (0.3, -0.7, -2.0),
    (-1.0, -1.0, 3.0),
]


def sample_unit_pure() -> list[Quaternion]:
    """Eight deterministic unit pure-imaginary quaternions."""
    out = []
    for x, y, z in _SAMPLE_DIRECTIONS:
        r = math.sqrt(x * x + y * y + z * z)
        out.append(Quaternion(0.0, x / r, y / r, z / r))
    return out


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class ZeroRecord:
    kind: str
    cls: SimilarityClass
    residual: float
    multiplicity: int = 1
    value: Optional[Quaternion] = None
    note: str = ""
    ok: bool = True

    @property
    def is_spherical(self) -> bool:
        return self.kind == SPHERICAL

    @property
    def modulus(self) -> float:
        """Norm of the zero; for a spherical class every member shares it."""
        if self.value is not None:
            return norm(self.value)
        return self.cls.modulus

    def conjugated(self) -> "ZeroRecord":
        if self.value is None:
            return self
        return ZeroRecord(self.kind, self.cls, self.residual, self.multiplicity,
                          conjugate(self.value), self.note, self.ok)

    def line(self, digits: int = 12) -> str:
        """``isolated w x y z residual`` or ``spherical re imnorm residual``."""
        def f(v):
            s = f"{v:.{digits}g}"
            return "0" if s in ("0", "-0") else s

        if self.kind == ISOLATED:
            w, x, y, z = self.value
            return f"isolated {f(w)} {f(x)} {f(y)} {f(z)} {self.residual:.3e}"
        return f"spherical {f(self.cls.real_part)} {f(self.cls.imag_norm)} {self.residual:.3e}"


def _isolated(value: Quaternion, residual: float, multiplicity: int = 1, note: str = "",
              ok: bool = True) -> ZeroRecord:
    return ZeroRecord(ISOLATED, similarity_invariants(value), residual, multiplicity, value, note, ok)


def _sort_key(rec: ZeroRecord):
    v = rec.value.as_tuple() if rec.value is not None else (0.0,) * 4
    return (rec.cls.real_part, rec.cls.imag_norm, v)


# -- companion polynomial ----------------------------------------------------

@dataclass(frozen=True)
class RealPolynomial:
    """Real coefficients ascending by degree."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


def companion_polynomial(p: QPolynomial) -> RealPolynomial:
    """``F = conj(f) * f`` for a monic LEFT polynomial ``f``.

    ``b_m = sum_k conj(a_k) a_{m-k}``; the imaginary parts cancel exactly in
    exact arithmetic and are checked here before being dropped.
    """
    if p.side is not Side.LEFT:
        raise ValueError("companion polynomial is defined for LEFT polynomials")
    a = p.coeffs
    n = p.degree
    bar = [conjugate(c) for c in a]
    out = []
    for m in range(2 * n + 1):
        acc = Quaternion()
        mag = 0.0
        for k in range(max(0, m - n), min(m, n) + 1):
            acc = acc + bar[k] * a[m - k]
            mag += norm(a[k]) * norm(a[m - k])
        residue = math.hypot(acc.x, acc.y, acc.z)
        if residue > 1e-12 * max(1.0, mag):
            raise ArithmeticError(f"companion coefficient b_{m} has imaginary residue {residue:g}")
        out.append(acc.w)
    return RealPolynomial(tuple(out))


# -- complex roots -----------------------------------------------------------

@dataclass(frozen=True)
class RootClass:
    """Root ``alpha + i beta`` of F (``beta >= 0``) with its multiplicity."""

    alpha: float
    beta: float
    multiplicity: int


def _horner(desc: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(z)
    for c in desc:
        acc = acc * z + c
    return acc


def _initial_points(asc: np.ndarray) -> np.ndarray:
    """Circles from the upper convex hull of ``(k, log |b_k|)``.

    An edge from ``k`` to ``l`` contributes ``l - k`` points of modulus
    ``|b_k / b_l|^(1/(l-k))``; ``asc`` must have a nonzero constant term.
    """
    pts = [(k, math.log(abs(c))) for k, c in enumerate(asc) if c != 0]
    hull: list[tuple[int, float]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    out = []
    for e, ((k, yk), (l, yl)) in enumerate(zip(hull, hull[1:])):
        m = l - k
        radius = math.exp((yk - yl) / m)
        # golden-angle offsets keep circles of equal radius from sharing points
        angles = 2 * np.pi * np.arange(m) / m + 0.4 + GOLDEN_ANGLE * e
        out.append(radius * np.exp(1j * angles))
    return np.concatenate(out)


def aberth(coeffs: Sequence[float], max_iter: int = MAX_ABERTH_ITER) -> tuple[np.ndarray, bool]:
    """All complex roots of a polynomial (ascending real coefficients).

    Starting points come from the Newton polygon of the coefficients, so
    roots of very different sizes each start on a circle of roughly the right
    radius. Angles carry a fixed offset, so runs are reproducible.
    """
    desc = np.asarray(coeffs, dtype=float)[::-1]
    desc = desc / desc[0]
    N = len(desc) - 1
    if N == 0:
        return np.zeros(0, dtype=complex), True
    if N == 1:
        return np.array([-desc[1] + 0j]), True
    dp = desc[:-1] * np.arange(N, 0, -1)
    z = _initial_points(desc[::-1])
    eps = np.finfo(float).eps
    abs_desc = np.abs(desc)
    active = np.ones(N, dtype=bool)
    for _ in range(max_iter):
        pz = _horner(desc, z)
        # backward-error stop: |F(z)| at the rounding level of the evaluation
        floor = 4 * N * eps * _horner(abs_desc, np.abs(z))
        active &= np.abs(pz) > floor
        if not active.any():
            break
        dpz = _horner(dp, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
        step[~np.isfinite(step) | ~active] = 0.0
        z = z - step
        # a stalled step only counts when Newton agrees; two colliding
        # iterates also stall, far from any root
        stalled = np.abs(step) <= 4 * eps * np.maximum(1.0, np.abs(z))
        active &= ~(stalled & (np.abs(ratio) <= 1e-6 * np.maximum(1.0, np.abs(z))))
        if not active.any():
            break
    converged = not active.any()
    return z, converged


def _peval(desc: Sequence[float], z: complex) -> complex:
    acc = 0j
    for c in desc:
        acc = acc * z + c
    return acc


def _polish_newton(desc: np.ndarray, z: complex, steps: int = 4) -> complex:
    dp = np.polyder(desc).tolist()
    desc = desc.tolist()
    best, best_val = z, abs(_peval(desc, z))
    for _ in range(steps):
        d = _peval(dp, z)
        if d == 0:
            break
        z = z - _peval(desc, z) / d
        val = abs(_peval(desc, z))
        if not val < best_val:
            break
        best, best_val = z, val
    return best


def _cluster(z: np.ndarray) -> list[list[int]]:
    """Single-linkage groups of points within ``CLUSTER_TOL * max(1, |z|)``."""
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            tol = CLUSTER_TOL * max(1.0, abs(z[i]), abs(z[j]))
            if abs(z[i] - z[j]) <= tol:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def _derivative_scale(desc: np.ndarray, k: int, x: float) -> float:
    """Size of the terms summed when evaluating ``F^(k)`` at a point of modulus ``x``."""
    d = np.abs(desc)
    for _ in range(k):
        d = np.polyder(d)
    return _peval(d.tolist(), x).real


def _is_multiple_root(desc: np.ndarray, z: np.ndarray) -> Optional[complex]:
    """Polished centre if the points ``z`` behave like one root of multiplicity ``len(z)``.

    Newton on ``F^(m-1)`` finds the centre; ``F, F', ..., F^(m-2)`` must all
    vanish there to rounding level.
    """
    m = len(z)
    target = desc
    for _ in range(m - 1):
        target = np.polyder(target)
    center = _polish_newton(target, complex(np.mean(z)), steps=8)
    x = abs(center)
    d = desc
    for k in range(m - 1):
        if abs(_peval(d.tolist(), center)) > MULTIPLE_TOL * _derivative_scale(desc, k, x):
            return None
        d = np.polyder(d)
    # the iterates must also sit on the ring such a root produces, of radius
    # about (N eps S / |F^(m)(c) / m!|)^(1/m); a pair around some other
    # multiple root passes the tests above but not this one
    lead = abs(_peval(np.polyder(d).tolist(), center)) / math.factorial(m)
    if lead == 0.0:
        return None
    ring = (4 * (len(desc) - 1) * np.finfo(float).eps * _derivative_scale(desc, 0, x) / lead) ** (1.0 / m)
    if np.max(np.abs(z - center)) > RING_FACTOR * ring:
        return None
    return center


def _merge_multiple(desc: np.ndarray, z: np.ndarray, groups: list[list[int]]) -> list[list[int]]:
    """Join nearby clusters that together form a numerically multiple root.

    A root of multiplicity ``m`` comes out of the iteration as a ring of ``m``
    points of radius about ``eps^(1/m)``, far wider than the plain cluster
    tolerance. Closest pairs are tried first.
    """
    groups = [list(g) for g in groups]
    rejected: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    while True:
        centers = [complex(np.mean(z[g])) for g in groups]
        best = None
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                dist = abs(centers[a] - centers[b])
                if dist > MERGE_RADIUS * max(1.0, abs(centers[a]), abs(centers[b])):
                    continue
                key = (tuple(groups[a]), tuple(groups[b]))
                if key in rejected:
                    continue
                if best is None or dist < best[0]:
                    best = (dist, a, b)
        if best is None:
            return groups
        _, a, b = best
        merged = sorted(groups[a] + groups[b])
        if _is_multiple_root(desc, z[merged]) is None:
            rejected.add((tuple(groups[a]), tuple(groups[b])))
            continue
        groups = [g for k, g in enumerate(groups) if k not in (a, b)] + [merged]
        groups.sort(key=lambda g: g[0])


def complex_roots(F: RealPolynomial) -> tuple[list[RootClass], bool]:
    """Roots of F in the closed upper half plane, clustered with multiplicities.

    Returns the classes and a convergence flag. Conjugate pairs are reported
    once (``beta >= 0``). Multiple roots are refined from the cluster mean by
    Newton's method on the matching derivative of F.
    """
    coeffs = list(F.coeffs)
    zero_mult = 0
    while coeffs and coeffs[0] == 0.0:
        coeffs.pop(0)
        zero_mult += 1
    z, converged = aberth(coeffs)
    desc = np.asarray(coeffs, dtype=float)[::-1]
    desc = desc / desc[0]

    classes: list[RootClass] = []
    for group in _merge_multiple(desc, z, _cluster(z)):
        m = len(group)
        center = complex(np.mean(z[group]))
        target = desc
        for _ in range(m - 1):
            target = np.polyder(target)
        center = _polish_newton(target, center)
        # F is real: a real root's cluster may be split by noise into a
        # conjugate pair; snap tiny imaginary parts to the axis
        if abs(center.imag) <= CLUSTER_TOL * max(1.0, abs(center)):
            center = complex(center.real, 0.0)
        if center.imag < 0:
            continue
        classes.append(RootClass(center.real, center.imag, m))
    if zero_mult:
        classes.append(RootClass(0.0, 0.0, zero_mult))

    # merge real-axis clusters that collapsed onto the same point
    merged: list[RootClass] = []
    # real classes first so that pieces of one real root end up adjacent
    for c in sorted(classes, key=lambda c: (c.beta != 0.0, c.alpha, c.beta)):
        if merged:
            last = merged[-1]
            close = abs(complex(c.alpha, c.beta) - complex(last.alpha, last.beta))
            if close <= CLUSTER_TOL * max(1.0, abs(complex(c.alpha, c.beta))):
                merged[-1] = RootClass(last.alpha, last.beta, last.multiplicity + c.multiplicity)
                continue
        merged.append(c)

    residual_ok = True
    for c in merged:
        zc = complex(c.alpha, c.beta)
        scale = sum(abs(b) * abs(zc) ** k for k, b in enumerate(F.coeffs))
        if c.multiplicity == 1 and abs(F(zc)) > 1e-10 * max(1.0, scale):
            residual_ok = False
    return merged, converged and residual_ok


# -- recovery of the zero inside each class ----------------------------------

def jacobian(p: QPolynomial, z: Quaternion) -> np.ndarray:
    """Real 4x4 Jacobian of ``q -> p(q)`` at ``z``.

    The derivative of ``q^k`` in direction ``h`` is ``sum_m z^m h z^(k-1-m)``.
    """
    n = p.degree
    powers = [ONE]
    for _ in range(n):
        powers.append(powers[-1] * z)
    Ls = [left_matrix(w) for w in powers]
    Rs = [right_matrix(w) for w in powers]
    outer = left_matrix if p.side is Side.LEFT else right_matrix
    J = np.zeros((4, 4))
    for k in range(1, n + 1):
        a = p.coeffs[k]
        if a.is_zero():
            continue
        inner = sum(Ls[m] @ Rs[k - 1 - m] for m in range(k))
        J += outer(a) @ inner
    return J


def _rounding_level(p: QPolynomial, z: Quaternion) -> float:
    """Size of the evaluation error expected from rounding alone."""
    r = norm(z)
    return 8 * np.finfo(float).eps * sum(norm(a) * r ** k for k, a in enumerate(p.coeffs))


def polish_zero(p: QPolynomial, z: Quaternion, steps: int = 40) -> tuple[Quaternion, float]:
    """Gauss-Newton refinement in R^4 with step halving; the residual never grows."""
    best = z
    best_res = norm(evaluate(p, z))
    for _ in range(steps):
        if best_res <= _rounding_level(p, best):
            break
        J = jacobian(p, best)
        fz = np.array(evaluate(p, best).as_tuple())
        delta, *_ = np.linalg.lstsq(J, -fz, rcond=1e-12)
        if not np.all(np.isfinite(delta)):
            break
        # halve the step until the residual drops; near-spherical zeros make
        # J nearly singular and the full step overshoots
        for _ in range(20):
            cand = best + Quaternion.from_seq(delta)
            res = norm(evaluate(p, cand))
            if res < best_res:
                break
            delta = delta / 2
        else:
            break
        best, best_res = cand, res
    return best, best_res


def _spherical_residual(p: QPolynomial, cls: SimilarityClass) -> float:
    return max(norm(evaluate(p, cls.member(u))) for u in sample_unit_pure())


def _acceptable(p: QPolynomial, z: Quaternion, res: float) -> bool:
    return res <= 1e-8 * p.coefficient_scale() * max(1.0, norm(z)) ** p.degree


def _converged(p: QPolynomial, z: Quaternion, res: float) -> bool:
    """Residual within a small multiple of the rounding level of evaluation."""
    return res <= 8 * _rounding_level(p, z)


def _search_class(p: QPolynomial, cls: SimilarityClass, multiplicity: int) -> list[ZeroRecord]:
    """Gauss-Newton from sampled members of a class whose direct recovery failed.

    Happens for classes closer than F can resolve (merged as one multiple
    root); the distinct zeros found share the class multiplicity.
    """
    found: list[tuple[Quaternion, float]] = []
    for u in sample_unit_pure() + [-v for v in sample_unit_pure()]:
        z, res = polish_zero(p, cls.member(u))
        if not _converged(p, z, res):
            continue
        if any(z.close_to(f, 1e-8 * max(1.0, norm(z))) for f, _ in found):
            continue
        found.append((z, res))
    found = found[:multiplicity]
    mults = [multiplicity - len(found) + 1] + [1] * (len(found) - 1)
    return [_isolated(z, res, m, "recovered by search in a merged class")
            for (z, res), m in zip(found, mults)]


def _refine_class(p: QPolynomial, zc: complex, steps: int = 6) -> complex:
    """Newton on ``F(z) = sum_c h_c(z)^2``, ``h_c`` the c-th component polynomial.

    Same zeros as the expanded F, but the rounding error scales with
    ``|h_c|`` instead of the coefficient sizes, which matters near spheres
    where every ``h_c`` is small.
    """
    A = np.array([a.as_tuple() for a in p.coeffs])
    k = np.arange(len(p.coeffs))
    dA = (A * k[:, None])[1:]

    def parts(z):
        pw = z ** k
        return pw @ A, pw[:-1] @ dA

    h, dh = parts(zc)
    best, best_val = zc, abs(np.sum(h * h))
    z = zc
    for _ in range(steps):
        d = 2 * np.sum(h * dh)
        if d == 0:
            break
        z = z - np.sum(h * h) / d
        h, dh = parts(z)
        val = abs(np.sum(h * h))
        if not val < best_val:
            break
        best, best_val = z, val
    return complex(best)


def recover_zeros(p: QPolynomial, classes: Sequence[RootClass]) -> list[ZeroRecord]:
    """Locate the zero(s) of monic LEFT ``p`` inside each class of F's roots.

    For a class ``alpha + beta u`` every power is ``c_k + d_k u`` with
    ``c_k + i d_k = (alpha + i beta)^k``, so ``p = P + Q u``. ``Q != 0`` pins
    ``u = -Q^-1 P``; ``P = Q = 0`` makes the whole class a zero.
    """
    if p.side is not Side.LEFT:
        raise ValueError("recover_zeros expects a LEFT polynomial")
    records = []
    for c in classes:
        if c.beta == 0.0:
            z, res = polish_zero(p, Quaternion(c.alpha))
            ok = _acceptable(p, z, res)
            mult = max(1, c.multiplicity // 2)
            records.append(_isolated(z, res, mult, "" if ok else "real class residual too large", ok))
            continue

        zc = complex(c.alpha, c.beta)
        if c.multiplicity == 1:
            zc = _refine_class(p, zc)
            zc = complex(zc.real, abs(zc.imag))
        cls = SimilarityClass(zc.real, zc.imag)
        P = Quaternion()
        Q = Quaternion()
        mag = 0.0
        power = 1 + 0j
        for a in p.coeffs:
            P = P + a * power.real
            Q = Q + a * power.imag
            mag += norm(a) * abs(power)
            power *= zc
        if norm(P) <= 1e-9 * mag and norm(Q) <= 1e-9 * mag:
            records.append(ZeroRecord(SPHERICAL, cls, _spherical_residual(p, cls), c.multiplicity))
            continue

        failure = None
        if Q.is_zero():
            failure = "Q vanished with P != 0"
        else:
            u = -(inverse(Q) * P)
            vec = math.hypot(u.x, u.y, u.z)
            if vec == 0.0:
                failure = "degenerate direction"
            else:
                unit_ok = abs(u.w) <= UNIT_PURE_TOL and abs(norm(u) - 1.0) <= UNIT_PURE_TOL
                note = "" if unit_ok else f"recovered direction not unit pure (re={u.w:.2e}, |u|={norm(u):.6f})"
                z, res = polish_zero(p, cls.member(Quaternion(0.0, u.x / vec, u.y / vec, u.z / vec)))
                # near-real classes lose half their digits through F; a zero
                # that polishes to rounding level is accepted regardless
                if unit_ok or (c.multiplicity == 1 and _converged(p, z, res)):
                    records.append(_isolated(z, res, c.multiplicity, "" if unit_ok else note + "; polished"))
                    continue
                failure = note
        found = _search_class(p, cls, c.multiplicity)
        if found:
            records.extend(found)
        else:
            records.append(ZeroRecord(SPHERICAL, cls, math.inf, c.multiplicity, note=failure, ok=False))
    return records


def _pow2_exponent(p: QPolynomial) -> int:
    """``e`` such that ``q = 2^e x`` brings the zeros of monic ``p`` near unit size.

    ``max |a_k|^(1/(n-k))`` bounds the zero moduli from above up to a factor
    of two; rounding to a power of two keeps the rescaling exact.
    """
    n = p.degree
    s = max((norm(c) ** (1.0 / (n - k)) for k, c in enumerate(p.coeffs[:-1]) if not c.is_zero()),
            default=0.0)
    if not s > 0 or not math.isfinite(s):
        return 0
    return round(math.log2(s))


def _times_pow2(q: Quaternion, e: int) -> Quaternion:
    return Quaternion(*(math.ldexp(v, e) for v in q.as_tuple()))


def _rescale(p: QPolynomial, e: int) -> QPolynomial:
    """Monic polynomial whose zeros are those of ``p`` divided by ``2^e``."""
    n = p.degree
    return QPolynomial([_times_pow2(c, e * (k - n)) for k, c in enumerate(p.coeffs[:-1])] + [ONE], p.side)


def find_zeros(p: QPolynomial) -> list[ZeroRecord]:
    """Complete zero set of ``p`` (either side), sorted by class invariants.

    Raises ConvergenceError if the class iteration fails outright; individual
    classes that fail their consistency checks come back with ``ok=False``.
    """
    if p.degree < 1:
        raise ValueError("degree >= 1 required")
    monic = normalize_monic(p)
    left = monic if monic.side is Side.LEFT else mirror_convention(monic)
    e = _pow2_exponent(left)
    work = _rescale(left, e) if e else left
    classes, converged = complex_roots(companion_polynomial(work))
    records = recover_zeros(work, classes)
    if not converged:
        records = [
            ZeroRecord(r.kind, r.cls, r.residual, r.multiplicity, r.value,
                       (r.note + "; " if r.note else "") + "class iteration did not converge", False)
            for r in records
        ]
        if not records:
            raise ConvergenceError("no root classes found")
    if e or monic.side is Side.RIGHT:
        out = []
        for r in records:
            if e:
                cls = SimilarityClass(math.ldexp(r.cls.real_part, e), math.ldexp(r.cls.imag_norm, e))
                r = ZeroRecord(r.kind, cls, r.residual, r.multiplicity,
                               None if r.value is None else _times_pow2(r.value, e), r.note, r.ok)
            if monic.side is Side.RIGHT:
                r = r.conjugated()
            residual = (norm(evaluate(monic, r.value)) if r.value is not None
                        else _spherical_residual(monic, r.cls))
            out.append(ZeroRecord(r.kind, r.cls, residual, r.multiplicity, r.value, r.note, r.ok))
        records = out
    return sorted(records, key=_sort_key)


# -- closed-form quadratic ---------------------------------------------------

def _real_roots_accurate(asc: np.ndarray) -> list[float]:
    """Real roots of a low-degree polynomial, each to relative accuracy.

    Exact roots at the origin are split off first. Companion eigenvalues
    are accurate relative to the largest root only, so roots inside the unit
    disc are taken from the reversed polynomial (as reciprocals of its large
    roots); everything is then polished by Newton's method.
    """
    asc = np.asarray(asc, dtype=float)
    out: list[float] = []
    while len(asc) > 1 and asc[0] == 0.0:
        out.append(0.0)
        asc = asc[1:]
    if len(asc) <= 1:
        return out
    P = np.polynomial.polynomial
    fwd = P.polyroots(asc)
    with np.errstate(divide="ignore", invalid="ignore"):
        rev = 1.0 / P.polyroots(asc[::-1])
    roots = [r for r in fwd if abs(r) >= 1.0] + [r for r in rev if np.isfinite(r) and abs(r) < 1.0]
    if len(roots) != len(asc) - 1:
        roots = list(fwd)
    desc = asc[::-1]
    for r in roots:
        if abs(r.imag) > 1e-7 * max(abs(r), 1e-300):
            continue
        out.append(_polish_newton(desc, complex(r.real, 0.0), steps=30).real)
    return out


def _norm_branch(beta: float, beta2: float, gamma2: float, gamma: float, c0: float) -> list[float]:
    """Real roots ``M`` of ``M^2 - beta^2 M + gamma^2 - c0 beta^2 = 0``.

    Uses the squared quantities directly unless they underflowed, in which
    case ``M = beta m`` is solved for ``m``.
    """
    tiny = np.finfo(float).tiny
    if beta2 > tiny and (gamma2 > tiny or gamma == 0.0):
        w = beta2
        const = gamma2 - c0 * w
        disc = w * w - 4.0 * const
        if disc < -1e-9 * max(1.0, w * w):
            return []
        big = (w + math.sqrt(max(disc, 0.0))) / 2.0
        return [big] + ([const / big] if big != 0.0 else [])
    g = gamma / beta
    const = g * g - c0
    disc = beta * beta - 4.0 * const
    if disc < -1e-9 * max(1.0, beta * beta, abs(c0)):
        return []
    big = (beta + math.sqrt(max(disc, 0.0))) / 2.0
    return [beta * big] + ([beta * (const / big)] if big != 0.0 else [])


def solve_quadratic(b: Quaternion, c: Quaternion) -> list[ZeroRecord]:
    """All zeros of the LEFT polynomial ``q^2 + b q + c``.

    Any zero ``q`` satisfies ``q^2 = T q - N`` with ``T = 2 Re q`` and
    ``N = |q|^2``, so ``(T + b) q = N - c``. Requiring the resulting ``q`` to
    have trace ``T`` and norm ``N`` gives two real equations; with
    ``s = T + Re b`` they reduce to a cubic in ``t = s^2``.
    """
    poly = QPolynomial([c, b, ONE], Side.LEFT)
    e = _pow2_exponent(poly)
    if e:
        # solve for x = q / 2^e, whose coefficients are near unit size
        out = []
        for r in solve_quadratic(_times_pow2(b, -e), _times_pow2(c, -2 * e)):
            if r.value is not None:
                v = _times_pow2(r.value, e)
                out.append(_isolated(v, norm(evaluate(poly, v)), r.multiplicity, r.note, r.ok))
            else:
                cls = SimilarityClass(math.ldexp(r.cls.real_part, e), math.ldexp(r.cls.imag_norm, e))
                out.append(ZeroRecord(SPHERICAL, cls, _spherical_residual(poly, cls), r.multiplicity))
        return out
    scale = poly.coefficient_scale()
    b0, c0 = b.w, c.w

    if b.is_real() and c.is_real():
        disc = b0 * b0 - 4.0 * c0
        if disc < 0:
            cls = SimilarityClass(-b0 / 2.0, math.sqrt(-disc) / 2.0)
            return [ZeroRecord(SPHERICAL, cls, _spherical_residual(poly, cls), 2)]
        if disc == 0:
            z = Quaternion(-b0 / 2.0)
            return [_isolated(z, norm(evaluate(poly, z)), 2)]
        root = math.sqrt(disc)
        # stable pairing of the two real roots
        big = -(b0 + math.copysign(root, b0)) / 2.0
        vals = sorted({big, c0 / big})
        out = []
        for v in vals:
            z, res = polish_zero(poly, Quaternion(v))
            out.append(_isolated(z, res))
        return out

    bv = np.array(b.vector)
    cv = np.array(c.vector)
    beta2 = float(bv @ bv)
    beta = math.hypot(*b.vector)
    gamma2 = float(cv @ cv)
    delta = float(bv @ cv)

    P = np.polynomial.polynomial
    W = np.array([beta2, 1.0])                       # t + |b_vec|^2
    t_ = np.array([0.0, 1.0])
    first = P.polysub(np.array([2.0 * delta]), b0 * W)  # 2 delta - b0 W
    cubic = P.polymul(first, first)
    cubic = P.polysub(cubic, P.polymul(t_, P.polymul(W, W)))
    cubic = P.polyadd(cubic, 4.0 * gamma2 * t_)
    cubic = P.polysub(cubic, 4.0 * c0 * P.polymul(t_, W))
    cubic = np.trim_zeros(cubic, "b")
    t_roots = _real_roots_accurate(cubic)

    # candidates (s, M) with N = M + c0; N - c is formed as (M, -c_vec) to avoid cancellation
    cand: list[tuple[float, float]] = []
    tscale = 1.0 + beta2 + abs(c0) + b0 * b0 + math.sqrt(gamma2)
    for t in t_roots:
        if t < -1e-9 * tscale:
            continue
        t = max(t, 0.0)
        if t > 0.0:
            s_abs = math.sqrt(t)
            for s in (s_abs, -s_abs):
                w = t + beta2
                M = ((s - b0) * w + 2.0 * delta) / (2.0 * s)
                cand.append((s, M))
        if t <= 1e-6 * tscale and beta > 0:
            # T + b is pure imaginary and the norm equation alone fixes N:
            # M^2 - w M + gamma^2 - c0 w = 0 with w = |b_vec|^2
            cand += [(0.0, M) for M in _norm_branch(beta, beta2, gamma2, math.hypot(*c.vector), c0)]

    hits: list[tuple[Quaternion, float]] = []
    for s, M in cand:
        N = M + c0
        T = s - b0
        if N - T * T / 4.0 < -1e-9 * max(1.0, abs(N)):
            continue
        lead = Quaternion(s, b.x, b.y, b.z)
        if lead.is_zero():
            continue
        q0 = inverse(lead) * Quaternion(M, -c.x, -c.y, -c.z)
        z, res = polish_zero(poly, q0)
        if res > 1e-8 * scale * max(1.0, norm(z)) ** 2:
            continue
        hits.append((z, res))

    # a double zero reaches the candidates split by about sqrt(eps) in
    # opposite directions; points closer than that are one zero, located at
    # the polished mean of the group
    groups: list[list[tuple[Quaternion, float]]] = []
    merge_tol = 1e-6 * scale
    for z, res in hits:
        for g in groups:
            if norm(z - g[0][0]) <= merge_tol:
                g.append((z, res))
                break
        else:
            groups.append([(z, res)])
    found: list[ZeroRecord] = []
    for g in groups:
        best = min(g, key=lambda h: h[1])
        spread = max(norm(z - best[0]) for z, _ in g)
        if spread <= 1e-12 * scale:
            found.append(_isolated(*best))
            continue
        mean = Quaternion.from_seq(np.mean([z.as_tuple() for z, _ in g], axis=0))
        z, res = polish_zero(poly, mean)
        found.append(_isolated(z, res, 2) if res <= best[1] else _isolated(best[0], best[1], 2))
    if len(found) == 1 and found[0].multiplicity == 1:
        # F has degree 4, so a lone isolated zero is double
        found = [_isolated(found[0].value, found[0].residual, 2)]
    return sorted(found, key=_sort_key)
