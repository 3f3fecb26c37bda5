"""Gershgorin balls for left eigenvalues of quaternion matrices.

Every left eigenvalue ``lambda`` (``A x = lambda x``) of an ``n x n``
quaternion matrix lies in one of the closed balls
``|q - a_ii| <= sum_{j != i} |a_ij|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .companion import QMatrix
from .quaternion import Quaternion, inverse, norm
from .roots import ISOLATED, sample_unit_pure, solve_quadratic


@dataclass(frozen=True)
class Ball:
    center: Quaternion
    radius: float

    def __post_init__(self):
        if not (self.radius >= 0):
            raise ValueError(f"ball radius must be non-negative, got {self.radius}")

    def __str__(self):
        return f"center={self.center} radius={self.radius:.12g}"


@dataclass(frozen=True)
class BallUnion:
    balls: tuple[Ball, ...]

    def __init__(self, balls: Sequence[Ball]):
        balls = tuple(balls)
        if not balls:
            raise ValueError("a ball union needs at least one ball")
        object.__setattr__(self, "balls", balls)

    def __iter__(self) -> Iterator[Ball]:
        return iter(self.balls)

    def __len__(self):
        return len(self.balls)

    def contains(self, q: Quaternion, tol: float = 0.0) -> bool:
        return any(membership(b, q, tol) for b in self.balls)

    def slack(self, q: Quaternion) -> float:
        """Largest ``radius - |q - center|``; non-negative iff ``q`` is covered."""
        return max(b.radius - norm(q - b.center) for b in self.balls)

    def render(self) -> str:
        return "\n".join(str(b) for b in self.balls)


def gershgorin_balls(a: QMatrix) -> BallUnion:
    n = a.n
    balls = []
    for i in range(n):
        radius = sum(norm(a[i, j]) for j in range(n) if j != i)
        balls.append(Ball(a[i, i], radius))
    return BallUnion(balls)


def membership(ball: Ball, q: Quaternion, tol: float = 0.0) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return norm(q - ball.center) <= ball.radius + tol


def enclosing_radius(union: BallUnion) -> float:
    """Smallest origin-centred radius covering every ball of the union."""
    return max(norm(b.center) + b.radius for b in union)


@dataclass(frozen=True)
class SphericalFamily:
    """The 2-sphere ``{offset + factor * u : u unit pure imaginary}``."""

    offset: Quaternion
    factor: Quaternion

    def point(self, u: Quaternion) -> Quaternion:
        return self.offset + self.factor * u

    def samples(self) -> list[Quaternion]:
        return [self.point(u) for u in sample_unit_pure()]


Eigenvalue = Union[Quaternion, SphericalFamily]


def left_eigenvalues_2x2(a: QMatrix) -> list[Eigenvalue]:
    """All left eigenvalues of a 2x2 quaternion matrix ``[[a, b], [c, d]]``.

    With ``b = 0`` the matrix is triangular and the eigenvalues are ``a`` and
    ``d``. Otherwise an eigenvector can be scaled to ``(1, t)``, giving
    ``lambda = a + b t`` with ``t^2 + b^-1 (a - d) t - b^-1 c = 0``.
    """
    if a.n != 2:
        raise ValueError("left_eigenvalues_2x2 needs a 2x2 matrix")
    p, b, c, d = a[0, 0], a[0, 1], a[1, 0], a[1, 1]
    if b.is_zero():
        return [p] if p == d else [p, d]
    binv = inverse(b)
    out: list[Eigenvalue] = []
    for rec in solve_quadratic(binv * (p - d), -(binv * c)):
        if rec.kind == ISOLATED:
            out.append(p + b * rec.value)
        else:
            cls = rec.cls
            out.append(SphericalFamily(p + b * cls.real_part, b * cls.imag_norm))
    return out
