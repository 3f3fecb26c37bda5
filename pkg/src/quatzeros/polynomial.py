"""Unilateral quaternionic polynomials.

``Side.LEFT`` polynomials carry their coefficients to the left of the powers,
``f(q) = sum a_k q^k``; ``Side.RIGHT`` polynomials carry them on the right,
``g(q) = sum q^k a_k``. The two readings of the same coefficient list give
different functions once the coefficients leave the reals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .quaternion import ONE, ZERO, Quaternion, conjugate, inverse, norm


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def opposite(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


def _as_quaternion(c) -> Quaternion:
    if isinstance(c, Quaternion):
        return c
    if isinstance(c, (int, float)):
        return Quaternion(c)
    return Quaternion.from_seq(c)


@dataclass(frozen=True)
class QPolynomial:
    """Coefficients ``a_0 .. a_n`` in ascending degree, plus the side they sit on."""

    coeffs: tuple[Quaternion, ...]
    side: Side = Side.LEFT

    def __init__(self, coeffs: Sequence, side: Side | str = Side.LEFT):
        cs = tuple(_as_quaternion(c) for c in coeffs)
        if not cs:
            raise ValueError("polynomial needs at least one coefficient")
        if cs[-1].is_zero():
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "side", Side(side))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Quaternion:
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading == ONE

    def coefficient_scale(self) -> float:
        """``1 + max |a_k|`` over the non-leading coefficients."""
        return 1.0 + max((norm(c) for c in self.coeffs[:-1]), default=0.0)

    def __call__(self, q: Quaternion) -> Quaternion:
        return evaluate(self, q)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        return multiply_polynomials(self, other)

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            power = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            coef = f"({a})"
            if not power:
                terms.append(coef)
            elif self.side is Side.LEFT:
                terms.append(coef + power)
            else:
                terms.append(power + coef)
        return " + ".join(reversed(terms)) + f"  [{self.side.value}]"


def monomial(n: int, side: Side = Side.LEFT) -> QPolynomial:
    """The polynomial ``q^n``."""
    return QPolynomial([ZERO] * n + [ONE], side)


def linear_factor(root: Quaternion, side: Side = Side.LEFT) -> QPolynomial:
    """``q - root``."""
    return QPolynomial([-root, ONE], side)


def evaluate(p: QPolynomial, q: Quaternion) -> Quaternion:
    # powers by repeated multiplication, not Horner: Horner would interleave
    # coefficients and the variable, which is not the unilateral evaluation
    acc = p.coeffs[0]
    power = ONE
    left = p.side is Side.LEFT
    for a in p.coeffs[1:]:
        power = power * q
        acc = acc + (a * power if left else power * a)
    return acc


def multiply_polynomials(p1: QPolynomial, p2: QPolynomial) -> QPolynomial:
    """Product with the indeterminate commuting with coefficients.

    ``c_m = sum_{s+t=m} a_s b_t``, keeping ``a_s`` on the left.
    """
    if p1.side is not p2.side:
        raise ValueError("cannot multiply polynomials of different coefficient sides")
    a, b = p1.coeffs, p2.coeffs
    out = [ZERO] * (len(a) + len(b) - 1)
    for s, x in enumerate(a):
        for t, y in enumerate(b):
            out[s + t] = out[s + t] + x * y
    return QPolynomial(out, p1.side)


def normalize_monic(p: QPolynomial) -> QPolynomial:
    """Scale so the leading coefficient is 1 without moving the zeros.

    LEFT polynomials are multiplied by ``a_n^-1`` from the left, RIGHT ones
    from the right, so the scalar lands outside the evaluation.
    """
    if p.is_monic():
        return p
    inv = inverse(p.leading)
    if p.side is Side.LEFT:
        cs = [inv * c for c in p.coeffs[:-1]]
    else:
        cs = [c * inv for c in p.coeffs[:-1]]
    return QPolynomial(cs + [ONE], p.side)


def lacunary_profile(p: QPolynomial) -> Optional[int]:
    """Index of the highest nonzero coefficient below the leading one.

    Returns ``None`` for ``q^n``. Only exact zeros count as gaps. ``r = 0``
    is reported as such even though the usual definition of a lacunary
    polynomial starts at ``r = 1``; the bounds handle it uniformly.
    """
    if p.degree < 1:
        raise ValueError("lacunary profile needs degree >= 1")
    for j in range(p.degree - 1, -1, -1):
        if not p.coeffs[j].is_zero():
            return j
    return None


def mirror_convention(p: QPolynomial) -> QPolynomial:
    """Conjugate every coefficient and flip the side.

    Conjugation reverses products, so ``conj(g(q)) = mirror(g)(conj(q))`` and
    the zero sets of ``p`` and ``mirror_convention(p)`` are mutual conjugates.
    """
    return QPolynomial([conjugate(c) for c in p.coeffs], p.side.opposite)


def as_side(p: QPolynomial, side: Side) -> tuple[QPolynomial, bool]:
    """Return ``p`` in the requested convention and whether it was mirrored."""
    if p.side is side:
        return p, False
    return mirror_convention(p), True
