"""Companion matrices of monic quaternionic polynomials and diagonal scalings.

Four layouts are supported:

* ``CF``: LEFT polynomial, ones on the superdiagonal, ``-a_0 .. -a_{n-1}``
  along the bottom row;
* ``CG``: RIGHT polynomial, ones on the subdiagonal, ``-a_0 .. -a_{n-1}``
  down the last column;
* ``CP`` / ``CH``: the lacunary versions of ``CF`` / ``CG``, identical except
  that entries above ``a_r`` are structurally zero.

The left spectrum of each layout is the zero set of its polynomial, and a
similarity by a positive real diagonal matrix leaves the left spectrum alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .polynomial import QPolynomial, Side, lacunary_profile
from .quaternion import ONE, ZERO, Quaternion, format_quaternion


class CompanionKind(enum.Enum):
    CF = "CF"
    CG = "CG"
    CP = "CP"
    CH = "CH"

    @property
    def side(self) -> Side:
        return Side.LEFT if self in (CompanionKind.CF, CompanionKind.CP) else Side.RIGHT

    @property
    def lacunary(self) -> bool:
        return self in (CompanionKind.CP, CompanionKind.CH)


class QMatrix:
    """Immutable square matrix of quaternions."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Quaternion]]):
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("QMatrix must be square and non-empty")
        self._rows = tuple(tuple(r) for r in rows)

    @property
    def n(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Quaternion:
        i, j = ij
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[Quaternion, ...], ...]:
        return self._rows

    def transpose(self) -> "QMatrix":
        return QMatrix([[self._rows[j][i] for j in range(self.n)] for i in range(self.n)])

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"QMatrix(n={self.n})"

    def render(self, digits: int = 6) -> str:
        """Aligned text grid, one matrix row per line."""
        cells = [[format_quaternion(e, digits) for e in row] for row in self._rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def default_kind(p: QPolynomial, lacunary: bool = False) -> CompanionKind:
    if p.side is Side.LEFT:
        return CompanionKind.CP if lacunary else CompanionKind.CF
    return CompanionKind.CH if lacunary else CompanionKind.CG


def build_companion(p: QPolynomial, kind: CompanionKind | None = None) -> QMatrix:
    if kind is None:
        kind = default_kind(p)
    if not p.is_monic():
        raise ValueError("companion matrix requires a monic polynomial")
    if p.degree < 1:
        raise ValueError("companion matrix requires degree >= 1")
    if kind.side is not p.side:
        raise ValueError(f"{kind.value} companion needs a {kind.side.value} polynomial, got {p.side.value}")
    n = p.degree
    tail = [-c for c in p.coeffs[:-1]]
    if kind.lacunary:
        r = lacunary_profile(p)
        # everything above a_r is already exactly zero; rebuilt explicitly so the
        # layout does not depend on signed zeros from negation
        top = -1 if r is None else r
        tail = [tail[j] if j <= top else ZERO for j in range(n)]
    rows = [[ZERO] * n for _ in range(n)]
    if kind.side is Side.LEFT:
        for i in range(n - 1):
            rows[i][i + 1] = ONE
        rows[n - 1] = list(tail)
    else:
        for i in range(1, n):
            rows[i][i - 1] = ONE
        for i in range(n):
            rows[i][n - 1] = tail[i]
    return QMatrix(rows)


def diagonal_similarity(c: QMatrix, d: Sequence[float]) -> QMatrix:
    """``D^-1 C D`` for ``D = diag(d)`` with positive real ``d``.

    Entry ``(i, j)`` becomes ``C_ij * d_j / d_i``; real scales commute with
    the quaternion entries.
    """
    n = c.n
    if len(d) != n:
        raise ValueError(f"need {n} scales, got {len(d)}")
    if any(not (s > 0) for s in d):
        raise ValueError("diagonal scales must be positive")
    rows = c.rows()
    return QMatrix([
        [rows[i][j] if rows[i][j].is_zero() else rows[i][j] * (d[j] / d[i]) for j in range(n)]
        for i in range(n)
    ])


class Preset(enum.Enum):
    WEIGHTED = "weighted"
    GEOMETRIC = "geometric"
    LACUNARY_P = "lacunary_p"
    LACUNARY_H = "lacunary_h"


def preset_transform(preset: Preset, n: int, param) -> list[float]:
    """Diagonal scales used to turn a companion matrix into a given bound.

    ``WEIGHTED`` takes the weights ``alpha_1 .. alpha_{n-1}`` and returns
    ``(alpha_1, ..., alpha_{n-1}, 1)``. ``GEOMETRIC`` and ``LACUNARY_P`` take a
    positive real ``l`` and return ``(l^-(n-1), ..., l^-1, 1)``; ``LACUNARY_H``
    returns ``(l^(n-1), ..., l, 1)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if preset is Preset.WEIGHTED:
        alpha = [float(a) for a in param]
        if len(alpha) != n - 1:
            raise ValueError(f"WEIGHTED needs {n - 1} weights, got {len(alpha)}")
        if any(not (a > 0) for a in alpha):
            raise ValueError("weights must be positive")
        return alpha + [1.0]
    l = float(param)
    if not (l > 0):
        raise ValueError("scale parameter must be positive")
    if preset in (Preset.GEOMETRIC, Preset.LACUNARY_P):
        return [1.0 / l ** (n - 1 - i) for i in range(n)]
    if preset is Preset.LACUNARY_H:
        return [l ** (n - 1 - i) for i in range(n)]
    raise ValueError(f"unknown preset {preset!r}")
