"""Floating-point quaternion arithmetic.

A quaternion ``w + xi + yj + zk`` is stored as four float64 components.
Multiplication follows Hamilton's table (``ij = k``, ``jk = i``, ``ki = j``)
and is not commutative.
"""

from __future__ import annotations

import math
import re
from math import isfinite
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

Real = Union[int, float]


@dataclass(frozen=True, slots=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        w, x, y, z = self.w, self.x, self.y, self.z
        if type(w) is not float or type(x) is not float or type(y) is not float or type(z) is not float:
            # normalise ints and numpy scalars to plain float
            w, x, y, z = float(w), float(x), float(y), float(z)
            object.__setattr__(self, "w", w)
            object.__setattr__(self, "x", x)
            object.__setattr__(self, "y", y)
            object.__setattr__(self, "z", z)
        if not (isfinite(w) and isfinite(x) and isfinite(y) and isfinite(z)):
            raise ValueError(f"non-finite quaternion component in ({w}, {x}, {y}, {z})")

    @classmethod
    def from_seq(cls, seq: Iterable[Real]) -> "Quaternion":
        w, x, y, z = seq
        return cls(w, x, y, z)

    @classmethod
    def real(cls, a: Real) -> "Quaternion":
        return cls(a, 0.0, 0.0, 0.0)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def __iter__(self):
        return iter(self.as_tuple())

    # arithmetic

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return multiply(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # reals are central, so left and right scaling agree
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self) -> float:
        return norm(self)

    def conjugate(self) -> "Quaternion":
        return conjugate(self)

    def inverse(self) -> "Quaternion":
        return inverse(self)

    def norm(self) -> float:
        return norm(self)

    def is_zero(self) -> bool:
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def is_real(self) -> bool:
        return self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    @property
    def vector(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def close_to(self, other: "Quaternion", tol: float) -> bool:
        """Componentwise comparison with an absolute tolerance."""
        return all(abs(a - b) <= tol for a, b in zip(self, other))

    def __str__(self) -> str:
        return format_quaternion(self)


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True, slots=True)
class SimilarityClass:
    """Conjugacy class ``{p q p^-1}``, fixed by real part and imaginary norm."""

    real_part: float
    imag_norm: float

    def __post_init__(self):
        if self.imag_norm < 0:
            raise ValueError("imag_norm must be non-negative")

    @property
    def modulus(self) -> float:
        """Norm shared by every member of the class."""
        return math.hypot(self.real_part, self.imag_norm)

    def member(self, u: Quaternion) -> Quaternion:
        """The class element ``real_part + imag_norm * u`` for unit pure ``u``."""
        return Quaternion(self.real_part) + self.imag_norm * u


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    a1, b1, c1, d1 = p.w, p.x, p.y, p.z
    a2, b2, c2, d2 = q.w, q.x, q.y, q.z
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def conjugate(q: Quaternion) -> Quaternion:
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def norm_squared(q: Quaternion) -> float:
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z


def norm(q: Quaternion) -> float:
    # hypot avoids overflow/underflow in the squares
    return math.hypot(q.w, q.x, q.y, q.z)


def inverse(q: Quaternion) -> Quaternion:
    """``conj(q) / |q|^2``; raises ZeroDivisionError for ``q == 0``."""
    if q.is_zero():
        raise ZeroDivisionError("quaternion inverse of zero")
    s = max(abs(q.w), abs(q.x), abs(q.y), abs(q.z))
    # rescale first so |q|^2 cannot overflow or underflow
    r = Quaternion(q.w / s, q.x / s, q.y / s, q.z / s)
    n2 = norm_squared(r)
    return Quaternion(r.w / n2 / s, -r.x / n2 / s, -r.y / n2 / s, -r.z / n2 / s)


def left_matrix(a: Quaternion) -> np.ndarray:
    """Real 4x4 matrix of ``h -> a h``."""
    w, x, y, z = a.w, a.x, a.y, a.z
    return np.array([[w, -x, -y, -z], [x, w, -z, y], [y, z, w, -x], [z, -y, x, w]])


def right_matrix(a: Quaternion) -> np.ndarray:
    """Real 4x4 matrix of ``h -> h a``."""
    w, x, y, z = a.w, a.x, a.y, a.z
    return np.array([[w, -x, -y, -z], [x, w, z, -y], [y, -z, w, x], [z, y, -x, w]])


def similarity_invariants(q: Quaternion) -> SimilarityClass:
    return SimilarityClass(q.w, math.hypot(q.x, q.y, q.z))


def distance(p: Quaternion, q: Quaternion) -> float:
    return norm(p - q)


# -- text form ---------------------------------------------------------------

def _fmt_real(v: float, digits: int) -> str:
    s = f"{v:.{digits}g}"
    return "0" if s in ("-0", "0") else s


def format_quaternion(q: Quaternion, digits: int = 12) -> str:
    """Render as ``a+bi+cj+dk`` with signs folded into the terms."""
    out = _fmt_real(q.w, digits)
    for value, unit in ((q.x, "i"), (q.y, "j"), (q.z, "k")):
        s = _fmt_real(value, digits)
        out += (s if s.startswith("-") else "+" + s) + unit
    return out


_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_TERM = re.compile(rf"([+-]?)({_NUM})?([ijk]?)")


def parse_quaternion(text: str) -> Quaternion:
    """Parse ``a+bi+cj+dk``-style text.

    Terms may appear in any order, may be omitted, and a bare unit such as
    ``-k`` means coefficient 1. Whitespace is ignored.
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty quaternion literal")
    parts = {"": 0.0, "i": 0.0, "j": 0.0, "k": 0.0}
    seen = set()
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse quaternion {text!r} at offset {pos}")
        sign, num, unit = m.groups()
        if num is None and not unit:
            raise ValueError(f"cannot parse quaternion {text!r} at offset {pos}")
        if pos > 0 and not sign:
            raise ValueError(f"missing sign between terms in {text!r}")
        if unit in seen:
            raise ValueError(f"repeated {unit or 'real'} term in {text!r}")
        seen.add(unit)
        value = float(num) if num is not None else 1.0
        parts[unit] = -value if sign == "-" else value
        pos = m.end()
    return Quaternion(parts[""], parts["i"], parts["j"], parts["k"])
