"""Reading and writing polynomial files.

A polynomial file is a YAML (or JSON, which is valid YAML) mapping::

    side: left            # or "right"
    coeffs:               # ascending degree: a_0, a_1, ..., a_n
      - [0, 0, 0, 1]      # [w, x, y, z]
      - "-i-j"            # or a quaternion literal
      - [1, 0, 0, 0]

Every number must be finite and the last coefficient nonzero.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Union

import yaml

from .polynomial import QPolynomial, Side
from .quaternion import Quaternion, parse_quaternion


class PolyFileError(ValueError):
    pass


def _coefficient(item: Any, index: int) -> Quaternion:
    if isinstance(item, str):
        try:
            return parse_quaternion(item)
        except ValueError as exc:
            raise PolyFileError(f"coeffs[{index}]: {exc}") from None
    if isinstance(item, bool):
        raise PolyFileError(f"coeffs[{index}]: expected a number, got a boolean")
    if isinstance(item, (int, float)):
        item = [item, 0, 0, 0]
    if not isinstance(item, (list, tuple)) or len(item) != 4:
        raise PolyFileError(f"coeffs[{index}]: expected [w, x, y, z]")
    values = []
    for v in item:
        if isinstance(v, str):
            # YAML 1.1 reads exponent forms without a dot (1e5) as strings
            try:
                v = float(v)
            except ValueError:
                raise PolyFileError(f"coeffs[{index}]: component {v!r} is not a number") from None
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise PolyFileError(f"coeffs[{index}]: component {v!r} is not a number")
        if not math.isfinite(v):
            raise PolyFileError(f"coeffs[{index}]: non-finite component {v!r}")
        values.append(float(v))
    return Quaternion.from_seq(values)


def parse_polynomial(doc: Any) -> QPolynomial:
    if not isinstance(doc, dict):
        raise PolyFileError("polynomial file must be a mapping with 'side' and 'coeffs'")
    missing = {"side", "coeffs"} - set(doc)
    if missing:
        raise PolyFileError(f"missing field(s): {', '.join(sorted(missing))}")
    extra = set(doc) - {"side", "coeffs"}
    if extra:
        raise PolyFileError(f"unknown field(s): {', '.join(sorted(map(str, extra)))}")
    side = doc["side"]
    if side not in ("left", "right"):
        raise PolyFileError(f"side must be 'left' or 'right', got {side!r}")
    raw = doc["coeffs"]
    if not isinstance(raw, list) or not raw:
        raise PolyFileError("coeffs must be a non-empty list")
    coeffs = [_coefficient(c, i) for i, c in enumerate(raw)]
    try:
        return QPolynomial(coeffs, Side(side))
    except ValueError as exc:
        raise PolyFileError(str(exc)) from None


def loads(text: str) -> QPolynomial:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise PolyFileError(f"not valid YAML/JSON: {exc}") from None
    return parse_polynomial(doc)


def load(path: Union[str, Path]) -> QPolynomial:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PolyFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def dumps(p: QPolynomial) -> str:
    """JSON text that :func:`loads` reads back to the same polynomial."""
    return json.dumps({"side": p.side.value, "coeffs": [list(c.as_tuple()) for c in p.coeffs]})


def dump(p: QPolynomial, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(p) + "\n", encoding="utf-8")
