"""JSON/CSV wire formats.

Floats are written with 17 significant digits so every IEEE double
round-trips exactly; report emission is deterministic byte-for-byte.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import ParseError


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _json_number(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return fmt_float(x)


def dumps(obj) -> str:
    """Serialize nested dict/list/scalar structures with .17g floats."""
    out: list[str] = []
    _write(obj, out)
    return "".join(out)


def _write(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_json_number(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(", ")
            _write(item, out)
        out.append("]")
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(key)))
            out.append(": ")
            _write(value, out)
        out.append("}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def _require(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {key!r}")
    value = obj[key]
    if kind is float and isinstance(value, int):
        value = float(value)
    if not isinstance(value, kind):
        raise ParseError(f"field {key!r} has wrong type")
    return value


def matrix_to_json(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=np.complex128)
    return {
        "n": int(a.shape[0]),
        "re": [[float(v) for v in row] for row in a.real],
        "im": [[float(v) for v in row] for row in a.imag],
    }


def matrix_from_json(obj) -> np.ndarray:
    n = _require(obj, "n", int)
    if n < 1:
        raise ParseError("matrix dimension must be positive")
    re = _require(obj, "re", list)
    im = _require(obj, "im", list)
    try:
        re_arr = np.asarray(re, dtype=np.float64)
        im_arr = np.asarray(im, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix entries not numeric: {exc}") from exc
    if re_arr.shape != (n, n) or im_arr.shape != (n, n):
        raise ParseError(f"matrix arrays must both be {n}x{n}")
    if not np.all(np.isfinite(re_arr)) or not np.all(np.isfinite(im_arr)):
        raise ParseError("matrix entries must be finite")
    return re_arr + 1j * im_arr


def spectrum_to_json(lam: np.ndarray) -> list:
    lam = np.asarray(lam, dtype=np.complex128).ravel()
    return [[float(v.real), float(v.imag)] for v in lam]


def spectrum_from_json(obj) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise ParseError("spectrum must be a non-empty list of [re, im] pairs")
    try:
        arr = np.asarray(obj, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"spectrum entries not numeric: {exc}") from exc
    if arr.ndim != 2 or arr.shape[1] != 2 or not np.all(np.isfinite(arr)):
        raise ParseError("spectrum must be a list of finite [re, im] pairs")
    return arr[:, 0] + 1j * arr[:, 1]


def herglotz_to_json(f) -> dict:
    return {
        "angles": [float(v) for v in f.angles],
        "weights": [float(v) for v in f.weights],
    }


def herglotz_from_json(obj):
    from .funcalc import HerglotzFunction

    angles = _require(obj, "angles", list)
    weights = _require(obj, "weights", list)
    try:
        return HerglotzFunction(np.asarray(angles, dtype=np.float64),
                                np.asarray(weights, dtype=np.float64))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"invalid boundary measure: {exc}") from exc


def g1operator_to_json(op) -> dict:
    obj = {
        "matrix": matrix_to_json(op.matrix),
        "spectrum": spectrum_to_json(op.spectrum),
        "unitary": matrix_to_json(op.unitary) if op.unitary is not None else None,
        "d": float(op.d),
    }
    return obj
