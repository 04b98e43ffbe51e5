"""Componentwise (Paretian) order on points of R^k and extended-real helpers.

Comparisons are exact float comparisons; no epsilon is applied anywhere.
Infinities use the native IEEE values ``float("-inf")`` / ``float("inf")``,
which already obey the conventions this library relies on
(``inf - c == inf`` for finite ``c``, and min/max against finite values).
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

NEG_INF = float("-inf")
POS_INF = float("inf")

__all__ = [
    "NEG_INF",
    "POS_INF",
    "as_point",
    "pareto_leq",
    "pareto_lt",
    "is_extended_real",
    "ext_min",
    "ext_max",
    "ext_sub_const",
]


def as_point(coords: Sequence[float] | np.ndarray, dimension: int | None = None) -> np.ndarray:
    """Validate and return ``coords`` as a read-only float64 vector.

    A point must have at least one coordinate and every coordinate must be
    finite (NaN and infinities are rejected here, at construction time).
    If ``dimension`` is given, the length must match it exactly.
    """
    arr = np.asarray(coords, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"point must be a 1-d sequence of reals, got shape {arr.shape}")
    if arr.size < 1:
        raise ValueError("point must have at least one coordinate")
    if not np.isfinite(arr).all():
        raise ValueError(f"point coordinates must be finite, got {list(coords)!r}")
    if dimension is not None and arr.size != dimension:
        raise ValueError(f"expected a point of dimension {dimension}, got {arr.size}")
    out = arr.copy()
    out.flags.writeable = False
    return out


def _pair(x: Sequence[float], y: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    a, b = as_point(x), as_point(y)
    if a.size != b.size:
        raise ValueError(f"dimension mismatch: {a.size} vs {b.size}")
    return a, b


def pareto_leq(x: Sequence[float], y: Sequence[float]) -> bool:
    """True iff x_i <= y_i in every coordinate (reflexive)."""
    a, b = _pair(x, y)
    return bool((a <= b).all())


def pareto_lt(x: Sequence[float], y: Sequence[float]) -> bool:
    """True iff ``pareto_leq(x, y)`` and the points differ somewhere.

    This is the strict dominance order: irreflexive and transitive.
    """
    a, b = _pair(x, y)
    return bool((a <= b).all() and (a != b).any())


def is_extended_real(v: float) -> bool:
    """True for any float except NaN (finite values and both infinities)."""
    return isinstance(v, (int, float)) and not math.isnan(v)


def _check_ext(v: float) -> float:
    if not is_extended_real(v):
        raise ValueError(f"not an extended real: {v!r}")
    return float(v)


def ext_min(a: float, b: float) -> float:
    """Minimum on the extended real line."""
    return min(_check_ext(a), _check_ext(b))


def ext_max(a: float, b: float) -> float:
    """Maximum on the extended real line."""
    return max(_check_ext(a), _check_ext(b))


def ext_sub_const(a: float, c: float) -> float:
    """``a - c`` for extended-real ``a`` and finite ``c``.

    Keeps the conventions (-inf) - c = -inf and (+inf) - c = +inf; a finite
    ``c`` is required so the difference is always well defined.
    """
    a = _check_ext(a)
    if not math.isfinite(c):
        raise ValueError(f"subtracted constant must be finite, got {c!r}")
    return a - c
