"""Sample-induced value bounds and query-point classification.

For a query x the samples pin any monotone extension f into a band:

* ``sup_below(x)`` -- largest sample value at a point <= x (-inf if none);
  f(x) can be no smaller.
* ``inf_above(x)`` -- smallest sample value at a point >= x (+inf if none);
  f(x) can be no larger.

Both use the reflexive order, so at a sample point the band collapses to the
stored value whenever the data is strictly increasing.

Zones describe where x sits relative to the samples (strict dominance):

====  =======================================================
P     x is itself a sample point
A     samples exist strictly below and strictly above
L     samples exist strictly above only (lower bound is -inf)
U     samples exist strictly below only (upper bound is +inf)
N     no sample is comparable to x (both bounds infinite)
====  =======================================================

Sectors compare the band against the target value interval (alpha, beta);
several can hold at once on their shared borders, and together they always
cover every query:

====  =======================================================
S1    band width <= beta - alpha
S2    band width >= beta - alpha and inf_above <= beta
S3    band width >= beta - alpha and sup_below >= alpha
S4    sup_below <= alpha and inf_above >= beta
====  =======================================================
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import UtilityDataset
from .order import NEG_INF, POS_INF

__all__ = [
    "ZONES",
    "SECTORS",
    "BoundsResult",
    "RegionLabel",
    "sup_below",
    "inf_above",
    "classify_zone",
    "classify_sectors",
    "classify",
    "bounds_batch",
    "sector_matrix",
]

ZONES = ("P", "A", "L", "U", "N")
SECTORS = ("S1", "S2", "S3", "S4")


@dataclass(frozen=True)
class BoundsResult:
    lower: float
    upper: float


@dataclass(frozen=True)
class RegionLabel:
    zone: str
    sectors: tuple[str, ...]


def bounds_batch(
    dataset: UtilityDataset, queries: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized bounds and zones for normalized queries.

    Returns ``(lower, upper, member_index, zone)`` where ``member_index[i]``
    is the matching sample index for zone-P queries and -1 otherwise, and
    ``zone`` is a length-1 unicode array over P/A/L/U/N.
    """
    leq, geq, eq = dataset.sample_relations(queries)
    q = leq.shape[0]
    vals = dataset.values
    if dataset.sample_count == 0:
        lower = np.full(q, NEG_INF)
        upper = np.full(q, POS_INF)
        member = np.full(q, -1, dtype=np.int64)
        zone = np.full(q, "N", dtype="<U1")
        return lower, upper, member, zone

    lower = np.where(leq, vals[None, :], NEG_INF).max(axis=1)
    upper = np.where(geq, vals[None, :], POS_INF).min(axis=1)

    is_member = eq.any(axis=1)
    member = np.where(is_member, eq.argmax(axis=1), -1).astype(np.int64)
    below = (leq & ~eq).any(axis=1)
    above = (geq & ~eq).any(axis=1)

    zone = np.full(q, "N", dtype="<U1")
    zone[below & ~above] = "U"
    zone[~below & above] = "L"
    zone[below & above] = "A"
    zone[is_member] = "P"
    return lower, upper, member, zone


def sector_matrix(
    lower: np.ndarray, upper: np.ndarray, alpha: float, beta: float
) -> np.ndarray:
    """Boolean (q, 4) membership matrix over S1..S4.

    Requires ``alpha < beta``.  ``upper - lower`` is never NaN because the
    lower bound cannot be +inf nor the upper bound -inf.
    """
    if not alpha < beta:
        raise ValueError(f"alpha must be strictly below beta, got {alpha} >= {beta}")
    width = upper - lower
    span = beta - alpha
    out = np.empty((lower.size, 4), dtype=bool)
    out[:, 0] = width <= span
    out[:, 1] = (width >= span) & (upper <= beta)
    out[:, 2] = (width >= span) & (lower >= alpha)
    out[:, 3] = (lower <= alpha) & (upper >= beta)
    return out


def _single(dataset: UtilityDataset, x) -> np.ndarray:
    return dataset.normalize_queries([x] if not dataset.is_vector else np.atleast_2d(x))


def sup_below(dataset: UtilityDataset, x) -> float:
    """Largest sample value at or below x; -inf when nothing is below."""
    lower, _, _, _ = bounds_batch(dataset, _single(dataset, x))
    return float(lower[0])


def inf_above(dataset: UtilityDataset, x) -> float:
    """Smallest sample value at or above x; +inf when nothing is above."""
    _, upper, _, _ = bounds_batch(dataset, _single(dataset, x))
    return float(upper[0])


def classify_zone(dataset: UtilityDataset, x) -> str:
    """One of P/A/L/U/N for the query's position relative to the samples."""
    _, _, _, zone = bounds_batch(dataset, _single(dataset, x))
    return str(zone[0])


def classify_sectors(dataset: UtilityDataset, x, alpha: float, beta: float) -> tuple[str, ...]:
    """All sectors containing the query (at least one, possibly several)."""
    lower, upper, _, _ = bounds_batch(dataset, _single(dataset, x))
    row = sector_matrix(lower, upper, alpha, beta)[0]
    return tuple(name for name, hit in zip(SECTORS, row) if hit)


def classify(
    dataset: UtilityDataset, x, alpha: float, beta: float
) -> tuple[BoundsResult, RegionLabel]:
    """Bounds plus the full region label in one scan."""
    queries = _single(dataset, x)
    lower, upper, _, zone = bounds_batch(dataset, queries)
    row = sector_matrix(lower, upper, alpha, beta)[0]
    sectors = tuple(name for name, hit in zip(SECTORS, row) if hit)
    return BoundsResult(float(lower[0]), float(upper[0])), RegionLabel(str(zone[0]), sectors)
