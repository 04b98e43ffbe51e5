"""Partial utility data: finitely many (point, value) samples on a domain.

The domain is either R^k under the componentwise order (``vector`` mode) or a
:class:`~monoext.poset.FinitePoset` (``poset`` mode).  Exact duplicate samples
with equal values are collapsed; duplicates with different values are a
conflict and rejected.

Validation
----------
``strict_increase_violation`` scans all comparable sample pairs.  Whether the
data admits a strictly monotone extension at all is equivalent, for a finite
sample set, to the samples themselves being strictly increasing.  Writing
``a(x)`` for the largest sample value at or below ``x`` and ``b(x)`` for the
smallest at or above ``x``, the extension-friendly condition is

    b(x') > a(x)  whenever  x' > x  (over the whole domain).

If it fails, ``a(x)`` and ``b(x')`` are attained at samples y <= x < x' <= z,
so y < z by transitivity while value(z) <= value(y): a strict-increase
violation inside the sample set.  Conversely a violating sample pair (y, z)
itself satisfies b(z) <= value(z) <= value(y) <= a(y).  So the infinite
quantifier collapses to the finite pairwise scan; ``probe_separability``
additionally checks the displayed condition directly on sampled (or, on
posets, all) comparable pairs, as an independent cross-check.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .order import NEG_INF, POS_INF, as_point
from .poset import FinitePoset

__all__ = [
    "ConflictingSampleError",
    "NotExtendibleError",
    "Violation",
    "SeparabilityWitness",
    "ProbeResult",
    "UtilityDataset",
    "load_dataset",
    "probe_separability",
]

_CHUNK = 2048


class ConflictingSampleError(ValueError):
    """The same sample point appears twice with different values."""


@dataclass(frozen=True)
class Violation:
    """A comparable sample pair whose values do not strictly increase."""

    lower: tuple[float, ...] | str
    upper: tuple[float, ...] | str
    lower_value: float
    upper_value: float


@dataclass(frozen=True)
class SeparabilityWitness:
    """A pair x < x' with inf-above(x') <= sup-below(x)."""

    lower: tuple[float, ...] | str
    upper: tuple[float, ...] | str
    sup_below_lower: float
    inf_above_upper: float


class NotExtendibleError(ValueError):
    """The dataset admits no strictly monotone extension."""

    def __init__(self, message: str, witness: SeparabilityWitness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class ProbeResult:
    ok: bool
    pairs_checked: int
    witness: SeparabilityWitness | None


class UtilityDataset:
    """Immutable sample collection on R^k or on a finite poset.

    Use :func:`load_dataset` or the ``from_*`` constructors; they perform
    deduplication, conflict detection and finiteness checks.
    """

    def __init__(
        self,
        *,
        dimension: int | None = None,
        poset: FinitePoset | None = None,
        points: np.ndarray | None = None,
        element_ids: tuple[str, ...] | None = None,
        values: np.ndarray,
    ):
        if (dimension is None) == (poset is None):
            raise ValueError("exactly one of dimension/poset must be given")
        self.poset = poset
        self.dimension = dimension
        self.values = values
        self.values.flags.writeable = False
        if poset is None:
            assert points is not None
            self.points = points
            self.points.flags.writeable = False
            self.element_ids: tuple[str, ...] | None = None
            self._element_indices = None
        else:
            assert element_ids is not None
            self.points = None
            self.element_ids = element_ids
            self._element_indices = np.array(
                [poset.index(e) for e in element_ids], dtype=np.int64
            )
        self._violation_cache: tuple[Violation | None] | None = None

    # -- construction --------------------------------------------------------

    @classmethod
    def from_points(
        cls,
        points: Iterable[Sequence[float]],
        values: Iterable[float],
        dimension: int | None = None,
    ) -> UtilityDataset:
        points = [as_point(p) for p in points]
        if dimension is None:
            if not points:
                raise ValueError("cannot infer dimension from an empty point list")
            dimension = int(points[0].size)
        return load_dataset(zip(points, values), dimension)

    @classmethod
    def from_poset_samples(
        cls, poset: FinitePoset, samples: Iterable[tuple[str, float]]
    ) -> UtilityDataset:
        return load_dataset(samples, poset)

    @property
    def is_vector(self) -> bool:
        return self.poset is None

    @property
    def sample_count(self) -> int:
        return int(self.values.size)

    def sample_keys(self) -> list[tuple[float, ...]] | list[str]:
        if self.is_vector:
            return [tuple(float(c) for c in row) for row in self.points]
        return list(self.element_ids)

    def __repr__(self) -> str:
        domain = f"R^{self.dimension}" if self.is_vector else f"poset({len(self.poset)})"
        return f"UtilityDataset({self.sample_count} samples on {domain})"

    # -- dominance masks ------------------------------------------------------

    def normalize_queries(self, queries) -> np.ndarray:
        """Vector mode: (q, k) finite float array.  Poset mode: (q,) index array."""
        if self.is_vector:
            arr = np.atleast_2d(np.asarray(queries, dtype=np.float64))
            if arr.ndim != 2 or arr.shape[1] != self.dimension:
                raise ValueError(
                    f"queries must have shape (n, {self.dimension}), got {arr.shape}"
                )
            if arr.size and not np.isfinite(arr).all():
                raise ValueError("query coordinates must be finite")
            return arr
        if isinstance(queries, str):
            queries = [queries]
        return np.array([self.poset.index(e) for e in queries], dtype=np.int64)

    def sample_relations(self, queries: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Boolean (q, n) masks: sample <= query, sample >= query, sample == query.

        ``queries`` must already be normalized.  Comparisons are exact; the
        reflexive order is used, so a query equal to a sample shows up in all
        three masks.
        """
        if self.is_vector:
            q = queries.shape[0]
            n = self.sample_count
            leq = np.empty((q, n), dtype=bool)
            geq = np.empty((q, n), dtype=bool)
            eq = np.empty((q, n), dtype=bool)
            for start in range(0, max(q, 1), _CHUNK):
                sl = slice(start, min(start + _CHUNK, q))
                block = queries[sl][:, None, :]
                leq[sl] = (self.points[None, :, :] <= block).all(axis=2)
                geq[sl] = (self.points[None, :, :] >= block).all(axis=2)
                eq[sl] = leq[sl] & geq[sl]
            return leq, geq, eq
        gt = self.poset.gt_matrix
        si = self._element_indices
        eq = queries[:, None] == si[None, :]
        leq = eq | gt[np.ix_(queries, si)].reshape(queries.size, si.size)
        geq = eq | gt[np.ix_(si, queries)].T.reshape(queries.size, si.size)
        return leq, geq, eq

    def _pairwise_strict(self) -> np.ndarray:
        """Boolean (n, n): sample_i strictly below sample_j."""
        if self.is_vector:
            pts = self.points
            leq = np.ones((self.sample_count, self.sample_count), dtype=bool)
            for start in range(0, max(self.sample_count, 1), _CHUNK):
                sl = slice(start, min(start + _CHUNK, self.sample_count))
                leq[sl] = (pts[sl][:, None, :] <= pts[None, :, :]).all(axis=2)
            np.fill_diagonal(leq, False)  # samples are distinct after dedup
            return leq
        si = self._element_indices
        return self.poset.gt_matrix[np.ix_(si, si)].T.reshape(si.size, si.size)

    # -- validation ------------------------------------------------------------

    def strict_increase_violation(self) -> Violation | None:
        """First comparable sample pair (in input order) with non-increasing values."""
        if self._violation_cache is None:
            self._violation_cache = (self._scan_for_violation(),)
        return self._violation_cache[0]

    def _scan_for_violation(self) -> Violation | None:
        if self.sample_count < 2:
            return None
        strict = self._pairwise_strict()
        vals = self.values
        bad = strict & (vals[:, None] >= vals[None, :])
        if not bad.any():
            return None
        i, j = np.unravel_index(int(np.argmax(bad)), bad.shape)
        keys = self.sample_keys()
        return Violation(keys[i], keys[j], float(vals[i]), float(vals[j]))

    def is_strictly_increasing(self) -> tuple[bool, Violation | None]:
        v = self.strict_increase_violation()
        return v is None, v

    def separability_witness(self) -> SeparabilityWitness | None:
        """None when extendible; otherwise a pair x < x' with b(x') <= a(x)."""
        v = self.strict_increase_violation()
        if v is None:
            return None
        lo, hi = v.lower, v.upper
        queries = self.normalize_queries([list(lo), list(hi)] if self.is_vector else [lo, hi])
        leq, geq, _ = self.sample_relations(queries)
        sup_below = _masked_max(self.values, leq[0])
        inf_above = _masked_min(self.values, geq[1])
        return SeparabilityWitness(lo, hi, sup_below, inf_above)

    def is_separably_increasing(self) -> tuple[bool, SeparabilityWitness | None]:
        """Whether a strictly monotone extension exists (see module docstring)."""
        w = self.separability_witness()
        return w is None, w

    def is_pareto_set(self) -> bool:
        """True iff no two distinct samples are comparable (an antichain)."""
        return self.sample_count < 2 or not self._pairwise_strict().any()

    def is_order_bounded(self) -> bool:
        """Samples are bounded above on lower sets and below on upper sets.

        A finite sample set is bounded outright, so this always holds; an
        infinite sample set could fail it, which is why it is part of the
        validation surface at all.
        """
        return True


def _masked_max(values: np.ndarray, mask: np.ndarray) -> float:
    return float(values[mask].max()) if mask.any() else NEG_INF


def _masked_min(values: np.ndarray, mask: np.ndarray) -> float:
    return float(values[mask].min()) if mask.any() else POS_INF


def load_dataset(
    records: Iterable[tuple[Sequence[float] | str, float]],
    domain: int | FinitePoset,
) -> UtilityDataset:
    """Build a :class:`UtilityDataset` from (sample, value) records.

    ``domain`` is the dimension ``k`` for vector data or the poset itself.
    Exact duplicates with equal values collapse to one sample; the same
    sample with a different value raises :class:`ConflictingSampleError`.
    """
    vector = isinstance(domain, int)
    if vector and domain < 1:
        raise ValueError(f"dimension must be >= 1, got {domain}")
    seen: dict[tuple[float, ...] | str, float] = {}
    for key, value in records:
        value = float(value)
        if not np.isfinite(value):
            raise ValueError(f"sample values must be finite, got {value!r} at {key!r}")
        if vector:
            key = tuple(float(c) for c in as_point(key, domain))
        else:
            if key not in domain:
                raise KeyError(f"sample on unknown poset element: {key!r}")
        if key in seen and seen[key] != value:
            raise ConflictingSampleError(
                f"sample {key!r} given conflicting values {seen[key]!r} and {value!r}"
            )
        seen[key] = value

    values = np.array(list(seen.values()), dtype=np.float64)
    if vector:
        pts = np.array(list(seen.keys()), dtype=np.float64).reshape(len(seen), domain)
        return UtilityDataset(dimension=domain, points=pts, values=values)
    return UtilityDataset(poset=domain, element_ids=tuple(seen.keys()), values=values)


def probe_separability(
    dataset: UtilityDataset,
    *,
    pairs: int = 1000,
    rng: np.random.Generator | None = None,
    padding: float = 2.0,
) -> ProbeResult:
    """Directly test ``b(x') > a(x)`` on comparable pairs of the domain.

    Vector mode samples random pairs x < x' from a box padded around the
    data range; poset mode checks every comparable pair exhaustively (the
    clauses involving a global bottom or top element hold automatically,
    since b is +inf somewhere above everything and a is -inf below).
    This is the quantifier-level definition; ``is_separably_increasing``
    decides the same property through the finite equivalence.
    """
    if dataset.is_vector:
        rng = rng or np.random.default_rng()
        k = dataset.dimension
        if dataset.sample_count:
            lo = dataset.points.min(axis=0) - padding
            hi = dataset.points.max(axis=0) + padding
        else:
            lo, hi = np.full(k, -1.0), np.full(k, 1.0)
        x = rng.uniform(lo, hi, size=(pairs, k))
        step = rng.uniform(0.0, (hi - lo) / 2.0 + 0.5, size=(pairs, k))
        # Force at least one strictly positive coordinate step.
        step[np.arange(pairs), rng.integers(0, k, size=pairs)] += 1e-3
        x_hi = x + step
        lower_keys = [tuple(float(c) for c in row) for row in x]
        upper_keys = [tuple(float(c) for c in row) for row in x_hi]
        leq, _, _ = dataset.sample_relations(dataset.normalize_queries(x))
        _, geq, _ = dataset.sample_relations(dataset.normalize_queries(x_hi))
    else:
        pairs_list = list(dataset.poset.comparable_pairs())
        lower_keys = [p[0] for p in pairs_list]
        upper_keys = [p[1] for p in pairs_list]
        pairs = len(pairs_list)
        if pairs == 0:
            return ProbeResult(True, 0, None)
        leq, _, _ = dataset.sample_relations(dataset.normalize_queries(lower_keys))
        _, geq, _ = dataset.sample_relations(dataset.normalize_queries(upper_keys))

    for i in range(pairs):
        a = _masked_max(dataset.values, leq[i])
        b = _masked_min(dataset.values, geq[i])
        if not b > a:
            return ProbeResult(False, i + 1, SeparabilityWitness(lower_keys[i], upper_keys[i], a, b))
    return ProbeResult(True, pairs, None)
