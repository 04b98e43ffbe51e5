"""Random-instance builders shared by the unit and acceptance tests.

Vector sample points are quantized to a 1e-3 lattice so that any comparable
pair differs by at least 1e-3 in some coordinate.  With positive weights
bounded away from zero this keeps value gaps far above float rounding,
which is what lets the strict-inequality assertions run with zero tolerance.
"""

from __future__ import annotations

import numpy as np

from monoext import FinitePoset, UtilityDataset


def increasing_vector_dataset(
    rng: np.random.Generator, k: int | None = None, max_samples: int = 200
) -> UtilityDataset:
    """Random dataset guaranteed strictly increasing on comparable samples.

    Values come from a positive-weight linear functional of the coordinates
    (optionally warped through tanh), which strictly increases along
    componentwise dominance by construction.
    """
    k = int(rng.integers(1, 4)) if k is None else k
    n = int(rng.integers(2, max_samples + 1))
    pts = np.round(rng.uniform(-10.0, 10.0, size=(n, k)), 3)
    weights = rng.uniform(0.2, 2.0, size=k)
    raw = pts @ weights
    if rng.random() < 0.3:
        vals = np.tanh(raw / 20.0) * rng.uniform(10.0, 100.0)
    else:
        vals = rng.uniform(0.05, 5.0) * raw + rng.uniform(-50.0, 50.0)
    return UtilityDataset.from_points(pts, vals, dimension=k)


def violating_vector_dataset(
    rng: np.random.Generator, k: int | None = None, max_samples: int = 50
) -> UtilityDataset:
    """A dataset with at least one comparable pair whose values decrease or tie."""
    k = int(rng.integers(1, 4)) if k is None else k
    base = increasing_vector_dataset(rng, k, max_samples)
    pts = np.asarray(base.points).copy()
    vals = np.asarray(base.values).copy()
    # Plant a dominating point with a value at or below an existing sample's.
    i = int(rng.integers(0, len(vals)))
    bump = np.round(rng.uniform(0.5, 3.0, size=k), 3)
    planted = pts[i] + bump
    drop = float(rng.choice([0.0, rng.uniform(0.5, 5.0)]))
    pts = np.vstack([pts, planted])
    vals = np.append(vals, vals[i] - drop)
    return UtilityDataset.from_points(pts, vals, dimension=k)


def comparable_query_pairs(
    rng: np.random.Generator, k: int, count: int, span: float = 15.0
) -> tuple[np.ndarray, np.ndarray]:
    """Pairs (x, x') with x' strictly dominating x, margins >= 1e-3."""
    lo = np.round(rng.uniform(-span, span, size=(count, k)), 3)
    step = np.round(rng.uniform(0.0, 3.0, size=(count, k)), 3)
    step[np.arange(count), rng.integers(0, k, size=count)] += 0.001
    return lo, lo + step


def antichain_dataset(
    rng: np.random.Generator,
    k: int,
    n: int,
    value_span: float = 1e6,
    coordinate_sum: float = 0.0,
) -> UtilityDataset:
    """Pairwise incomparable samples: distinct points with equal coordinate sums.

    Dominance forces a strictly larger coordinate sum, so a level set of the
    sum function is an antichain; values can then be completely arbitrary.
    """
    assert k >= 2, "a one-dimensional antichain has at most one point"
    free = np.round(rng.uniform(-10.0, 10.0, size=(n, k - 1)), 3)
    last = coordinate_sum - free.sum(axis=1)
    pts = np.hstack([free, last[:, None]])
    vals = rng.uniform(-value_span, value_span, size=n)
    return UtilityDataset.from_points(pts, vals, dimension=k)


def random_dag(rng: np.random.Generator, max_elements: int = 50) -> FinitePoset:
    """Random finite poset; edge density spans sparse to fairly dense."""
    n = int(rng.integers(1, max_elements + 1))
    names = [f"e{i}" for i in range(n)]
    density = float(rng.uniform(0.0, 0.5))
    edges = []
    for j in range(n):
        for i in range(j):
            if rng.random() < density:
                edges.append((names[i], names[j]))  # names[j] > names[i]
    return FinitePoset(names, edges)


def poset_sample_values(
    rng: np.random.Generator,
    poset: FinitePoset,
    sample_elements: list[str],
    respect_classes: bool,
) -> list[float]:
    """Strictly increasing values on the sampled elements.

    Constructed by perturbing the poset's canonical representation: across
    different representation levels the order is preserved, so comparable
    samples always get strictly increasing values.  With
    ``respect_classes=False`` a small per-element jitter makes elements of
    the same class receive different values; with ``True`` the values are a
    function of the class alone.
    """
    rep = poset.utility_representation()
    levels = sorted(set(rep.values()))
    gap = min(
        [b - a for a, b in zip(levels, levels[1:])], default=1.0
    )
    scale = float(rng.uniform(5.0, 20.0))
    offset = float(rng.uniform(-10.0, 10.0))
    if respect_classes:
        target = np.sort(rng.uniform(-10.0, 10.0, size=len(levels)))
        lookup = {lvl: float(t) for lvl, t in zip(levels, target)}
        return [lookup[rep[e]] * scale + offset for e in sample_elements]
    jitter = rng.uniform(0.0, gap / 4.0, size=len(sample_elements))
    return [
        (rep[e] + float(j)) * scale + offset
        for e, j in zip(sample_elements, jitter)
    ]
