"""Base utilities: bounded, strictly order-increasing carrier functions.

Every base utility maps domain points into the open interval (alpha, beta)
and strictly increases along the domain order.  The extension machinery
blends it with the sample-induced bounds; outside the reach of any sample
the extension falls back to the base utility unchanged.

``value`` returns u(x) in (alpha, beta); ``normalized`` rescales it to
(0, 1) as (u - alpha) / (beta - alpha).
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections.abc import Callable

import numpy as np

from .order import as_point
from .poset import FinitePoset

__all__ = [
    "InvalidBaseUtilityError",
    "BaseUtility",
    "ArctanSumUtility",
    "PosetDepthUtility",
    "CustomUtility",
]


class InvalidBaseUtilityError(ValueError):
    """A base utility broke its contract (range, finiteness or monotonicity)."""


class BaseUtility(ABC):
    """Common checked interface; subclasses fix the domain and the formula."""

    #: "vector" or "poset"; must match the dataset the utility is used with.
    domain: str

    def __init__(self, alpha: float = 0.0, beta: float = 1.0):
        alpha, beta = float(alpha), float(beta)
        if not (math.isfinite(alpha) and math.isfinite(beta)):
            raise ValueError("alpha and beta must be finite")
        if not alpha < beta:
            raise ValueError(f"alpha must be strictly below beta, got {alpha} >= {beta}")
        self.alpha = alpha
        self.beta = beta

    @abstractmethod
    def batch_values(self, queries: np.ndarray) -> np.ndarray:
        """u over normalized queries (vector: (q, k) array; poset: index array)."""

    def batch_normalized(self, queries: np.ndarray) -> np.ndarray:
        return (self.batch_values(queries) - self.alpha) / (self.beta - self.alpha)

    def _normalize_one(self, x) -> np.ndarray:
        raise NotImplementedError

    def value(self, x) -> float:
        """u(x) for a single raw domain point."""
        return float(self.batch_values(self._normalize_one(x))[0])

    def normalized(self, x) -> float:
        """(u(x) - alpha) / (beta - alpha), strictly inside (0, 1)."""
        return (self.value(x) - self.alpha) / (self.beta - self.alpha)


class ArctanSumUtility(BaseUtility):
    """u(x) = (beta - alpha) * (atan(sum x_i) + pi/2) / pi + alpha.

    Strictly increasing in every coordinate and confined to (alpha, beta).
    The arctangent saturates in float arithmetic once |sum x_i| exceeds
    roughly 1e16, so strictness is only meaningful at sane magnitudes.
    """

    domain = "vector"

    def batch_values(self, queries: np.ndarray) -> np.ndarray:
        s = np.asarray(queries, dtype=np.float64).sum(axis=1)
        unit = (np.arctan(s) + math.pi / 2.0) / math.pi
        return (self.beta - self.alpha) * unit + self.alpha

    def _normalize_one(self, x) -> np.ndarray:
        return as_point(x).reshape(1, -1)


class PosetDepthUtility(BaseUtility):
    """Depth-based utility on a finite poset, affinely mapped into (alpha, beta).

    Uses :meth:`FinitePoset.utility_representation`, which is strictly
    increasing along the order and constant on classes of elements with
    identical comparability rows.
    """

    domain = "poset"

    def __init__(self, poset: FinitePoset, alpha: float = 0.0, beta: float = 1.0):
        super().__init__(alpha, beta)
        self.poset = poset
        rep = poset.utility_representation()
        self._unit = np.array([rep[e] for e in poset.elements], dtype=np.float64)
        self._unit.flags.writeable = False

    def batch_values(self, queries: np.ndarray) -> np.ndarray:
        return (self.beta - self.alpha) * self._unit[queries] + self.alpha

    def _normalize_one(self, x) -> np.ndarray:
        return np.array([self.poset.index(x)], dtype=np.int64)


class CustomUtility(BaseUtility):
    """Wrap a user-supplied callable as a base utility.

    Monotonicity of a black box cannot be proven, so the wrapper samples it:
    random dominating pairs in vector mode (``check_pairs`` of them inside
    ``check_box``), every comparable element pair in poset mode.  Any sampled
    violation of strict increase, or any value outside (alpha, beta) or NaN
    -- during the check or later, at evaluation time -- raises
    :class:`InvalidBaseUtilityError`.
    """

    def __init__(
        self,
        func: Callable,
        alpha: float = 0.0,
        beta: float = 1.0,
        *,
        dimension: int | None = None,
        poset: FinitePoset | None = None,
        check_pairs: int = 300,
        check_box: tuple[float, float] = (-50.0, 50.0),
        seed: int = 0,
    ):
        super().__init__(alpha, beta)
        if (dimension is None) == (poset is None):
            raise ValueError("exactly one of dimension/poset must be given")
        self.func = func
        self.poset = poset
        self.dimension = dimension
        self.domain = "vector" if poset is None else "poset"
        if poset is None:
            self._check_vector(check_pairs, check_box, seed)
        else:
            self._check_poset()

    def batch_values(self, queries: np.ndarray) -> np.ndarray:
        if self.domain == "vector":
            out = np.array([self.func(np.asarray(row)) for row in queries], dtype=np.float64)
        else:
            names = self.poset.elements
            out = np.array([self.func(names[i]) for i in queries], dtype=np.float64)
        bad = ~(np.isfinite(out) & (out > self.alpha) & (out < self.beta))
        if bad.any():
            raise InvalidBaseUtilityError(
                f"custom utility returned {out[bad][0]!r}, "
                f"outside the open interval ({self.alpha}, {self.beta})"
            )
        return out

    def _normalize_one(self, x) -> np.ndarray:
        if self.domain == "vector":
            return as_point(x, self.dimension).reshape(1, -1)
        return np.array([self.poset.index(x)], dtype=np.int64)

    def _check_vector(self, pairs: int, box: tuple[float, float], seed: int) -> None:
        rng = np.random.default_rng(seed)
        lo, hi = box
        x = rng.uniform(lo, hi, size=(pairs, self.dimension))
        step = rng.uniform(0.0, (hi - lo) / 4.0, size=x.shape)
        step[np.arange(pairs), rng.integers(0, self.dimension, size=pairs)] += 1e-3
        ux = self.batch_values(x)
        ux_hi = self.batch_values(x + step)
        if not (ux_hi > ux).all():
            i = int(np.argmax(~(ux_hi > ux)))
            raise InvalidBaseUtilityError(
                f"custom utility is not strictly increasing: "
                f"u{tuple(x[i])} = {ux[i]} but u{tuple(x[i] + step[i])} = {ux_hi[i]}"
            )

    def _check_poset(self) -> None:
        all_idx = np.arange(len(self.poset), dtype=np.int64)
        u = self.batch_values(all_idx)
        gt = self.poset.gt_matrix
        diff = u[:, None] - u[None, :]
        if not (diff[gt] > 0.0).all():
            hi, lo = map(int, np.argwhere(gt & ~(diff > 0.0))[0])
            names = self.poset.elements
            raise InvalidBaseUtilityError(
                f"custom utility is not strictly increasing: "
                f"{names[hi]!r} > {names[lo]!r} but u = {u[hi]} vs {u[lo]}"
            )
