"""Finite strict partial orders over opaque string elements.

A :class:`FinitePoset` is built from elements and covering edges
``(lo, hi)`` meaning ``hi > lo``.  The strict relation is stored as a
transitively closed boolean matrix; construction rejects duplicate
elements, unknown edge endpoints and cycles.

Alongside the order itself this module provides the two ingredients the
extension machinery needs on posets:

* ``approx_classes`` -- the partition of the ground set by "identical
  incomparability rows": two elements belong to the same class iff they are
  incomparable to exactly the same elements (themselves included).  Elements
  of one class necessarily share their strict up-sets and down-sets.
* ``utility_representation`` -- a canonical map into (0, 1) that is strictly
  order-preserving and constant on each class, built from longest-path depth
  on the class quotient: a class at depth ``d`` out of maximum depth ``D``
  gets the value ``(d + 1) / (D + 2)``.

``BOTTOM`` and ``TOP`` are sentinels for the order extended with a least and
a greatest element; ``ext_gt`` compares in that extended order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "CycleError",
    "FinitePoset",
    "BOTTOM",
    "TOP",
    "ext_gt",
    "MAX_ELEMENTS_DEFAULT",
]

MAX_ELEMENTS_DEFAULT = 10_000


class CycleError(ValueError):
    """The edge list implies x > x for some element."""


class _Extreme:
    """Sentinel adjoined below (BOTTOM) or above (TOP) every element."""

    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


BOTTOM = _Extreme("BOTTOM")
TOP = _Extreme("TOP")


def _transitive_closure(adj: np.ndarray) -> np.ndarray:
    """Boolean transitive closure by repeated squaring.

    Uses float32 matmul as a path counter; counts stay below 2**24 for any
    supported size, so the 0/1 threshold is exact.
    """
    n = adj.shape[0]
    reach = adj.astype(np.float32)
    steps = max(1, int(np.ceil(np.log2(n)))) if n > 1 else 1
    for _ in range(steps):
        reach = np.minimum(reach + reach @ reach, 1.0)
    return reach > 0.0


class FinitePoset:
    """A finite, irreflexive, transitive relation ``>`` over named elements.

    Parameters
    ----------
    elements : sequence of str
        Distinct element names; their order fixes the matrix indexing.
    edges : iterable of (str, str)
        Pairs ``(lo, hi)`` asserting ``hi > lo``.  The stored relation is
        the transitive closure of these edges.
    max_elements : int
        Guard against accidentally huge instances (closure is O(n^3)).
    """

    def __init__(
        self,
        elements: Sequence[str],
        edges: Iterable[tuple[str, str]] = (),
        max_elements: int = MAX_ELEMENTS_DEFAULT,
    ):
        elements = tuple(elements)
        if len(elements) == 0:
            raise ValueError("a poset needs at least one element")
        if len(elements) > max_elements:
            raise ValueError(
                f"{len(elements)} elements exceeds the configured limit of {max_elements}"
            )
        index: dict[str, int] = {}
        for name in elements:
            if not isinstance(name, str):
                raise TypeError(f"element names must be strings, got {name!r}")
            if name in index:
                raise ValueError(f"duplicate element: {name!r}")
            index[name] = len(index)

        n = len(elements)
        adj = np.zeros((n, n), dtype=bool)
        for lo, hi in edges:
            if lo not in index:
                raise KeyError(f"unknown edge endpoint: {lo!r}")
            if hi not in index:
                raise KeyError(f"unknown edge endpoint: {hi!r}")
            adj[index[hi], index[lo]] = True  # hi > lo

        gt = _transitive_closure(adj)
        diag = np.diagonal(gt)
        if diag.any():
            culprit = elements[int(np.argmax(diag))]
            raise CycleError(f"edges create a cycle through {culprit!r}")

        gt.flags.writeable = False
        self._elements = elements
        self._index = index
        self._gt = gt

    # -- basic queries -----------------------------------------------------

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    @property
    def gt_matrix(self) -> np.ndarray:
        """Read-only boolean matrix; ``gt_matrix[i, j]`` iff element i > element j."""
        return self._gt

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements, {int(self._gt.sum())} strict pairs)"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown element: {name!r}") from None

    def gt(self, x: str, y: str) -> bool:
        """True iff ``x > y`` in the strict order."""
        return bool(self._gt[self.index(x), self.index(y)])

    def leq(self, x: str, y: str) -> bool:
        """Reflexive closure of the strict order: ``x == y`` or ``y > x``."""
        ix, iy = self.index(x), self.index(y)
        return ix == iy or bool(self._gt[iy, ix])

    def incomparable(self, x: str, y: str) -> bool:
        """True iff neither ``x > y`` nor ``y > x``; every element is incomparable to itself."""
        ix, iy = self.index(x), self.index(y)
        return not (self._gt[ix, iy] or self._gt[iy, ix])

    def comparable_pairs(self) -> Iterator[tuple[str, str]]:
        """Yield every strictly comparable pair as ``(lower, upper)``."""
        upper, lower = np.nonzero(self._gt)
        for hi, lo in zip(upper, lower):
            yield self._elements[lo], self._elements[hi]

    # -- structure ----------------------------------------------------------

    def approx_classes(self) -> tuple[tuple[str, ...], ...]:
        """Partition elements by identical incomparability rows.

        Two elements x, y land in the same class iff for every element z
        (x and y included) x is incomparable to z exactly when y is.  Classes
        are reported in order of their first member.
        """
        comp = self._gt | self._gt.T
        groups: dict[bytes, list[str]] = {}
        for i, name in enumerate(self._elements):
            groups.setdefault(comp[i].tobytes(), []).append(name)
        return tuple(tuple(members) for members in groups.values())

    def _class_depths(self) -> tuple[tuple[tuple[str, ...], ...], np.ndarray]:
        """Longest-path depth of each approx class in the class quotient."""
        classes = self.approx_classes()
        reps = np.array([self.index(members[0]) for members in classes])
        cgt = self._gt[np.ix_(reps, reps)]
        depth = np.zeros(len(classes), dtype=np.int64)
        # Down-set size strictly increases along >, so it is a topological key.
        for ci in np.argsort(cgt.sum(axis=1), kind="stable"):
            below = np.nonzero(cgt[ci])[0]
            if below.size:
                depth[ci] = depth[below].max() + 1
        return classes, depth

    def utility_representation(self) -> dict[str, float]:
        """Map every element to ``(depth + 1) / (max_depth + 2)``.

        The result lies strictly inside (0, 1), is strictly increasing along
        ``>`` and is constant on each approx class.  Those three facts are
        re-checked exhaustively before returning.
        """
        classes, depth = self._class_depths()
        top = int(depth.max())
        values = np.empty(len(self), dtype=np.float64)
        for members, d in zip(classes, depth):
            for name in members:
                values[self.index(name)] = (float(d) + 1.0) / (float(top) + 2.0)

        if not ((values > 0.0).all() and (values < 1.0).all()):
            raise RuntimeError("representation values escaped (0, 1)")
        diff = values[:, None] - values[None, :]
        if not (diff[self._gt] > 0.0).all():
            raise RuntimeError("representation failed a strict order check")
        return {name: float(values[self.index(name)]) for name in self._elements}


def ext_gt(poset: FinitePoset, x: str | _Extreme, y: str | _Extreme) -> bool:
    """Strict comparison in the order extended with BOTTOM and TOP.

    BOTTOM sits strictly below every element and TOP strictly above every
    element (and above BOTTOM); the sentinels never compare to themselves.
    """
    if x is TOP:
        return y is not TOP
    if y is TOP or x is BOTTOM:
        return False
    if y is BOTTOM:
        return True
    return poset.gt(x, y)
