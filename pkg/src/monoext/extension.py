"""Strictly monotone extension of a valid dataset to its whole domain.

Given a dataset that passes ``is_separably_increasing`` and a base utility
``u`` with range (alpha, beta), the extension blends u with the bounds
``a = sup_below`` and ``b = inf_above`` so that the result

* restricts to the sample values exactly,
* is strictly increasing on the whole domain, and
* stays finite everywhere.

Five algebraically equivalent evaluation forms are provided.  Writing
``u1 = (u - alpha) / (beta - alpha)``:

canonical
    f = max(a, min(b, beta) - beta + alpha) * (1 - u1)
      + min(b, max(a, alpha) - alpha + beta) * u1.
    A single branch-free expression; the min/max against the finite interval
    endpoints absorb infinite bounds before any arithmetic can produce an
    indeterminate form.  With both bounds infinite it collapses to
    alpha * (1 - u1) + beta * u1 == u, an identity the tests check rather
    than a special case in the code.
relative
    The same blend rearranged around u itself:
    f = [max(a - alpha, min(b - beta, 0)) * (beta - u)
       + min(b - beta, max(a - alpha, 0)) * (u - alpha)] / (beta - alpha) + u.
zonewise
    Dispatch on the P/A/L/U/N zone: stored value on P, min(b - beta, 0) + u
    on L, max(a - alpha, 0) + u on U, u on N, and the relative expression on
    A (the only zone with both bounds finite).
sectorwise
    Dispatch on the S1..S4 sectors: a * (1 - u1) + b * u1 on S1, b + u - beta
    on S2, a + u - alpha on S3, u on S4.  Sectors overlap on their borders;
    every applicable sector is evaluated and their agreement is asserted.
antichain
    Shortcut valid when the samples are pairwise incomparable (zone A is
    then empty): stored value on P, min(b, beta) - beta + u on L,
    max(a, alpha) + u - alpha on U, u on N.

Whatever the configured form, a query that exactly equals a sample point
short-circuits to the stored value before any formula runs, so the
restriction property holds bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .baseutil import ArctanSumUtility, BaseUtility, PosetDepthUtility
from .bounds import SECTORS, RegionLabel, bounds_batch, sector_matrix
from .dataset import NotExtendibleError, UtilityDataset

__all__ = ["FORMS", "EvalResult", "AgreementReport", "Extension"]

FORMS = ("canonical", "relative", "zonewise", "sectorwise", "antichain")


@dataclass(frozen=True)
class EvalResult:
    """One evaluated query: the extension value, its context and provenance."""

    value: float
    lower: float
    upper: float
    region: RegionLabel
    base_value: float


@dataclass(frozen=True)
class AgreementReport:
    """Cross-form comparison over a query batch."""

    forms: tuple[str, ...]
    queries_checked: int
    max_discrepancy: float
    worst_index: int
    worst_values: dict[str, float] = field(default_factory=dict)
    tolerance: float = 1e-9

    @property
    def within_tolerance(self) -> bool:
        return self.max_discrepancy <= self.tolerance


class Extension:
    """A configured, validated extension ready to evaluate queries.

    Construction fails with :class:`NotExtendibleError` (carrying a witness
    pair x < x' whose bounds cross) when the dataset does not admit any
    strictly monotone extension, with ``ValueError`` when the base utility
    does not match the dataset domain or its interval, and the ``antichain``
    form is refused unless the samples are pairwise incomparable.
    """

    def __init__(
        self,
        dataset: UtilityDataset,
        base: BaseUtility | None = None,
        form: str = "canonical",
        *,
        agreement_tol: float = 1e-9,
    ):
        if form not in FORMS:
            raise ValueError(f"unknown form {form!r}, expected one of {FORMS}")
        ok, witness = dataset.is_separably_increasing()
        if not ok:
            raise NotExtendibleError(
                "no strictly monotone extension exists: "
                f"{witness.lower!r} < {witness.upper!r} but the induced bounds give "
                f"inf-above {witness.inf_above_upper!r} <= sup-below {witness.sup_below_lower!r}",
                witness,
            )
        if base is None:
            base = (
                ArctanSumUtility()
                if dataset.is_vector
                else PosetDepthUtility(dataset.poset)
            )
        expected = "vector" if dataset.is_vector else "poset"
        if base.domain != expected:
            raise ValueError(f"base utility domain {base.domain!r} does not fit {expected!r} data")
        if not dataset.is_vector and getattr(base, "poset", None) is not dataset.poset:
            raise ValueError("base utility is bound to a different poset than the dataset")
        if form == "antichain" and not dataset.is_pareto_set():
            raise ValueError("the antichain form requires pairwise incomparable samples")
        self.dataset = dataset
        self.base = base
        self.form = form
        self.agreement_tol = float(agreement_tol)

    @property
    def alpha(self) -> float:
        return self.base.alpha

    @property
    def beta(self) -> float:
        return self.base.beta

    # -- evaluation -----------------------------------------------------------

    def values(self, queries, form: str | None = None) -> np.ndarray:
        """Extension values for a batch of raw queries (in input order)."""
        f, *_ = self._evaluate_arrays(self.dataset.normalize_queries(queries), form)
        return f

    def value(self, x, form: str | None = None) -> float:
        return float(self.values(self._one(x), form)[0])

    def evaluate(self, x) -> EvalResult:
        """Evaluate one query with full context (bounds, region, base value)."""
        return self.evaluate_batch(self._one(x))[0]

    def evaluate_batch(self, queries) -> list[EvalResult]:
        normalized = self.dataset.normalize_queries(queries)
        f, lower, upper, zone, sectors, u = self._evaluate_arrays(normalized, None)
        out = []
        for i in range(f.size):
            label = RegionLabel(
                str(zone[i]),
                tuple(name for name, hit in zip(SECTORS, sectors[i]) if hit),
            )
            out.append(EvalResult(float(f[i]), float(lower[i]), float(upper[i]), label, float(u[i])))
        return out

    def _one(self, x):
        if self.dataset.is_vector:
            return np.atleast_2d(np.asarray(x, dtype=np.float64))
        return [x]

    def _evaluate_arrays(self, normalized: np.ndarray, form: str | None):
        form = form or self.form
        if form not in FORMS:
            raise ValueError(f"unknown form {form!r}, expected one of {FORMS}")
        lower, upper, member, zone = bounds_batch(self.dataset, normalized)
        u = self.base.batch_values(normalized)
        u1 = (u - self.alpha) / (self.beta - self.alpha)
        sectors = sector_matrix(lower, upper, self.alpha, self.beta)

        if form == "canonical":
            f = self._canonical(lower, upper, u1)
        elif form == "relative":
            f = self._relative(lower, upper, u)
        elif form == "zonewise":
            f = self._zonewise(lower, upper, u, zone)
        elif form == "sectorwise":
            f = self._sectorwise(lower, upper, u, u1, sectors)
        else:
            f = self._antichain(lower, upper, u, zone)

        hit = member >= 0
        f[hit] = self.dataset.values[member[hit]]
        if not np.isfinite(f).all():
            raise ArithmeticError("extension produced a non-finite value")
        return f, lower, upper, zone, sectors, u

    # -- the form formulas ------------------------------------------------------

    def _canonical(self, lower, upper, u1):
        alpha, beta = self.alpha, self.beta
        lo_part = np.maximum(lower, np.minimum(upper, beta) - beta + alpha)
        hi_part = np.minimum(upper, np.maximum(lower, alpha) - alpha + beta)
        return lo_part * (1.0 - u1) + hi_part * u1

    def _relative(self, lower, upper, u):
        alpha, beta = self.alpha, self.beta
        lo_gap = np.maximum(lower - alpha, np.minimum(upper - beta, 0.0))
        hi_gap = np.minimum(upper - beta, np.maximum(lower - alpha, 0.0))
        return (lo_gap * (beta - u) + hi_gap * (u - alpha)) / (beta - alpha) + u

    def _zonewise(self, lower, upper, u, zone):
        alpha, beta = self.alpha, self.beta
        f = u.copy()  # the N zone, and a placeholder for P (overwritten later)
        m = zone == "L"
        f[m] = np.minimum(upper[m] - beta, 0.0) + u[m]
        m = zone == "U"
        f[m] = np.maximum(lower[m] - alpha, 0.0) + u[m]
        m = zone == "A"
        f[m] = self._relative(lower[m], upper[m], u[m])
        return f

    def _sectorwise(self, lower, upper, u, u1, sectors):
        alpha, beta = self.alpha, self.beta
        formulas = (
            lambda a, b, uu, n1: a * (1.0 - n1) + b * n1,
            lambda a, b, uu, n1: b + uu - beta,
            lambda a, b, uu, n1: a + uu - alpha,
            lambda a, b, uu, n1: uu,
        )
        q = lower.size
        f = np.empty(q, dtype=np.float64)
        chosen = np.full(q, False)
        vmin = np.full(q, np.inf)
        vmax = np.full(q, -np.inf)
        for j, formula in enumerate(formulas):
            idx = np.nonzero(sectors[:, j])[0]
            if idx.size == 0:
                continue
            vj = formula(lower[idx], upper[idx], u[idx], u1[idx])
            fresh = ~chosen[idx]
            f[idx[fresh]] = vj[fresh]
            chosen[idx[fresh]] = True
            vmin[idx] = np.minimum(vmin[idx], vj)
            vmax[idx] = np.maximum(vmax[idx], vj)
        spread = vmax - vmin
        if (spread > self.agreement_tol).any():
            worst = int(np.argmax(spread))
            raise ArithmeticError(
                f"sector formulas disagree by {spread[worst]:.3e} on a border query "
                f"(tolerance {self.agreement_tol:.3e})"
            )
        return f

    def _antichain(self, lower, upper, u, zone):
        alpha, beta = self.alpha, self.beta
        if (zone == "A").any():
            raise ArithmeticError("zone A encountered although the samples form an antichain")
        f = u.copy()  # N zone and P placeholder
        m = zone == "L"
        f[m] = np.minimum(upper[m], beta) - beta + u[m]
        m = zone == "U"
        f[m] = np.maximum(lower[m], alpha) + u[m] - alpha
        return f

    # -- diagnostics ------------------------------------------------------------

    def agreement_report(self, queries, tolerance: float | None = None) -> AgreementReport:
        """Evaluate every applicable form on ``queries`` and compare them.

        The applicable forms are the four general ones, plus ``antichain``
        when the samples are pairwise incomparable.  Returns the maximum
        absolute pairwise discrepancy and where it happened.
        """
        tolerance = self.agreement_tol if tolerance is None else float(tolerance)
        forms = list(FORMS[:4])
        if self.dataset.is_pareto_set():
            forms.append("antichain")
        normalized = self.dataset.normalize_queries(queries)
        table = np.stack(
            [self._evaluate_arrays(normalized, name)[0] for name in forms], axis=0
        )
        if table.shape[1] == 0:
            return AgreementReport(tuple(forms), 0, 0.0, -1, {}, tolerance)
        spread = table.max(axis=0) - table.min(axis=0)
        worst = int(np.argmax(spread))
        return AgreementReport(
            forms=tuple(forms),
            queries_checked=int(table.shape[1]),
            max_discrepancy=float(spread[worst]),
            worst_index=worst,
            worst_values={name: float(table[i, worst]) for i, name in enumerate(forms)},
            tolerance=tolerance,
        )
