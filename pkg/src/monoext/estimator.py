"""scikit-learn style wrapper around the vector-mode extension.

``fit`` ingests (X, y) as the sample set, validates that a strictly
monotone extension exists (raising the usual ``ValueError`` family if not),
and ``predict`` evaluates the extension at new points.  The estimator is
stateless apart from the fitted attributes and composes with the usual
scikit-learn tooling (``get_params`` / ``set_params`` / ``clone``).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .baseutil import ArctanSumUtility, BaseUtility, CustomUtility
from .dataset import UtilityDataset
from .extension import FORMS, EvalResult, Extension

__all__ = ["MonotoneExtensionRegressor"]


class MonotoneExtensionRegressor(RegressorMixin, BaseEstimator):
    """Strictly monotone interpolation of (X, y) under componentwise dominance.

    Parameters
    ----------
    alpha, beta : float
        Open interval carrying the base utility; values predicted outside
        the sample range drift toward this interval.
    base : "arctan", callable or BaseUtility
        The base utility.  A callable is wrapped (and sample-checked) as a
        custom utility over the fitted dimension.
    form : str
        One of ``monoext.extension.FORMS``; all forms agree up to rounding,
        so this is mostly useful for diagnostics.

    Attributes
    ----------
    dataset_ : UtilityDataset
        The deduplicated, validated training samples.
    extension_ : Extension
        The fitted extension used by :meth:`predict`.
    """

    def __init__(
        self,
        alpha: float = 0.0,
        beta: float = 1.0,
        base: str | BaseUtility = "arctan",
        form: str = "canonical",
    ):
        self.alpha = alpha
        self.beta = beta
        self.base = base
        self.form = form

    def _resolve_base(self, dimension: int) -> BaseUtility:
        if isinstance(self.base, BaseUtility):
            return self.base
        if self.base == "arctan":
            return ArctanSumUtility(self.alpha, self.beta)
        if callable(self.base):
            return CustomUtility(self.base, self.alpha, self.beta, dimension=dimension)
        raise ValueError(f"base must be 'arctan', a callable or a BaseUtility, got {self.base!r}")

    def fit(self, X, y) -> MonotoneExtensionRegressor:
        X, y = check_X_y(X, y, y_numeric=True)
        if self.form not in FORMS:
            raise ValueError(f"form must be one of {FORMS}, got {self.form!r}")
        dataset = UtilityDataset.from_points(X, y, dimension=X.shape[1])
        self.dataset_ = dataset
        self.extension_ = Extension(dataset, self._resolve_base(X.shape[1]), self.form)
        self.n_features_in_ = X.shape[1]
        return self

    def _checked(self, X) -> np.ndarray:
        check_is_fitted(self, "extension_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, but the regressor was fitted with "
                f"{self.n_features_in_}"
            )
        return X

    def predict(self, X) -> np.ndarray:
        """Extension values at the rows of X, in input order."""
        X = self._checked(X)
        return self.extension_.values(X)

    def evaluate(self, X) -> list[EvalResult]:
        """Full per-query context: value, bounds, region and base value."""
        X = self._checked(X)
        return self.extension_.evaluate_batch(X)
