"""Strictly monotone extension of partial utility data.

Given finitely many (point, value) samples on R^k under componentwise
dominance -- or on a finite partial order -- this package decides whether
the samples extend to a strictly increasing function on the whole domain,
and evaluates one explicit such extension wherever you ask.
"""

from .baseutil import (
    ArctanSumUtility,
    BaseUtility,
    CustomUtility,
    InvalidBaseUtilityError,
    PosetDepthUtility,
)
from .bounds import (
    SECTORS,
    ZONES,
    BoundsResult,
    RegionLabel,
    classify,
    classify_sectors,
    classify_zone,
    inf_above,
    sup_below,
)
from .dataset import (
    ConflictingSampleError,
    NotExtendibleError,
    ProbeResult,
    SeparabilityWitness,
    UtilityDataset,
    Violation,
    load_dataset,
    probe_separability,
)
from .estimator import MonotoneExtensionRegressor
from .extension import FORMS, AgreementReport, EvalResult, Extension
from .order import (
    NEG_INF,
    POS_INF,
    as_point,
    ext_max,
    ext_min,
    ext_sub_const,
    is_extended_real,
    pareto_leq,
    pareto_lt,
)
from .poset import BOTTOM, TOP, CycleError, FinitePoset, ext_gt

__version__ = "0.1.0"

__all__ = [
    "ArctanSumUtility",
    "BaseUtility",
    "CustomUtility",
    "InvalidBaseUtilityError",
    "PosetDepthUtility",
    "SECTORS",
    "ZONES",
    "BoundsResult",
    "RegionLabel",
    "classify",
    "classify_sectors",
    "classify_zone",
    "inf_above",
    "sup_below",
    "ConflictingSampleError",
    "NotExtendibleError",
    "ProbeResult",
    "SeparabilityWitness",
    "UtilityDataset",
    "Violation",
    "load_dataset",
    "probe_separability",
    "MonotoneExtensionRegressor",
    "FORMS",
    "AgreementReport",
    "EvalResult",
    "Extension",
    "NEG_INF",
    "POS_INF",
    "as_point",
    "ext_max",
    "ext_min",
    "ext_sub_const",
    "is_extended_real",
    "pareto_leq",
    "pareto_lt",
    "BOTTOM",
    "TOP",
    "CycleError",
    "FinitePoset",
    "ext_gt",
    "__version__",
]
