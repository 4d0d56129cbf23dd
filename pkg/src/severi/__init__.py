"""Exact-arithmetic counting of nodal plane curves.

Severi degrees via the Caporaso-Harris recursion, node polynomials and
their thresholds, the Bell/log structure of the counts, and numeric
extraction of the two unknown series of the Gottsche-Yau-Zaslow
product formula.  Everything is exact: integers are unbounded and
coefficients are rationals; no floating point anywhere.
"""

from .engine import (
    CacheCorruption,
    CacheStore,
    ParseError,
    VersionMismatch,
    cache_load,
    cache_save,
    default_cache,
    relative_severi,
    severi_degree,
    severi_table,
)
from .forms import FormCatalog, b3_series, b4_series, delta_series, form_catalog, sigma1, u_series
from .gyz import (
    BSeriesSolution,
    DegreeTooSmall,
    InconsistentSystem,
    NonIntegralPrediction,
    PlaneSeries,
    extract_b_series,
    gyz_predict,
    plane_generating_series,
)
from .nodepoly import (
    DegreeCheckFailed,
    InvalidInvariants,
    Invariants,
    LogForm,
    NodePolynomial,
    NotQuadratic,
    ThresholdResult,
    ThresholdWitness,
    bell_polynomial,
    evaluate,
    fit_node_polynomial,
    interpolate,
    log_forms,
    plane_invariants,
    reconstruct_from_log_forms,
    threshold,
    threshold_report,
)
from .series import (
    ConstantTermNotOne,
    NonzeroConstantTerm,
    NotReversible,
    PositiveValuationRequired,
    RatSeries,
    SeriesError,
    ZeroConstantTerm,
)
from .tangency import (
    ChState,
    InvalidState,
    TangencySeq,
    canonical,
    point_count,
    seq_binomial,
    seq_from_text,
    seq_to_text,
    seq_weighted_power,
    size,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "BSeriesSolution",
    "CacheCorruption",
    "CacheStore",
    "ChState",
    "ConstantTermNotOne",
    "DegreeCheckFailed",
    "DegreeTooSmall",
    "FormCatalog",
    "InconsistentSystem",
    "InvalidInvariants",
    "InvalidState",
    "Invariants",
    "LogForm",
    "NodePolynomial",
    "NonIntegralPrediction",
    "NonzeroConstantTerm",
    "NotQuadratic",
    "NotReversible",
    "ParseError",
    "PlaneSeries",
    "PositiveValuationRequired",
    "RatSeries",
    "SeriesError",
    "TangencySeq",
    "ThresholdResult",
    "ThresholdWitness",
    "VersionMismatch",
    "ZeroConstantTerm",
    "b3_series",
    "b4_series",
    "bell_polynomial",
    "cache_load",
    "cache_save",
    "canonical",
    "default_cache",
    "delta_series",
    "evaluate",
    "extract_b_series",
    "fit_node_polynomial",
    "form_catalog",
    "gyz_predict",
    "interpolate",
    "log_forms",
    "plane_generating_series",
    "plane_invariants",
    "point_count",
    "reconstruct_from_log_forms",
    "relative_severi",
    "seq_binomial",
    "seq_from_text",
    "seq_to_text",
    "seq_weighted_power",
    "severi_degree",
    "severi_table",
    "sigma1",
    "size",
    "threshold",
    "threshold_report",
    "u_series",
    "weight",
]
