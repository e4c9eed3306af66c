"""Integer clock-skew compensation built on a Bresenham-style walk."""

from ._skewcomp import (
    Algorithm,
    CandidatePolicy,
    CandidateWindow,
    CompensationOutcome,
    ErrorStats,
    ExperimentConfig,
    FpFormat,
    MarginKind,
    Movement,
    QuotientOrder,
    RatioCase,
    RatioEstimate,
    ResultRow,
    ResultTable,
    RoundingMode,
    Slope,
    TdConvention,
    WindowParams,
    candidate_window,
    compensate,
    emit_csv,
    emit_markdown,
    exact_quotient,
    float_compensate,
    fp_quotient,
    generate_samples,
    reference_walk,
    run_table,
)

__all__ = [
    "Algorithm",
    "CandidatePolicy",
    "CandidateWindow",
    "CompensationOutcome",
    "ErrorStats",
    "ExperimentConfig",
    "FpFormat",
    "MarginKind",
    "Movement",
    "QuotientOrder",
    "RatioCase",
    "RatioEstimate",
    "ResultRow",
    "ResultTable",
    "RoundingMode",
    "Slope",
    "TdConvention",
    "WindowParams",
    "candidate_window",
    "compensate",
    "emit_csv",
    "emit_markdown",
    "exact_quotient",
    "float_compensate",
    "fp_quotient",
    "generate_samples",
    "reference_walk",
    "run_table",
]
