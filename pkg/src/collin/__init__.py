"""Multicollinearity diagnostics with sample-size adjusted inflation factors.

The package measures how much of an apparent collinearity problem is real
linear dependence and how much is an artifact of fitting many predictors on
few observations. It pairs the classic variance inflation factor with a
weighted variant a(n, k) * VIF, carries the same weight into the individual
significance tests, and drives stepwise selection with either decision rule.
A seeded simulation harness reproduces the threshold-sweep experiments that
motivate the adjustment.
"""

from .dataset import Dataset
from .dataio import load_csv
from .diagnostics import (
    AdjustmentFactors,
    CollinearityReport,
    adjustment_factors,
    avif_all,
    condition_number,
    correlation_det,
    diagnose,
    vif_all,
)
from .errors import (
    CollinError,
    ConstantColumn,
    DegenerateResponse,
    DimensionMismatch,
    EmptyDesign,
    ExactCollinearity,
    InvalidDesign,
    InvalidDims,
    InvalidGamma,
    InvalidProbability,
    MissingResponse,
    MixedResponse,
    NonNumericCell,
    ParseError,
    RankDeficient,
    TooFewRows,
)
from .inference import DecisionRecord, Option, decide, decision_table, t_quantile
from .ols import CoefficientTest, FitStatistics, OlsFit, fit_intercept_only, fit_ols, fit_statistics
from .report import ReportDocument, build_report
from .selection import (
    ComparisonRow,
    ModelComparison,
    Rule,
    SelectionStep,
    SelectionTrace,
    backward_eliminate,
    compare_models,
    forward_select,
)
from .simulation import (
    Design,
    ExampleData,
    ExperimentConfig,
    ExperimentResult,
    Measure,
    find_threshold_k,
    gen_example_dataset,
    gen_gamma_correlated,
    gen_independent_normals,
    run_figure_experiment,
    series_rows,
    split_seed,
)

__version__ = "0.1.0"

__all__ = [
    "AdjustmentFactors",
    "CoefficientTest",
    "CollinError",
    "CollinearityReport",
    "ComparisonRow",
    "ConstantColumn",
    "Dataset",
    "DecisionRecord",
    "DegenerateResponse",
    "Design",
    "DimensionMismatch",
    "EmptyDesign",
    "ExactCollinearity",
    "ExampleData",
    "ExperimentConfig",
    "ExperimentResult",
    "FitStatistics",
    "InvalidDesign",
    "InvalidDims",
    "InvalidGamma",
    "InvalidProbability",
    "Measure",
    "MissingResponse",
    "MixedResponse",
    "ModelComparison",
    "NonNumericCell",
    "OlsFit",
    "Option",
    "ParseError",
    "RankDeficient",
    "ReportDocument",
    "Rule",
    "SelectionStep",
    "SelectionTrace",
    "TooFewRows",
    "adjustment_factors",
    "avif_all",
    "backward_eliminate",
    "build_report",
    "compare_models",
    "condition_number",
    "correlation_det",
    "decide",
    "decision_table",
    "diagnose",
    "find_threshold_k",
    "fit_intercept_only",
    "fit_ols",
    "fit_statistics",
    "forward_select",
    "gen_example_dataset",
    "gen_gamma_correlated",
    "gen_independent_normals",
    "load_csv",
    "run_figure_experiment",
    "series_rows",
    "split_seed",
    "t_quantile",
    "vif_all",
]
