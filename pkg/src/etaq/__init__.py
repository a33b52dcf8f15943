"""Fourier coefficients of eta-quotients, two independent ways.

The exact route expands the quotient as a truncated integer power series
(``exact_coefficients``); the analytic route evaluates a convergent
Bessel-function series term by term (``RademacherEvaluator`` and friends)
and can round it to the same integers.  Supporting machinery: exact
Dedekind sums, derived-constant tables, Kloosterman-like exponential sums,
hypothesis checking, and a numerical check of the eta transformation law.
"""

from .bessel import bessel_i
from .constants import (
    DerivedConstants,
    HypothesisReport,
    check_hypotheses,
    derive_constants,
)
from .dedekind import dedekind_sum, dedekind_sum_fast, reciprocity_rhs
from .kloosterman import (
    coprime_residues,
    kloosterman_like_sum,
    kloosterman_sum_complex,
    phase_table,
)
from .modular import MatrixSL2, eta_numeric, multiplier_epsilon, transform_check
from .precision import DEFAULT_PRECISION, tolerance
from .qseries import (
    CacheError,
    IntPowerSeries,
    euler_series,
    exact_coefficients,
    read_coefficient_cache,
    series_dilate,
    series_invert,
    series_mul,
    series_pow,
    write_coefficient_cache,
)
from .rademacher import (
    AsymptoticData,
    HypothesesNotSatisfiedError,
    NotConvergedError,
    RademacherEvaluator,
    RademacherTermTable,
    admissible_n,
    asymptotic_estimate,
    estimate_coefficient,
    partial_sum,
    rademacher_term,
    term_table,
)
from .shapes import FrameShape, ShapeError, format_shape, parse_shape

__version__ = "0.1.0"

__all__ = [
    "AsymptoticData",
    "CacheError",
    "DEFAULT_PRECISION",
    "DerivedConstants",
    "FrameShape",
    "HypothesesNotSatisfiedError",
    "HypothesisReport",
    "IntPowerSeries",
    "MatrixSL2",
    "NotConvergedError",
    "RademacherEvaluator",
    "RademacherTermTable",
    "ShapeError",
    "admissible_n",
    "asymptotic_estimate",
    "bessel_i",
    "check_hypotheses",
    "coprime_residues",
    "dedekind_sum",
    "dedekind_sum_fast",
    "derive_constants",
    "estimate_coefficient",
    "eta_numeric",
    "euler_series",
    "exact_coefficients",
    "format_shape",
    "kloosterman_like_sum",
    "kloosterman_sum_complex",
    "multiplier_epsilon",
    "parse_shape",
    "partial_sum",
    "phase_table",
    "rademacher_term",
    "read_coefficient_cache",
    "reciprocity_rhs",
    "series_dilate",
    "series_invert",
    "series_mul",
    "series_pow",
    "term_table",
    "tolerance",
    "transform_check",
    "write_coefficient_cache",
]
