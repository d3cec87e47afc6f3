"""Predictive-value geometry of binary screening tests.

A screening test with sensitivity ``a`` and specificity ``b`` maps disease
prevalence ``phi`` to positive predictive value through

    rho(phi) = a * phi / (a * phi + (1 - b) * (1 - phi)),

a rectangular-hyperbola arc through (0, 0) and (1, 1) inside the unit
square.  This package computes the curve's exact geometry — the prevalence
threshold where ``rho`` crosses the falling diagonal, the origin-chord
angle, chord slopes and the positive likelihood ratio they encode, and the
area under the curve — plus a counter-based synthetic-cohort simulator for
empirical cross-checks, CSV/JSON/SVG emitters, and a command-line front
end.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .analysis import (
    ComparisonReport,
    MetricOrdering,
    TestReport,
    auc_closed_form,
    auc_quadrature,
    build_test_report,
    compare_tests,
    fts_limit_sweep,
)
from .catalog import CatalogEntry, emit_catalog, parse_catalog
from .cohort import (
    CohortResult,
    EmpiricalPoint,
    empirical_ppv_curve,
    simulate_cohort,
)
from .core import CurvePoint, ScreeningTest, curve_samples, epsilon, ppv
from .emit import emit_curve_csv, emit_report, render_json
from .errors import (
    AbsentEstimateError,
    ComparatorInconsistencyError,
    DegenerateAngleError,
    DegenerateTestError,
    DomainError,
    EpsilonOneError,
    IndeterminateError,
    InfiniteLRError,
    NonConvergenceError,
    ParameterError,
    ParseError,
    ScreeningError,
    ZeroLRError,
)
from .geometry import (
    BetaGeometry,
    ChordLine,
    ChordPair,
    ThresholdPoint,
    beta_geometry,
    chords_at,
    endpoint_chord_line,
    lr_positive_direct,
    lr_positive_from_beta,
    lr_positive_from_chords,
    prevalence_threshold,
    threshold_equivalence_check,
)
from .svgplot import PlotSpec, render_screening_plane

__all__ = [
    "__version__",
    # core
    "ScreeningTest",
    "CurvePoint",
    "ppv",
    "epsilon",
    "curve_samples",
    # geometry
    "ThresholdPoint",
    "BetaGeometry",
    "ChordPair",
    "ChordLine",
    "prevalence_threshold",
    "threshold_equivalence_check",
    "beta_geometry",
    "chords_at",
    "endpoint_chord_line",
    "lr_positive_direct",
    "lr_positive_from_beta",
    "lr_positive_from_chords",
    # analysis
    "TestReport",
    "ComparisonReport",
    "MetricOrdering",
    "auc_closed_form",
    "auc_quadrature",
    "build_test_report",
    "compare_tests",
    "fts_limit_sweep",
    # cohort
    "CohortResult",
    "EmpiricalPoint",
    "simulate_cohort",
    "empirical_ppv_curve",
    # catalog and emitters
    "CatalogEntry",
    "parse_catalog",
    "emit_catalog",
    "emit_report",
    "emit_curve_csv",
    "render_json",
    # plotting
    "PlotSpec",
    "render_screening_plane",
    # errors
    "ScreeningError",
    "ParameterError",
    "DomainError",
    "IndeterminateError",
    "DegenerateTestError",
    "InfiniteLRError",
    "ZeroLRError",
    "DegenerateAngleError",
    "EpsilonOneError",
    "NonConvergenceError",
    "AbsentEstimateError",
    "ComparatorInconsistencyError",
    "ParseError",
]
