"""Curve-level analysis: exact area, adaptive quadrature, limits, comparison.

Area under the curve.  With c = 1 - b and d = epsilon - 1 = a - c the curve
is rho(phi) = a*phi / (c + d*phi), and

    integral_0^1 rho dphi = a/d - (a*c/d^2) * ln(a/c)      for d != 0,
                          = 1/2                            for d = 0.

The implementation evaluates the algebraically equal form

    (a/c) * (r - ln(1 + r)) / r^2,    r = d/c,

which isolates the cancellation into (r - log1p(r)) and switches to a
five-term alternating series

    (a/c) * (1/2 - r/3 + r^2/4 - r^3/5 + r^4/6)

for |r| < 1e-4 (next term below 1e-21), so values near epsilon = 1 are
computed to full precision instead of losing digits to the subtraction.

The quadrature companion is an independent oracle: depth-limited adaptive
Simpson with error estimated from the two-scale rule difference |S2 - S|/15
and a Richardson correction on acceptance.  The two routes are compared in
tests; neither is derived from the other.

A fictitious perfectly informative test appears in the limit epsilon -> 2,
where the area tends to 1; ``fts_limit_sweep`` walks a = b = 1 - 2^-k
toward that corner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Mapping

import numpy as np

from .core import ScreeningTest
from .errors import (
    ComparatorInconsistencyError,
    DegenerateTestError,
    NonConvergenceError,
    ParameterError,
)
from .geometry import (
    BetaGeometry,
    ChordLine,
    ThresholdPoint,
    beta_geometry,
    endpoint_chord_line,
    lr_positive_direct,
    prevalence_threshold,
)

__all__ = [
    "TestReport",
    "MetricOrdering",
    "ComparisonReport",
    "auc_closed_form",
    "auc_quadrature",
    "fts_limit_sweep",
    "build_test_report",
    "compare_tests",
]

#: Quadrature tolerances below this are refused (double precision floor).
MIN_QUADRATURE_TOL = 1e-13

#: Number of interior grid points used by the comparator's ordering check.
COMPARISON_GRID_POINTS = 1000

#: Curve-value differences at or below this are treated as numerically zero.
NEGLIGIBLE_DIFFERENCE = 1e-12

#: |r| = |epsilon - 1| / (1 - b) below which the series branch is used.
SERIES_SWITCH = 1e-4


def _reject_degenerate_for_area(test: ScreeningTest) -> None:
    a, b = test.sensitivity, test.specificity
    if a == 0.0 and b == 1.0:
        raise DegenerateTestError(
            f"area under the curve is indeterminate for {test.describe()}",
            limit=None,
        )
    if a == 0.0:
        raise DegenerateTestError(
            "area under the curve is degenerate at sensitivity=0 (limit 0)",
            limit=0.0,
        )
    if b == 1.0:
        raise DegenerateTestError(
            "area under the curve is degenerate at specificity=1 (limit 1)",
            limit=1.0,
        )


def auc_closed_form(test: ScreeningTest) -> float:
    """Exact area under the curve on [0, 1].

    Returns 0.5 exactly when epsilon = 1 (to float precision, when the
    computed a - (1 - b) is exactly zero).  Raises DegenerateTestError for
    sensitivity 0 or specificity 1, carrying the limiting area.
    """
    _reject_degenerate_for_area(test)
    a = test.sensitivity
    c = 1.0 - test.specificity
    r = (a - c) / c
    if r == 0.0:
        return 0.5
    if abs(r) < SERIES_SWITCH:
        core = 0.5 - r / 3.0 + r * r / 4.0 - r**3 / 5.0 + r**4 / 6.0
    else:
        core = (r - math.log1p(r)) / (r * r)
    return (a / c) * core


def _curve_values(test: ScreeningTest, phis: np.ndarray) -> np.ndarray:
    """Vectorized curve values for a nondegenerate test."""
    a = test.sensitivity
    c = 1.0 - test.specificity
    positives = a * phis
    return positives / (positives + c * (1.0 - phis))


def auc_quadrature(
    test: ScreeningTest, tol: float = 1e-10, max_depth: int = 60
) -> float:
    """Area under the curve by depth-limited adaptive Simpson bisection.

    Each interval carries an error budget proportional to its length; an
    interval is accepted when the two-scale Simpson difference satisfies
    |S2 - S| <= 15 * budget, contributing S2 + (S2 - S)/15.  Rejected
    intervals are bisected, and all pending intervals at a given depth are
    processed together as numpy arrays.

    Raises:
        ParameterError: if tol < 1e-13 or max_depth < 1.
        DegenerateTestError: for sensitivity 0 or specificity 1 (the
            integrand is 0/0 at an endpoint).
        NonConvergenceError: if some interval is still unresolved after
            ``max_depth`` bisections.
    """
    if not (isinstance(tol, float) and math.isfinite(tol) and tol >= MIN_QUADRATURE_TOL):
        raise ParameterError(
            f"tol must be a real number >= {MIN_QUADRATURE_TOL:g}, got {tol!r}"
        )
    if not isinstance(max_depth, int) or isinstance(max_depth, bool) or max_depth < 1:
        raise ParameterError(f"max_depth must be an integer >= 1, got {max_depth!r}")
    _reject_degenerate_for_area(test)

    f: Callable[[np.ndarray], np.ndarray] = lambda x: _curve_values(test, x)
    left = np.array([0.0])
    right = np.array([1.0])
    f_left = f(left)
    f_mid = f(0.5 * (left + right))
    f_right = f(right)
    estimate = (right - left) / 6.0 * (f_left + 4.0 * f_mid + f_right)
    budget = np.array([tol])
    total = 0.0

    for _ in range(max_depth):
        mid = 0.5 * (left + right)
        left_mid = 0.5 * (left + mid)
        right_mid = 0.5 * (mid + right)
        f_lm = f(left_mid)
        f_rm = f(right_mid)
        s_left = (mid - left) / 6.0 * (f_left + 4.0 * f_lm + f_mid)
        s_right = (right - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_right)
        refined = s_left + s_right
        error = refined - estimate
        done = np.abs(error) <= 15.0 * budget
        if done.any():
            total += float(np.sum(refined[done] + error[done] / 15.0))
        if done.all():
            return total
        keep = ~done
        left = np.concatenate([left[keep], mid[keep]])
        right = np.concatenate([mid[keep], right[keep]])
        f_left = np.concatenate([f_left[keep], f_mid[keep]])
        f_right = np.concatenate([f_mid[keep], f_right[keep]])
        f_mid = np.concatenate([f_lm[keep], f_rm[keep]])
        estimate = np.concatenate([s_left[keep], s_right[keep]])
        half_budget = budget[keep] / 2.0
        budget = np.concatenate([half_budget, half_budget])

    raise NonConvergenceError(
        f"quadrature did not reach tol={tol:g} within {max_depth} bisections "
        f"({left.size} intervals unresolved)"
    )


def fts_limit_sweep(steps: int) -> list[tuple[float, float]]:
    """Walk a = b = 1 - 2^-k for k = 1..steps toward the epsilon = 2 corner.

    Returns [(epsilon_k, auc_k)] in order.  The first point is always
    (1.0, 0.5); the areas increase strictly toward 1.

    Raises ParameterError unless ``steps`` is an integer >= 1.
    """
    if not isinstance(steps, int) or isinstance(steps, bool) or steps < 1:
        raise ParameterError(f"steps must be an integer >= 1, got {steps!r}")
    rows: list[tuple[float, float]] = []
    for k in range(1, steps + 1):
        level = 1.0 - 2.0 ** (-k)
        test = ScreeningTest(level, level)
        rows.append((test.epsilon, auc_closed_form(test)))
    return rows


@dataclass(frozen=True)
class TestReport:
    """All derived quantities for one test.

    Fields that are undefined for a degenerate test hold None, with a
    human-readable explanation under the same key in ``absent_reasons``.
    """

    test: ScreeningTest
    epsilon: float
    lr_plus: float | None
    threshold: ThresholdPoint | None
    beta: BetaGeometry | None
    endpoint_chord: ChordLine | None
    auc: float | None
    absent_reasons: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class MetricOrdering:
    """Which test wins one metric, with the signed gap (second minus first)."""

    winner: Literal["first", "second", "tie"]
    difference: float


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side comparison of two tests on the same prevalence axis."""

    first: TestReport
    second: TestReport
    equal_epsilon: bool
    epsilon_difference: float
    dominant: Literal["first", "second", "neither"]
    beta_order: MetricOrdering
    auc_order: MetricOrdering


def build_test_report(test: ScreeningTest, strict: bool = True) -> TestReport:
    """Assemble the full report for one test.

    With ``strict=True`` degenerate-test errors propagate; with
    ``strict=False`` the affected fields are reported as None plus a reason,
    which is what batch processing and the JSON emitter want.
    """
    reasons: dict[str, str] = {}

    def attempt(name, compute):
        try:
            return compute()
        except DegenerateTestError as exc:
            if strict:
                raise
            reasons[name] = str(exc)
            return None

    return TestReport(
        test=test,
        epsilon=test.epsilon,
        lr_plus=attempt("lr_plus", lambda: lr_positive_direct(test)),
        threshold=attempt("threshold", lambda: prevalence_threshold(test)),
        beta=attempt("beta", lambda: beta_geometry(test)),
        endpoint_chord=attempt("endpoint_chord", lambda: endpoint_chord_line(test)),
        auc=attempt("auc", lambda: auc_closed_form(test)),
        absent_reasons=reasons,
    )


def _ordering(first_value: float, second_value: float, prefer: str) -> MetricOrdering:
    difference = second_value - first_value
    if difference == 0.0:
        return MetricOrdering(winner="tie", difference=0.0)
    second_wins = (difference < 0.0) if prefer == "smaller" else (difference > 0.0)
    return MetricOrdering(winner="second" if second_wins else "first",
                          difference=difference)


def compare_tests(
    first: ScreeningTest, second: ScreeningTest, eps_tol: float = 1e-9
) -> ComparisonReport:
    """Compare two tests: epsilon equality, pointwise dominance, orderings.

    Dominance is decided on a 1000-point interior prevalence grid.  When the
    screening coefficients agree within ``eps_tol``, the grid verdict is
    cross-checked against the analytic sign of (epsilon - 1)(b2 - b1), which
    determines the pointwise ordering for equal-epsilon pairs; disagreement
    raises ComparatorInconsistencyError.  Grids whose largest curve
    difference is at most 1e-12 are reported as "neither" (numerically
    indistinguishable curves).

    Degenerate tests raise with the offending side named.  ``beta_order``
    prefers the smaller angle, ``auc_order`` the larger area; both carry the
    signed gap second-minus-first.
    """
    if not (isinstance(eps_tol, (int, float)) and math.isfinite(eps_tol) and eps_tol >= 0.0):
        raise ParameterError(f"eps_tol must be a finite number >= 0, got {eps_tol!r}")

    def report_or_blame(test: ScreeningTest, role: str) -> TestReport:
        try:
            return build_test_report(test, strict=True)
        except DegenerateTestError as exc:
            raise type(exc)(
                f"{role} test ({test.describe()}): {exc}", limit=exc.limit
            ) from exc

    report_1 = report_or_blame(first, "first")
    report_2 = report_or_blame(second, "second")
    eps_1, eps_2 = report_1.epsilon, report_2.epsilon
    equal = abs(eps_2 - eps_1) <= eps_tol

    grid = np.arange(1, COMPARISON_GRID_POINTS + 1) / (COMPARISON_GRID_POINTS + 1.0)
    difference = _curve_values(second, grid) - _curve_values(first, grid)
    max_gap = float(np.max(np.abs(difference)))

    if max_gap <= NEGLIGIBLE_DIFFERENCE:
        dominant: Literal["first", "second", "neither"] = "neither"
    else:
        if bool(np.all(difference > 0.0)):
            grid_verdict: Literal["first", "second", "neither"] = "second"
        elif bool(np.all(difference < 0.0)):
            grid_verdict = "first"
        else:
            grid_verdict = "neither"
        if equal:
            spread = (0.5 * (eps_1 + eps_2) - 1.0) * (
                second.specificity - first.specificity
            )
            predicted = "second" if spread > 0.0 else "first" if spread < 0.0 else "neither"
            if predicted != grid_verdict:
                raise ComparatorInconsistencyError(
                    "equal-epsilon ordering check failed: grid says "
                    f"{grid_verdict!r}, sign rule says {predicted!r} for "
                    f"({first.describe()}) vs ({second.describe()})"
                )
        dominant = grid_verdict

    assert report_1.beta is not None and report_2.beta is not None
    assert report_1.auc is not None and report_2.auc is not None
    return ComparisonReport(
        first=report_1,
        second=report_2,
        equal_epsilon=equal,
        epsilon_difference=eps_2 - eps_1,
        dominant=dominant,
        beta_order=_ordering(report_1.beta.beta_rad, report_2.beta.beta_rad, "smaller"),
        auc_order=_ordering(report_1.auc, report_2.auc, "larger"),
    )
