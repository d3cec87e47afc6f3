"""Geometry of the screening plane: threshold point, curve angle, chords.

For a test with sensitivity ``a`` and specificity ``b`` (write c = 1 - b):

* The prevalence threshold is the unique prevalence where the curve has
  unit slope,

      phi_e = sqrt(c) / (sqrt(a) + sqrt(c))
            = (sqrt(a*c) + b - 1) / (a + b - 1),     the ratio form,

  the two forms agreeing whenever epsilon = a + b differs from 1.  The
  threshold point (phi_e, rho(phi_e)) always lies on the antidiagonal:
  rho(phi_e) = 1 - phi_e.

* The chord from (1, 1) down to the threshold point makes an angle beta
  with the vertical axis through (1, 1), where

      tan(beta) = psi = sqrt(c / a),

  and the chord from the origin to the threshold point has slope
  sqrt(a / c) = 1 / psi.  Hence cot^2(beta) = a / c, which is exactly the
  positive likelihood ratio LR+ = a / (1 - b).

* More generally, at any interior prevalence phi the chord from the origin
  to (phi, rho(phi)) has slope rho/phi, the chord from (phi, rho(phi)) to
  (1, 1) has slope (1 - rho)/(1 - phi), and their ratio equals LR+
  independently of phi.  ``chords_at`` computes both slopes numerically
  from the curve so that tests can assert this identity rather than assume
  it.

Degenerate parameters (a = 0 or b = 1) make these quantities collapse onto
the boundary of their domains; the operations raise typed errors carrying
the limiting value where a one-sided limit exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import ScreeningTest, ppv, _require_probability
from .errors import (
    DegenerateAngleError,
    DegenerateTestError,
    DomainError,
    EpsilonOneError,
    InfiniteLRError,
    ParameterError,
    ZeroLRError,
)

__all__ = [
    "ThresholdPoint",
    "BetaGeometry",
    "ChordPair",
    "ChordLine",
    "prevalence_threshold",
    "threshold_equivalence_check",
    "beta_geometry",
    "lr_positive_direct",
    "lr_positive_from_beta",
    "chords_at",
    "lr_positive_from_chords",
    "endpoint_chord_line",
]

#: |epsilon - 1| below which the ratio form of the threshold is refused.
EPSILON_ONE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ThresholdPoint:
    """The unit-slope point of the curve, strictly inside the unit square."""

    phi_e: float
    rho_e: float

    def __post_init__(self) -> None:
        for name in ("phi_e", "rho_e"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and 0.0 < value < 1.0):
                raise ParameterError(f"{name} must lie in (0, 1), got {value!r}")


@dataclass(frozen=True)
class BetaGeometry:
    """Angle geometry of the threshold chords.

    ``beta_rad`` is the angle between the endpoint chord and the vertical,
    ``psi = tan(beta_rad)``, and ``origin_slope = 1/psi`` is the slope of the
    chord from the origin to the threshold point.
    """

    beta_rad: float
    psi: float
    origin_slope: float

    def __post_init__(self) -> None:
        if not 0.0 < self.beta_rad < math.pi / 2.0:
            raise ParameterError(
                f"beta_rad must lie in (0, pi/2), got {self.beta_rad!r}"
            )
        if not self.psi > 0.0 or not self.origin_slope > 0.0:
            raise ParameterError("psi and origin_slope must be positive")


@dataclass(frozen=True)
class ChordPair:
    """Chord slopes through one interior point of the curve."""

    at_phi: float
    slope_origin: float
    slope_endpoint: float

    def __post_init__(self) -> None:
        if not 0.0 < self.at_phi < 1.0:
            raise ParameterError(f"at_phi must lie in (0, 1), got {self.at_phi!r}")
        for name in ("slope_origin", "slope_endpoint"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ParameterError(f"{name} must be a positive real, got {value!r}")


class ChordLine(NamedTuple):
    """A line rho = slope * phi + intercept in the screening plane."""

    slope: float
    intercept: float


def _reject_degenerate(test: ScreeningTest, quantity: str, *,
                       limit_a0: float | None, limit_b1: float | None) -> None:
    """Raise DegenerateTestError for a = 0 / b = 1, carrying the known limit."""
    a, b = test.sensitivity, test.specificity
    if a == 0.0 and b == 1.0:
        raise DegenerateTestError(
            f"{quantity} is indeterminate for {test.describe()}: "
            "sensitivity 0 and specificity 1 jointly leave it 0/0",
            limit=None,
        )
    if a == 0.0:
        raise DegenerateTestError(
            f"{quantity} is degenerate at sensitivity=0 "
            f"(limit {limit_a0:g} as sensitivity -> 0)",
            limit=limit_a0,
        )
    if b == 1.0:
        raise DegenerateTestError(
            f"{quantity} is degenerate at specificity=1 "
            f"(limit {limit_b1:g} as specificity -> 1)",
            limit=limit_b1,
        )


def prevalence_threshold(test: ScreeningTest) -> ThresholdPoint:
    """Unit-slope point of the curve for a nondegenerate test.

    Raises DegenerateTestError when sensitivity is 0 or specificity is 1
    (the threshold escapes to the corners of the unit square; the error
    carries the limiting prevalence where one exists).
    """
    _reject_degenerate(test, "prevalence threshold", limit_a0=1.0, limit_b1=0.0)
    root_a = math.sqrt(test.sensitivity)
    root_c = math.sqrt(1.0 - test.specificity)
    phi_e = root_c / (root_a + root_c)
    return ThresholdPoint(phi_e=phi_e, rho_e=ppv(test, phi_e))


def threshold_equivalence_check(test: ScreeningTest) -> tuple[float, float]:
    """Evaluate both algebraic forms of the threshold prevalence.

    Returns (ratio_form, surd_form).  The ratio form divides by epsilon - 1,
    so the check refuses tests with |epsilon - 1| < 1e-12 rather than return
    a 0/0 artifact.

    Raises:
        EpsilonOneError: when |epsilon - 1| < 1e-12.
        DegenerateTestError: when sensitivity 0 and specificity 1 jointly
            make the surd form 0/0.
    """
    a, b = test.sensitivity, test.specificity
    if a == 0.0 and b == 1.0:
        raise DegenerateTestError(
            "threshold forms are 0/0 when sensitivity is 0 and specificity is 1"
        )
    d = test.epsilon - 1.0
    if abs(d) < EPSILON_ONE_TOLERANCE:
        raise EpsilonOneError(
            f"ratio form of the threshold is 0/0 at epsilon={test.epsilon!r}; "
            "the curve is the identity and has unit slope everywhere"
        )
    c = 1.0 - b
    ratio_form = (math.sqrt(a * c) + b - 1.0) / d
    surd_form = math.sqrt(c) / (math.sqrt(a) + math.sqrt(c))
    return ratio_form, surd_form


def beta_geometry(test: ScreeningTest) -> BetaGeometry:
    """Angle geometry (beta, psi, origin slope) for a nondegenerate test.

    Raises DegenerateAngleError at sensitivity 0 (beta -> pi/2) or
    specificity 1 (beta -> 0); the error carries the limiting angle.
    """
    a, b = test.sensitivity, test.specificity
    if a == 0.0 and b == 1.0:
        raise DegenerateAngleError(
            f"curve angle is indeterminate for {test.describe()}", limit=None
        )
    if a == 0.0:
        raise DegenerateAngleError(
            "curve angle is degenerate at sensitivity=0 (limit pi/2)",
            limit=math.pi / 2.0,
        )
    if b == 1.0:
        raise DegenerateAngleError(
            "curve angle is degenerate at specificity=1 (limit 0)", limit=0.0
        )
    c = 1.0 - b
    psi = math.sqrt(c / a)
    return BetaGeometry(
        beta_rad=math.atan(psi), psi=psi, origin_slope=math.sqrt(a / c)
    )


def lr_positive_direct(test: ScreeningTest) -> float:
    """Positive likelihood ratio sensitivity / (1 - specificity).

    Raises:
        DegenerateTestError: 0/0 when sensitivity 0 and specificity 1 jointly.
        InfiniteLRError: specificity 1 with positive sensitivity (carries inf).
        ZeroLRError: sensitivity 0 (carries 0.0).
    """
    a, b = test.sensitivity, test.specificity
    if a == 0.0 and b == 1.0:
        raise DegenerateTestError(
            f"LR+ is 0/0 for {test.describe()}", limit=None
        )
    if b == 1.0:
        raise InfiniteLRError(
            "LR+ diverges at specificity=1 with positive sensitivity",
            limit=math.inf,
        )
    if a == 0.0:
        raise ZeroLRError("LR+ collapses to 0 at sensitivity=0", limit=0.0)
    return a / (1.0 - b)


def lr_positive_from_beta(test: ScreeningTest) -> float:
    """Positive likelihood ratio recovered from the angle as cot(beta)^2.

    Deliberately routed through atan and tan so the trigonometric identity
    is computed, not algebraically simplified away.  Degeneracies raise as
    in ``beta_geometry``.
    """
    beta = beta_geometry(test).beta_rad
    cot_beta = 1.0 / math.tan(beta)
    return cot_beta * cot_beta


def chords_at(test: ScreeningTest, phi: float) -> ChordPair:
    """Slopes of the origin and endpoint chords through (phi, rho(phi)).

    The origin chord runs from (0, 0) to the curve point, the endpoint chord
    from the curve point to (1, 1).

    Raises:
        ParameterError: if phi is outside [0, 1].
        DomainError: at phi = 0 or phi = 1, where a chord degenerates to a point.
        DegenerateTestError: when sensitivity is 0 or specificity is 1, where
            one chord slope collapses to 0 (carries that limit).
    """
    phi = _require_probability("phi", phi)
    if phi == 0.0 or phi == 1.0:
        raise DomainError(
            f"chords are undefined at phi={phi:g}: one chord degenerates to a point"
        )
    _reject_degenerate(test, "chord pair", limit_a0=0.0, limit_b1=0.0)
    a = test.sensitivity
    c = 1.0 - test.specificity
    denominator = a * phi + c * (1.0 - phi)
    rho = (a * phi) / denominator
    # Rise of the endpoint chord, computed as the complement predictive value
    # c*(1-phi)/denominator instead of 1 - rho: the literal subtraction loses
    # up to half the significand as rho -> 1, which would wash out the
    # phi-independence of the slope ratio at the 1e-12 level.
    rho_complement = c * (1.0 - phi) / denominator
    return ChordPair(
        at_phi=phi,
        slope_origin=rho / phi,
        slope_endpoint=rho_complement / (1.0 - phi),
    )


def lr_positive_from_chords(test: ScreeningTest, phi: float) -> float:
    """Positive likelihood ratio as the ratio of chord slopes at ``phi``.

    Equals the direct ratio for every interior phi; errors as ``chords_at``.
    """
    pair = chords_at(test, phi)
    return pair.slope_origin / pair.slope_endpoint


def endpoint_chord_line(test: ScreeningTest) -> ChordLine:
    """Full line through the threshold point and (1, 1).

    The slope is (1 - rho_e) / (1 - phi_e) and the intercept is exactly
    1 - slope, so the line passes through (1, 1) by construction.
    Degeneracies raise as in ``prevalence_threshold``.
    """
    point = prevalence_threshold(test)
    slope = (1.0 - point.rho_e) / (1.0 - point.phi_e)
    return ChordLine(slope=slope, intercept=1.0 - slope)
