"""Pointwise curve function, parameter validation, and sampling."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from screencurve import (
    CurvePoint,
    IndeterminateError,
    ParameterError,
    ScreeningTest,
    curve_samples,
    epsilon,
    ppv,
)

from _oracles import PPV, ppv_odds_form

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
interior = st.floats(min_value=0.01, max_value=0.99)


class TestScreeningTest:
    def test_fields_and_epsilon(self):
        t = ScreeningTest(0.95, 0.75)
        assert t.sensitivity == 0.95
        assert t.specificity == 0.75
        assert t.epsilon == pytest.approx(1.7, abs=1e-12)
        assert epsilon(t) == t.epsilon
        assert t.false_positive_rate == pytest.approx(0.25, abs=1e-15)

    def test_boundary_values_allowed(self):
        for a, b in [(0.0, 0.0), (1.0, 1.0), (0.0, 1.0), (1.0, 0.0)]:
            t = ScreeningTest(a, b)
            assert t.epsilon == a + b

    @pytest.mark.parametrize("bad", [-0.1, 1.5, float("nan"), float("inf"), -1e-9])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ParameterError):
            ScreeningTest(bad, 0.5)
        with pytest.raises(ParameterError):
            ScreeningTest(0.5, bad)

    def test_immutable(self):
        t = ScreeningTest(0.5, 0.5)
        with pytest.raises(Exception):
            t.sensitivity = 0.9

    def test_describe(self):
        assert "0.95" in ScreeningTest(0.95, 0.75).describe()


class TestPpv:
    @pytest.mark.parametrize("key,expected", sorted(PPV.items()))
    def test_frozen_values(self, key, expected):
        a, b, phi = key
        assert ppv(ScreeningTest(a, b), phi) == pytest.approx(expected, rel=1e-12)

    def test_fixpoints_exact(self):
        t = ScreeningTest(0.8, 0.7)
        assert ppv(t, 0.0) == 0.0
        assert ppv(t, 1.0) == 1.0

    @pytest.mark.parametrize("bad", [-0.1, 1.1, float("nan")])
    def test_rejects_bad_prevalence(self, bad):
        with pytest.raises(ParameterError):
            ppv(ScreeningTest(0.5, 0.5), bad)

    def test_indeterminate_when_denominator_vanishes(self):
        # a = 0 kills the numerator and, at phi = 1, the whole denominator.
        with pytest.raises(IndeterminateError):
            ppv(ScreeningTest(0.0, 0.5), 1.0)
        # b = 1 kills the false-positive mass; at phi = 0 nothing is left.
        with pytest.raises(IndeterminateError):
            ppv(ScreeningTest(0.5, 1.0), 0.0)
        # jointly degenerate: indeterminate everywhere.
        for phi in (0.0, 0.3, 1.0):
            with pytest.raises(IndeterminateError):
                ppv(ScreeningTest(0.0, 1.0), phi)
        # but the one-sided degenerates are fine away from the bad endpoint
        assert ppv(ScreeningTest(0.0, 0.5), 0.4) == 0.0
        assert ppv(ScreeningTest(0.5, 1.0), 0.4) == 1.0

    @given(a=interior, b=interior, phi=unit)
    def test_matches_odds_form(self, a, b, phi):
        assert ppv(ScreeningTest(a, b), phi) == pytest.approx(
            ppv_odds_form(a, b, phi), rel=1e-12, abs=1e-15
        )

    @given(a=interior, b=interior, phi=unit)
    def test_range(self, a, b, phi):
        value = ppv(ScreeningTest(a, b), phi)
        assert 0.0 <= value <= 1.0

    @given(a=interior, phi=unit)
    def test_identity_line_when_gain_index_is_one(self, a, phi):
        # b = 1 - a makes the curve the diagonal rho = phi.
        assert ppv(ScreeningTest(a, 1.0 - a), phi) == pytest.approx(phi, abs=1e-12)

    @given(a=interior, b=interior)
    def test_strictly_increasing(self, a, b):
        t = ScreeningTest(a, b)
        values = [ppv(t, k / 100.0) for k in range(101)]
        assert all(x < y for x, y in zip(values, values[1:]))


class TestCurveSamples:
    def test_grid_and_endpoints(self):
        samples = curve_samples(ScreeningTest(0.5, 0.5), 3)
        assert [(p.phi, p.rho) for p in samples] == [(0.0, 0.0), (0.5, 0.5), (1.0, 1.0)]

    def test_absent_points_for_jointly_degenerate_test(self):
        samples = curve_samples(ScreeningTest(0.0, 1.0), 5)
        assert len(samples) == 5
        assert all(p.rho is None and not p.defined for p in samples)

    def test_one_sided_degenerate_keeps_good_points(self):
        samples = curve_samples(ScreeningTest(0.0, 0.5), 5)
        assert [p.rho for p in samples] == [0.0, 0.0, 0.0, 0.0, None]

    @pytest.mark.parametrize("bad", [1, 0, -3, 2.0, True])
    def test_rejects_bad_counts(self, bad):
        with pytest.raises(ParameterError):
            curve_samples(ScreeningTest(0.5, 0.5), bad)

    def test_point_count_and_spacing(self):
        samples = curve_samples(ScreeningTest(0.9, 0.8), 101)
        assert len(samples) == 101
        assert samples[34].phi == pytest.approx(0.34, abs=1e-15)
        assert samples[34].rho == pytest.approx(
            ppv(ScreeningTest(0.9, 0.8), 0.34), rel=1e-15
        )

    def test_curve_point_defined_flag(self):
        assert CurvePoint(0.5, 0.5).defined
        assert not CurvePoint(0.5, None).defined


def test_epsilon_is_not_nan_for_valid_tests():
    assert not math.isnan(ScreeningTest(0.0, 0.0).epsilon)
