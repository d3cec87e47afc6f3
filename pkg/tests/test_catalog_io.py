"""Catalog parsing/round-tripping and the deterministic JSON/CSV emitters."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from screencurve import (
    CatalogEntry,
    ParseError,
    ScreeningTest,
    build_test_report,
    compare_tests,
    curve_samples,
    emit_catalog,
    emit_curve_csv,
    emit_report,
    parse_catalog,
    render_json,
    simulate_cohort,
)

from _oracles import AUC_9575, PHI_E_9575


class TestParseCatalog:
    def test_happy_path(self):
        text = (
            "# screening tests\n"
            "name,sensitivity,specificity\n"
            "\n"
            "alpha,0.95,0.75\n"
            "beta,0.75,0.95\n"
        )
        entries = parse_catalog(text)
        assert [e.name for e in entries] == ["alpha", "beta"]
        assert entries[0].test == ScreeningTest(0.95, 0.75)

    def test_crlf_and_inline_whitespace(self):
        entries = parse_catalog("name,sensitivity,specificity\r\nx, 0.5 , 0.25\r\n")
        assert entries[0].name == "x"
        assert entries[0].test == ScreeningTest(0.5, 0.25)

    def test_missing_header(self):
        with pytest.raises(ParseError) as info:
            parse_catalog("alpha,0.95,0.75\n")
        assert info.value.line == 1
        with pytest.raises(ParseError):
            parse_catalog("")

    def test_wrong_field_count(self):
        with pytest.raises(ParseError) as info:
            parse_catalog("name,sensitivity,specificity\nalpha,0.95\n")
        assert info.value.line == 2

    def test_out_of_range_value_cites_line(self):
        with pytest.raises(ParseError) as info:
            parse_catalog("name,sensitivity,specificity\nT1,1.2,0.5\n")
        assert info.value.line == 2
        assert "sensitivity" in str(info.value)

    def test_non_numeric_value(self):
        with pytest.raises(ParseError) as info:
            parse_catalog("name,sensitivity,specificity\nT1,high,0.5\n")
        assert info.value.line == 2

    def test_duplicate_name_cites_first_occurrence(self):
        text = "name,sensitivity,specificity\nT,0.5,0.5\n# note\nT,0.6,0.6\n"
        with pytest.raises(ParseError) as info:
            parse_catalog(text)
        assert info.value.line == 4
        assert "2" in str(info.value)

    def test_empty_name(self):
        with pytest.raises(ParseError):
            parse_catalog("name,sensitivity,specificity\n ,0.5,0.5\n")

    def test_comment_only_after_header(self):
        assert parse_catalog("name,sensitivity,specificity\n# nothing\n") == []


class TestCatalogRoundTrip:
    def test_exact_round_trip(self):
        entries = [
            CatalogEntry("a", ScreeningTest(0.95, 0.75)),
            CatalogEntry("b", ScreeningTest(0.333333333333, 0.125)),
            CatalogEntry("c", ScreeningTest(0.0, 1.0)),
        ]
        assert parse_catalog(emit_catalog(entries)) == entries

    @given(
        values=st.lists(
            st.tuples(
                st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
                st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
            ),
            min_size=1,
            max_size=8,
        )
    )
    def test_round_trip_after_12_digit_rounding(self, values):
        entries = [
            CatalogEntry(
                f"t{i}",
                ScreeningTest(float(f"{a:.12g}"), float(f"{b:.12g}")),
            )
            for i, (a, b) in enumerate(values)
        ]
        assert parse_catalog(emit_catalog(entries)) == entries


class TestRenderJson:
    def test_scalar_types(self):
        payload = {
            "flag": True,
            "off": False,
            "none": None,
            "int": 3,
            "real": 0.1,
            "text": 'quo"te\nline',
        }
        text = render_json(payload)
        parsed = json.loads(text)
        assert parsed == payload

    def test_insertion_order_is_preserved(self):
        text = render_json({"z": 1, "a": 2, "m": {"y": 1, "b": 2}})
        assert text.index('"z"') < text.index('"a"') < text.index('"m"')
        assert text.index('"y"') < text.index('"b"')

    def test_twelve_significant_digit_reals(self):
        assert '"x": 0.339056738915' in render_json({"x": 0.3390567389149261})
        assert '"x": 1' in render_json({"x": 1.0})

    def test_lists(self):
        assert json.loads(render_json([1, 2.5, "s", None])) == [1, 2.5, "s", None]


class TestEmitReport:
    def test_coin_flip_report(self):
        payload = json.loads(emit_report(build_test_report(ScreeningTest(0.5, 0.5))))
        assert payload["epsilon"] == 1.0
        assert payload["lr_plus"] == 1.0
        assert payload["auc"] == 0.5
        assert payload["threshold"]["phi_e"] == 0.5

    def test_anchor_report_values(self):
        payload = json.loads(emit_report(build_test_report(ScreeningTest(0.95, 0.75))))
        assert payload["test"] == {"sensitivity": 0.95, "specificity": 0.75}
        assert payload["threshold"]["phi_e"] == pytest.approx(PHI_E_9575, rel=1e-11)
        assert payload["auc"] == pytest.approx(AUC_9575, rel=1e-11)

    def test_stable_key_order(self):
        text = emit_report(build_test_report(ScreeningTest(0.95, 0.75)))
        order = ["test", "epsilon", "lr_plus", "threshold", "beta", "endpoint_chord", "auc"]
        positions = [text.index(f'"{key}"') for key in order]
        assert positions == sorted(positions)

    def test_null_with_sibling_reason(self):
        report = build_test_report(ScreeningTest(0.0, 0.5), strict=False)
        text = emit_report(report)
        payload = json.loads(text)
        assert payload["lr_plus"] is None
        assert isinstance(payload["lr_plus_reason"], str)
        assert payload["threshold"] is None
        assert isinstance(payload["threshold_reason"], str)
        assert text.index('"lr_plus"') < text.index('"lr_plus_reason"')

    def test_comparison_report(self):
        report = compare_tests(ScreeningTest(0.95, 0.75), ScreeningTest(0.75, 0.95))
        payload = json.loads(emit_report(report))
        assert payload["dominant"] == "second"
        assert payload["equal_epsilon"] is True
        assert payload["auc_order"]["winner"] == "second"

    def test_cohort_result(self):
        result = simulate_cohort(ScreeningTest(0.95, 0.75), 0.34, 10_000, 42)
        payload = json.loads(emit_report(result))
        assert payload["true_pos"] == 3233
        assert payload["seed"] == 42
        assert payload["empirical_ppv"] == pytest.approx(3233 / (3233 + 1610))

    def test_unknown_payload_type(self):
        with pytest.raises(TypeError):
            emit_report(object())

    def test_byte_determinism(self):
        report = build_test_report(ScreeningTest(0.85, 0.95))
        assert emit_report(report) == emit_report(report)


class TestEmitCurveCsv:
    def test_three_point_diagonal(self):
        samples = curve_samples(ScreeningTest(0.5, 0.5), 3)
        assert emit_curve_csv(samples) == "phi,ppv\n0,0\n0.5,0.5\n1,1\n"

    def test_anchor_row_at_034(self):
        samples = curve_samples(ScreeningTest(0.95, 0.75), 101)
        lines = emit_curve_csv(samples).splitlines()
        row = lines[1 + 34]
        phi_text, rho_text = row.split(",")
        assert phi_text == "0.34"
        assert float(rho_text) == pytest.approx(0.6619, abs=5e-5)

    def test_indeterminate_rows_have_empty_field(self):
        samples = curve_samples(ScreeningTest(0.0, 1.0), 3)
        assert emit_curve_csv(samples) == "phi,ppv\n0,\n0.5,\n1,\n"

    def test_byte_determinism(self):
        samples = curve_samples(ScreeningTest(0.9, 0.8), 33)
        assert emit_curve_csv(samples) == emit_curve_csv(samples)
