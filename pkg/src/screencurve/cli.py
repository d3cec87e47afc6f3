"""Command-line interface.

Subcommands mirror the library surface: ``analyze`` (single-test report),
``curve`` (CSV samples), ``compare`` (two-test verdict), ``plot`` (SVG of
the screening plane), ``simulate`` (synthetic cohort), ``catalog`` (batch
reports from a CSV catalog), and ``limit-sweep`` (area trajectory as
sensitivity and specificity approach 1 together).

Exit codes: 0 on success, 1 when the inputs are valid numbers but the
requested quantity is undefined for them (degenerate tests) or an output
file cannot be written, 2 for usage errors, malformed catalog files, or
unreadable inputs.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import TextIO

from . import __version__
from .analysis import build_test_report, compare_tests, fts_limit_sweep
from .catalog import parse_catalog
from .cohort import simulate_cohort
from .core import ScreeningTest, curve_samples
from .emit import emit_curve_csv, emit_report, format_real, render_json, test_report_payload
from .errors import ParseError, ScreeningError
from .svgplot import PlotSpec, render_screening_plane

__all__ = ["build_parser", "cli_dispatch", "main"]


class _InputError(Exception):
    """An input file could not be read; maps to exit code 2."""


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path!r}: {exc.strerror or exc}") from exc


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{text!r} is not in [0, 1]")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _seed(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")


def _pair(text: str) -> ScreeningTest:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected SENSITIVITY,SPECIFICITY, got {text!r}"
        )
    try:
        return ScreeningTest(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="screencurve",
        description="Predictive-value geometry of binary screening tests.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report all derived quantities for one test")
    analyze.add_argument("--sens", type=_probability, required=True, help="sensitivity in [0, 1]")
    analyze.add_argument("--spec", type=_probability, required=True, help="specificity in [0, 1]")
    analyze.add_argument("--json", action="store_true", help="emit a JSON report")

    curve = sub.add_parser("curve", help="sample the predictive-value curve to CSV")
    curve.add_argument("--sens", type=_probability, required=True)
    curve.add_argument("--spec", type=_probability, required=True)
    curve.add_argument("--samples", type=_positive_int, default=101, help="grid size (default 101)")
    curve.add_argument("--out", help="output path (default: stdout)")

    compare = sub.add_parser("compare", help="order two tests by curve, angle, and area")
    compare.add_argument("--test1", type=_pair, required=True, metavar="SENS,SPEC")
    compare.add_argument("--test2", type=_pair, required=True, metavar="SENS,SPEC")
    compare.add_argument("--eps-tol", type=float, default=1e-9,
                         help="tolerance for treating the gain indices as equal")
    compare.add_argument("--json", action="store_true")

    plot = sub.add_parser("plot", help="render curves from a catalog file to SVG")
    plot.add_argument("--catalog", required=True, help="CSV catalog of named tests")
    plot.add_argument("--out", required=True, help="SVG output path")
    plot.add_argument("--samples", type=_positive_int, default=257)
    plot.add_argument("--threshold", action="store_true", help="mark each prevalence threshold")
    plot.add_argument("--beta", action="store_true", help="draw each origin-chord angle")
    plot.add_argument("--chords", action="store_true", help="draw origin and endpoint chords")

    simulate = sub.add_parser("simulate", help="draw a synthetic cohort and report tallies")
    simulate.add_argument("--sens", type=_probability, required=True)
    simulate.add_argument("--spec", type=_probability, required=True)
    simulate.add_argument("--prev", type=_probability, required=True, help="prevalence in [0, 1]")
    simulate.add_argument("--n", type=_positive_int, default=100000, help="cohort size")
    simulate.add_argument("--seed", type=_seed, default=0)
    simulate.add_argument("--json", action="store_true")

    catalog = sub.add_parser("catalog", help="batch-report every test in a catalog file")
    catalog.add_argument("path", help="CSV catalog of named tests")
    catalog.add_argument("--json", action="store_true")

    sweep = sub.add_parser("limit-sweep", help="area trajectory as both accuracies approach 1")
    sweep.add_argument("--steps", type=_positive_int, default=20)
    sweep.add_argument("--json", action="store_true")

    return parser


def _print_report_lines(test: ScreeningTest, out: TextIO) -> None:
    report = build_test_report(test, strict=False)
    out.write(f"sensitivity: {format_real(test.sensitivity)}\n")
    out.write(f"specificity: {format_real(test.specificity)}\n")
    out.write(f"gain index (sens + spec): {report.epsilon:.6g}\n")
    if report.lr_plus is not None:
        out.write(f"LR+: {report.lr_plus:.6g}\n")
    else:
        out.write(f"LR+: undefined ({report.absent_reasons['lr_plus']})\n")
    if report.threshold is not None:
        out.write(f"prevalence threshold phi_e: {report.threshold.phi_e:.6g}\n")
        out.write(f"predictive value at threshold: {report.threshold.rho_e:.6g}\n")
    else:
        out.write(f"prevalence threshold phi_e: undefined ({report.absent_reasons['threshold']})\n")
    if report.beta is not None:
        out.write(f"beta (rad): {report.beta.beta_rad:.6g}\n")
        out.write(f"origin-chord slope: {report.beta.origin_slope:.6g}\n")
    else:
        out.write(f"beta (rad): undefined ({report.absent_reasons['beta']})\n")
    if report.endpoint_chord is not None:
        out.write(f"endpoint-chord slope: {report.endpoint_chord.slope:.6g}\n")
        out.write(f"endpoint-chord intercept: {report.endpoint_chord.intercept:.6g}\n")
    if report.auc is not None:
        out.write(f"area under curve: {report.auc:.6g}\n")
    else:
        out.write(f"area under curve: undefined ({report.absent_reasons['auc']})\n")


def _write_text(path: str | None, text: str, out: TextIO) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _run_analyze(args: argparse.Namespace, out: TextIO) -> int:
    test = ScreeningTest(args.sens, args.spec)
    # Strict: a single-test report on a degenerate test is an error (exit 1),
    # unlike the batch `catalog` command which tolerates absent quantities.
    report = build_test_report(test, strict=True)
    if args.json:
        out.write(emit_report(report))
    else:
        _print_report_lines(test, out)
    return 0


def _run_curve(args: argparse.Namespace, out: TextIO) -> int:
    test = ScreeningTest(args.sens, args.spec)
    samples = curve_samples(test, args.samples)
    _write_text(args.out, emit_curve_csv(samples), out)
    return 0


def _run_compare(args: argparse.Namespace, out: TextIO) -> int:
    report = compare_tests(args.test1, args.test2, eps_tol=args.eps_tol)
    if args.json:
        out.write(emit_report(report))
        return 0
    out.write(f"test1: {args.test1.describe()}\n")
    out.write(f"test2: {args.test2.describe()}\n")
    out.write(f"gain index difference (test2 - test1): {report.epsilon_difference:.6g}\n")
    out.write(f"equal gain index: {'yes' if report.equal_epsilon else 'no'}\n")
    if report.dominant == "neither":
        out.write("dominant: neither (curves coincide)\n")
    else:
        out.write(f"dominant: {'test1' if report.dominant == 'first' else 'test2'}\n")
    out.write(
        f"beta order: {report.beta_order.winner} "
        f"(difference {report.beta_order.difference:.6g})\n"
    )
    out.write(
        f"area order: {report.auc_order.winner} "
        f"(difference {report.auc_order.difference:.6g})\n"
    )
    return 0


def _run_plot(args: argparse.Namespace, out: TextIO) -> int:
    entries = parse_catalog(_read_text(args.catalog))
    spec = PlotSpec(
        entries=tuple(entries),
        samples=args.samples,
        show_threshold=args.threshold,
        show_beta=args.beta,
        show_chords=args.chords,
    )
    _write_text(args.out, render_screening_plane(spec), out)
    return 0


def _run_simulate(args: argparse.Namespace, out: TextIO) -> int:
    test = ScreeningTest(args.sens, args.spec)
    result = simulate_cohort(test, args.prev, args.n, args.seed)
    if args.json:
        out.write(emit_report(result))
        return 0
    out.write(f"cohort size: {result.n}\n")
    out.write(f"seed: {result.seed}\n")
    out.write(f"true positives: {result.true_pos}\n")
    out.write(f"false positives: {result.false_pos}\n")
    out.write(f"true negatives: {result.true_neg}\n")
    out.write(f"false negatives: {result.false_neg}\n")
    if result.empirical_ppv is not None:
        out.write(f"empirical predictive value: {result.empirical_ppv:.6g}\n")
    else:
        out.write(f"empirical predictive value: undefined ({result.ppv_reason})\n")
    if result.empirical_lr_plus is not None:
        out.write(f"empirical LR+: {result.empirical_lr_plus:.6g}\n")
    else:
        out.write(f"empirical LR+: undefined ({result.lr_reason})\n")
    return 0


def _run_catalog(args: argparse.Namespace, out: TextIO) -> int:
    entries = parse_catalog(_read_text(args.path))
    if args.json:
        payload = []
        for entry in entries:
            row = {"name": entry.name}
            row.update(test_report_payload(build_test_report(entry.test, strict=False)))
            payload.append(row)
        out.write(render_json(payload) + "\n")
        return 0
    for index, entry in enumerate(entries):
        if index:
            out.write("\n")
        out.write(f"[{entry.name}]\n")
        _print_report_lines(entry.test, out)
    return 0


def _run_limit_sweep(args: argparse.Namespace, out: TextIO) -> int:
    rows = fts_limit_sweep(args.steps)
    if args.json:
        payload = [{"epsilon": eps, "auc": auc} for eps, auc in rows]
        out.write(render_json(payload) + "\n")
        return 0
    out.write("step,epsilon,auc\n")
    for k, (eps, auc) in enumerate(rows, start=1):
        out.write(f"{k},{format_real(eps)},{format_real(auc)}\n")
    return 0


_RUNNERS = {
    "analyze": _run_analyze,
    "curve": _run_curve,
    "compare": _run_compare,
    "plot": _run_plot,
    "simulate": _run_simulate,
    "catalog": _run_catalog,
    "limit-sweep": _run_limit_sweep,
}


def cli_dispatch(argv: list[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Parse ``argv`` and run the selected subcommand; return the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    runner = _RUNNERS[args.command]
    try:
        return runner(args, out)
    except ParseError as exc:
        err.write(f"screencurve: error: {exc}\n")
        return 2
    except _InputError as exc:
        err.write(f"screencurve: error: {exc}\n")
        return 2
    except ScreeningError as exc:
        err.write(f"screencurve: error: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"screencurve: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))
