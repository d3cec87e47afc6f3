"""
A gallery of screening curves
=============================

Every binary test with sensitivity ``a`` and specificity ``b`` traces a
curve of positive predictive value against prevalence.  The curve always
runs from (0, 0) to (1, 1); the gain index ``a + b`` decides whether it
bows above the diagonal (informative), lies on it (coin flip), or sags
below (misleading).
"""

from pathlib import Path

from screencurve import (
    CatalogEntry,
    PlotSpec,
    ScreeningTest,
    curve_samples,
    emit_curve_csv,
    render_screening_plane,
)

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

# A spread of tests from near-perfect to actively misleading.
gallery = [
    CatalogEntry("excellent", ScreeningTest(0.95, 0.99)),
    CatalogEntry("strong", ScreeningTest(0.85, 0.95)),
    CatalogEntry("fair", ScreeningTest(0.75, 0.85)),
    CatalogEntry("coin-flip", ScreeningTest(0.5, 0.5)),
    CatalogEntry("weak", ScreeningTest(0.2, 0.4)),
    CatalogEntry("contrarian", ScreeningTest(0.1, 0.1)),
]

# One CSV per test, ready for any external plotting tool.
for entry in gallery:
    samples = curve_samples(entry.test, 101)
    path = out_dir / f"curve_{entry.name}.csv"
    path.write_text(emit_curve_csv(samples))
    print(f"wrote {path}")

# And a single SVG with the whole family on one plane.
plane = render_screening_plane(PlotSpec(entries=tuple(gallery)))
svg_path = out_dir / "curve_gallery.svg"
svg_path.write_text(plane)
print(f"wrote {svg_path}")

# The mid-prevalence column makes the ordering tangible.
print("\npredictive value at phi = 0.25:")
for entry in gallery:
    samples = curve_samples(entry.test, 5)
    rho = samples[1].rho
    print(f"  {entry.name:<11} gain={entry.test.epsilon:.2f}  rho={rho:.4f}")
