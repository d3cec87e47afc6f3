"""
The prevalence threshold and its geometry
=========================================

Each informative curve crosses the falling diagonal ``rho = 1 - phi`` at a
single interior point, the prevalence threshold.  Three facts make that
point special: the crossing coordinates are mirror images (``rho_e =
1 - phi_e``), the curve passes through it with derivative exactly 1, and
the chord from the origin to it makes the angle ``beta`` whose geometry
encodes the likelihood ratio.
"""

from pathlib import Path

from screencurve import (
    CatalogEntry,
    PlotSpec,
    ScreeningTest,
    beta_geometry,
    endpoint_chord_line,
    ppv,
    prevalence_threshold,
    render_screening_plane,
)

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

test = ScreeningTest(0.95, 0.75)
point = prevalence_threshold(test)
geom = beta_geometry(test)
line = endpoint_chord_line(test)

print(f"test: {test.describe()}")
print(f"threshold: phi_e = {point.phi_e:.6f}, rho_e = {point.rho_e:.6f}")
print(f"mirror identity: phi_e + rho_e = {point.phi_e + point.rho_e:.12f}")

# The crossing really sits on the curve...
print(f"on the curve: ppv(phi_e) = {ppv(test, point.phi_e):.6f}")

# ...and the curve goes through it at 45 degrees.
h = 1e-6
slope_fd = (ppv(test, point.phi_e + h) - ppv(test, point.phi_e - h)) / (2 * h)
print(f"finite-difference slope at phi_e: {slope_fd:.9f}")

# The origin chord and the endpoint chord frame the threshold point.
print(f"beta = {geom.beta_rad:.6f} rad, psi = tan(beta) = {geom.psi:.6f}")
print(f"origin-chord slope  : {geom.origin_slope:.6f}")
print(f"endpoint-chord slope: {line.slope:.6f} (equals psi)")
print(f"endpoint-chord intercept: {line.intercept:.6f} (equals 1 - slope)")

# Render the full construction for two tests that will matter later.
spec = PlotSpec(
    entries=(
        CatalogEntry("a=0.95 b=0.75", test),
        CatalogEntry("a=0.75 b=0.95", ScreeningTest(0.75, 0.95)),
    ),
    show_threshold=True,
    show_chords=True,
    show_beta=True,
)
svg_path = out_dir / "threshold_geometry.svg"
svg_path.write_text(render_screening_plane(spec))
print(f"\nwrote {svg_path}")
