"""
Equal gain index, unequal tests
===============================

Two tests can share the same gain index ``a + b`` yet behave differently at
every interior prevalence: above gain 1, the one with higher specificity
wins pointwise, has the smaller origin-chord angle, and the larger area
under its curve.  Swapping sensitivity and specificity is therefore not a
symmetry of screening performance.
"""

from pathlib import Path

from screencurve import ScreeningTest, compare_tests, emit_report, ppv

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

first = ScreeningTest(0.95, 0.75)
second = ScreeningTest(0.75, 0.95)
report = compare_tests(first, second)

print(f"first : {first.describe()} (gain {first.epsilon:.2f})")
print(f"second: {second.describe()} (gain {second.epsilon:.2f})")
print(f"equal gain index: {report.equal_epsilon}")
print(f"dominant curve  : {report.dominant}")
print(f"beta  : {report.first.beta.beta_rad:.6f} vs {report.second.beta.beta_rad:.6f}")
print(f"area  : {report.first.auc:.6f} vs {report.second.auc:.6f}")
print(f"area margin (second - first): {report.auc_order.difference:.6f}")

# The pointwise gap is visible at any interior prevalence.
print("\npredictive value gap:")
for phi in (0.1, 0.34, 0.5, 0.9):
    gap = ppv(second, phi) - ppv(first, phi)
    print(f"  phi={phi:<4}  rho1={ppv(first, phi):.4f}  rho2={ppv(second, phi):.4f}  gap={gap:+.4f}")

# The full machine-readable verdict.
json_path = out_dir / "equal_gain_comparison.json"
json_path.write_text(emit_report(report))
print(f"\nwrote {json_path}")

# Below gain 1 the ordering flips: higher specificity now loses.
reversed_report = compare_tests(ScreeningTest(0.3, 0.4), ScreeningTest(0.2, 0.5))
print(f"\nbelow gain 1: dominant = {reversed_report.dominant} (ordering reverses)")
