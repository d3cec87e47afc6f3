"""
One likelihood ratio, three geometric readings
==============================================

The positive likelihood ratio ``a / (1 - b)`` is usually computed from the
confusion-matrix rates.  The screening plane offers two other readings:
the squared cotangent of the origin-chord angle, and — at *any* prevalence
— the ratio of the chord slopes from the curve point back to (0, 0) and
forward to (1, 1).  All three must agree to machine precision.
"""

from screencurve import (
    ScreeningTest,
    chords_at,
    lr_positive_direct,
    lr_positive_from_beta,
    lr_positive_from_chords,
)

tests = [
    ScreeningTest(0.95, 0.75),
    ScreeningTest(0.75, 0.95),
    ScreeningTest(0.6, 0.9),
    ScreeningTest(0.3, 0.4),
]

for test in tests:
    direct = lr_positive_direct(test)
    via_angle = lr_positive_from_beta(test)
    print(f"\n{test.describe()}")
    print(f"  rate ratio      : {direct:.12f}")
    print(f"  angle route     : {via_angle:.12f}")
    for phi in (0.1, 0.34, 0.5, 0.9):
        via_chords = lr_positive_from_chords(test, phi)
        print(f"  chords at {phi:<4}: {via_chords:.12f}")

# The chord construction in detail at one point: the slope back to the
# origin divided by the slope on to the endpoint is prevalence-free.
print("\nchord slopes for a=0.75 b=0.95 across prevalence:")
test = ScreeningTest(0.75, 0.95)
for phi in (0.05, 0.25, 0.5, 0.75, 0.95):
    pair = chords_at(test, phi)
    print(
        f"  phi={phi:<5} origin {pair.slope_origin:9.5f}"
        f"  endpoint {pair.slope_endpoint:8.5f}"
        f"  ratio {pair.slope_origin / pair.slope_endpoint:.9f}"
    )
