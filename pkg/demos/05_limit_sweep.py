"""
The approach to a perfect test
==============================

Let sensitivity and specificity rise together, ``a = b = 1 - 2**-k``.  The
gain index climbs from 1 toward 2 and the area under the screening curve
climbs from 1/2 toward 1, strictly monotonically — but it never arrives.
The sweep makes the convergence rate concrete: each extra step buys
roughly half the remaining distance on the gain axis but progressively
less area.
"""

from screencurve import ScreeningTest, auc_closed_form, auc_quadrature, fts_limit_sweep

rows = fts_limit_sweep(20)

print("step  gain index        area under curve    remaining")
for k, (eps, auc) in enumerate(rows, start=1):
    print(f"{k:>4}  {eps:<16.12f}  {auc:<18.12f}  {1.0 - auc:.3e}")

# The closed form is cross-checked against adaptive quadrature at a point
# deep into the sweep, where the curve hugs the upper-left corner.
probe = ScreeningTest(0.999, 0.999)
closed = auc_closed_form(probe)
quad = auc_quadrature(probe, tol=1e-10)
print(f"\na = b = 0.999: closed form {closed:.12f}")
print(f"               quadrature  {quad:.12f}")
print(f"               |difference| {abs(closed - quad):.3e}")
