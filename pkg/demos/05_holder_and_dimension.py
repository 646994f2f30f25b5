"""
Hoelder modulus, roughness and graph dimension
==============================================
"""

from fractions import Fraction

from peanocurve import parse_digits
from peanocurve.analysis import box_counting, holder_scan, lower_modulus_witness, period_slope

for n, i, m in [(2, 1, 5), (2, 2, 5), (3, 3, 3)]:
    r = holder_scan(n, i, m)
    print(f"n={n} i={i} depth={m}: max |dx|/|dt|^(1/n) = {r.max_ratio:.4f} at {r.argmax}")

# Difference quotients blow up: the coordinates are nowhere differentiable.
t = parse_digits("0.1201021112")
for d in range(1, 7):
    u, dx, ratio = lower_modulus_witness(2, 1, t, d)
    print(d, u, dx, round(ratio, 2))

# Box counts follow 3^(2L - floor(L/n) - [i <= L mod n]); the least-squares
# slope over a short window ripples with L mod n, the period-n slope does not.
for n, levels in [(2, range(3, 7)), (2, range(1, 8)), (3, range(2, 5))]:
    est = box_counting(n, 1, levels)
    print(n, list(levels), est.box_counts, est.slope, "expected", est.expected)
print("period slopes:", period_slope(2, 1, 3), period_slope(3, 1, 1), "=", Fraction(3, 2), Fraction(5, 3))
