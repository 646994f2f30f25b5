"""
Evaluating the curve exactly
============================

Parameters are ternary digit strings; coordinates come back as exact
triadic rationals.
"""

from peanocurve import eval_curve, parse_digits, to_triadic
from peanocurve.analysis import grid_values


def show(point):
    return "(" + ", ".join(str(c) for c in point) + ")"

# A parameter t = 0.1 (base 3) is 1/3.  In the plane it lands at (1/3, 1).
t = parse_digits("0.1")
print(to_triadic(t), show(eval_curve(t, 2, 1)))

# 0.1 and 0.0222... are the same number; the curve does not care which
# representation we use.
print(eval_curve(parse_digits("0.0(2)"), 2, 1))

# Same idea in three dimensions.
for text in ["0.111111", "0.2", "0.(2)"]:
    print(text, show(eval_curve(parse_digits(text), 3, 2)))

# The whole depth-2 polyline in the plane, as exact numerators over 3**2.
xs = grid_values(2, 1, 2)
ys = grid_values(2, 2, 2)
print(list(zip(xs.tolist(), ys.tolist()))[:10], "...")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = grid_values(2, 1, 4) / 3**4
    ys = grid_values(2, 2, 4) / 3**4
    plt.figure(figsize=(5, 5))
    plt.plot(xs, ys, lw=0.6)
    plt.gca().set_aspect("equal")
    plt.savefig("peano_depth4.png", dpi=120)
    print("wrote peano_depth4.png")
except ImportError:
    pass
