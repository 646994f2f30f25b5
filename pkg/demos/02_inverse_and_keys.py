"""
From points back to parameters
==============================

``invert`` builds a parameter whose image agrees with the target to the
requested depth.  The parameter's digits, read as an integer, give a
locality-preserving key.
"""

from fractions import Fraction

from peanocurve import encode_point, eval_curve, invert, key_decode, point_digits, to_triadic


def show(point):
    return "(" + ", ".join(str(c) for c in point) + ")"

target = [Fraction(1, 3), Fraction(1)]
t = invert(point_digits(target), 2, 3)
print("t =", to_triadic(t), "digits", t)
print("image", show(eval_curve(t, 2, 3)))

key = encode_point(target, 2, 3)
print("key", key, "->", show(key_decode(key, 2)))

# Points that are close on the curve get close keys.  Sort a small grid of
# points by key and walk it: consecutive points are neighbours in the plane.
J = 2
grid = [(Fraction(a, 3**J), Fraction(b, 3**J)) for a in range(3**J) for b in range(3**J)]
walk = sorted(grid, key=lambda p: encode_point(p, 2, J))
steps = {max(abs(p[0] - q[0]), abs(p[1] - q[1])) for p, q in zip(walk, walk[1:])}
print("largest step between consecutive keys:", max(steps))
