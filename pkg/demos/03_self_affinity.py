"""
Self-affinity, checked exactly
==============================

Cutting the parameter after k columns, the piece of x_i that follows is a
copy of x_i scaled by 3**-k and possibly flipped.
"""

import random

from peanocurve import check_self_affinity, coordinate, decompose, parse_digits, self_affine_params
from peanocurve.analysis import random_digitseq

t = parse_digits("0.1110")
dec = decompose(t, 2, 1, 1)
print("anchor", dec.anchor, "shifted", dec.shifted, "sigma", dec.sigma, "sign", dec.sign)
print("x_1(t) =", coordinate(t, 2, 1, 3))
print("residual", check_self_affinity(t, 2, 1, 1, 3))

print("H, r for n=3:", self_affine_params(3))

rng = random.Random(1)
residuals = set()
for _ in range(2000):
    n = rng.choice([2, 3, 4])
    s = random_digitseq(rng, 10 * n, canonical=False)
    residuals.add(check_self_affinity(s, n, rng.randint(1, n), rng.randint(1, 10), 10))
print("distinct residuals over 2000 random cuts:", residuals)
