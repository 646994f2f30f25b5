"""Finite-scale checks of the distributional and fractal properties.

The grid routines evaluate one coordinate at every parameter ``s / 3**(n*m)``
at once with integer numpy arrays.  Values stay exact: a coordinate at that
grid is ``N / 3**m`` with ``N`` an int64.  Only the final estimator outputs
(ratios, slopes) are floats.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core import _check_row, check_dim, coordinate, xi_apply
from .errors import DomainError, ResourceError
from .ternary import DigitSeq, Tail, to_triadic

DEFAULT_MAX_CELLS = 3**14


def max_cells() -> int:
    """Cell budget for grid enumerations, from ``PEANO_MAX_CELLS`` if set."""
    value = os.environ.get("PEANO_MAX_CELLS")
    return int(value) if value else DEFAULT_MAX_CELLS


def _require(cells: int, budget: Optional[int] = None) -> None:
    budget = max_cells() if budget is None else budget
    if cells > budget:
        raise ResourceError(cells, budget)


def grid_digits(length: int) -> np.ndarray:
    """All ternary words of ``length`` digits in counting order, shape (3**length, length)."""
    s = np.arange(3**length, dtype=np.int64)
    out = np.empty((s.size, length), dtype=np.int8)
    for col in range(length - 1, -1, -1):
        s, out[:, col] = np.divmod(s, 3)
    return out


def grid_coordinate(n: int, i: int, m: int, budget: Optional[int] = None):
    """Coordinate ``x_i`` over the parameter grid ``s / 3**(n*m)``.

    Returns ``(digits, odd)``: ``digits`` holds the numerators of the first
    ``m`` output digits (values in ``[0, 3**m)``), ``odd`` flags an odd tail
    parity.  The exact value at the grid point is ``(digits + odd) / 3**m``
    and on the whole parameter cell the coordinate sweeps exactly the interval
    ``[digits, digits + 1] / 3**m``, starting from the top when ``odd``.
    """
    _check_row(n, i)
    _require(3 ** (n * m), budget)
    words = grid_digits(n * m).astype(np.int64)
    before = np.cumsum(words, axis=1) - words
    cols = words[:, i - 1 :: n]
    row_before = np.cumsum(cols, axis=1) - cols
    parity = (before[:, i - 1 :: n] - row_before) & 1
    out = np.where(parity == 1, 2 - cols, cols)
    weights = 3 ** np.arange(m - 1, -1, -1, dtype=np.int64)
    digits = out @ weights if m else np.zeros(len(words), dtype=np.int64)
    odd = (words.sum(axis=1) - cols.sum(axis=1)) & 1
    return digits, odd


def grid_values(n: int, i: int, m: int, budget: Optional[int] = None) -> np.ndarray:
    """Numerators of ``x_i(s / 3**(n*m))`` over ``3**m``, for ``s = 0 .. 3**(n*m)``.

    The final entry is the right endpoint ``t = 1``.
    """
    digits, odd = grid_coordinate(n, i, m, budget)
    return np.append(digits + odd, 3**m)


# --- census -----------------------------------------------------------------


def census(n: int, i: int) -> Tuple[int, int, int]:
    """Counts of first output digits 0, 1, 2 of ``x_i`` over the ``3**n`` level-1 cells."""
    _check_row(n, i)
    counts = [0, 0, 0]
    for k in range(3**n):
        digits = [(k // 3 ** (n - q)) % 3 for q in range(1, n + 1)]
        s = sum(digits[: i - 1])
        counts[xi_apply(s, digits[i - 1])] += 1
    return tuple(counts)


def census_table(n: int) -> List[Tuple[int, int, int]]:
    check_dim(n)
    return [census(n, i) for i in range(1, n + 1)]


# --- histogram --------------------------------------------------------------


def histogram(
    n: int, i: int, m: int, d: int, boundary: str = "cell", budget: Optional[int] = None
) -> List[int]:
    """Bin ``x_i`` at the ``3**(n*m)`` grid parameters into ``3**d`` equal triadic bins.

    ``boundary`` settles values lying exactly on a bin edge.  With ``"cell"``
    such a value goes to the bin the curve enters from that point, i.e. the
    bin holding the whole image of the parameter cell that starts there; the
    resulting counts are exact measures.  With ``"upper"`` it goes to the
    upper bin (1 stays in the top bin).
    """
    if not 0 <= d <= m:
        raise DomainError(f"bin depth must satisfy 0 <= d <= m, got d={d}, m={m}")
    digits, odd = grid_coordinate(n, i, m, budget)
    if boundary == "cell":
        numer = digits
    elif boundary == "upper":
        numer = digits + odd
    else:
        raise DomainError(f"boundary rule must be 'cell' or 'upper', got {boundary!r}")
    bins = np.minimum(numer // 3 ** (m - d), 3**d - 1)
    return np.bincount(bins, minlength=3**d).tolist()


# --- Hoelder modulus ---------------------------------------------------------


@dataclass
class HolderReport:
    n: int
    i: int
    depth: int
    max_ratio: float
    argmax: Tuple[Fraction, Fraction]
    # max ratio per gap exponent l, gap = 3**-l
    by_gap: List[float] = field(default_factory=list)


def holder_scan(n: int, i: int, m: int, budget: Optional[int] = None) -> HolderReport:
    """Largest ``|x_i(t) - x_i(u)| / |t - u|**(1/n)`` over grid pairs at depth ``m``.

    Pairs are every ``(t, t + 3**-l)`` with both ends on the ``3**-(n*m)``
    grid, for each gap exponent ``l = 1 .. n*m``.  The finest gap gives the
    adjacent pairs; coarser gaps sample every coarser scale at every offset.
    Ratios are compared through their exact n-th powers.
    """
    if m < 1:
        raise DomainError(f"depth must be >= 1, got {m}")
    values = grid_values(n, i, m, budget)
    L = n * m
    best, arg, by_gap = Fraction(-1), (Fraction(0), Fraction(0)), []
    for l in range(1, L + 1):
        step = 3 ** (L - l)
        dx = np.abs(values[step:] - values[:-step])
        pos = int(np.argmax(dx))
        # (|dx| / 3**m)**n / 3**-l
        power = Fraction(int(dx[pos]) ** n * 3**l, 3**L)
        by_gap.append(_root(power, n))
        if power > best:
            best = power
            arg = (Fraction(pos, 3**L), Fraction(pos + step, 3**L))
    return HolderReport(n, i, m, _root(best, n), arg, by_gap)


def _root(power: Fraction, n: int) -> float:
    return float(power) ** (1.0 / n)


# --- lower modulus witness ----------------------------------------------------


def lower_modulus_witness(n: int, i: int, t: DigitSeq, d: int):
    """A point ``u`` in the level-``d`` block of ``t`` far from ``t`` in ``x_i``.

    On the closed block ``[t(d), t(d) + 3**-(d*n)]`` the coordinate covers an
    interval of length ``3**-d`` whose ends are taken at the block ends, so
    the farther end gives ``|x_i(t) - x_i(u)| >= 3**-d / 2``.

    Returns ``(u, dx, ratio)`` with ``dx`` exact and ``ratio = |dx| / |t - u|``.
    """
    _check_row(n, i)
    if d < 1:
        raise DomainError(f"block depth must be >= 1, got {d}")
    head = t.digits(d * n)
    J = max(d, -(-len(t.prefix) // n))
    x_t = coordinate(t, n, i, J).to_fraction()
    t_val = _value(t)
    best = None
    for u in (DigitSeq(head, Tail.ZERO), DigitSeq(head, Tail.TWO)):
        dx = coordinate(u, n, i, J).to_fraction() - x_t
        if best is None or abs(dx) > abs(best[1]):
            best = (u, dx)
    u, dx = best
    dt = abs(_value(u) - t_val)
    ratio = float(abs(dx) / dt) if dt else float("inf")
    return u, dx, ratio


def _value(t: DigitSeq) -> Fraction:
    return to_triadic(t).to_fraction()


# --- box counting -----------------------------------------------------------


@dataclass
class DimensionEstimate:
    n: int
    i: int
    levels: List[int]
    box_counts: List[int]
    slope: float
    intercept: float

    @property
    def expected(self) -> Fraction:
        return 2 - Fraction(1, self.n)


def box_count(n: int, i: int, L: int, budget: Optional[int] = None) -> int:
    """Boxes of side ``3**-L`` met by the graph of ``x_i``.

    Each parameter cell of length ``3**-(n*L)`` lies in one box column and
    its graph crosses exactly one box row (see :func:`grid_coordinate`), so
    the count is the number of distinct (column, row) pairs.
    """
    digits, _ = grid_coordinate(n, i, L, budget)
    column = np.arange(digits.size, dtype=np.int64) // 3 ** ((n - 1) * L)
    return int(np.unique(column * 3**L + digits).size)


def box_counting(
    n: int, i: int, levels: Sequence[int], budget: Optional[int] = None
) -> DimensionEstimate:
    """Least-squares slope of ``log_3 N(L)`` against ``L``.

    Counts that are exact powers of 3 enter the fit as exact integers, so a
    slope such as 8/5 comes out as exactly ``1.6``.
    """
    levels = list(levels)
    if len(levels) < 2 or len(set(levels)) < 2:
        raise DomainError("box counting needs at least two distinct levels")
    counts = [box_count(n, i, L, budget) for L in levels]
    slope, intercept = _fit_line(levels, [_log3(c) for c in counts])
    return DimensionEstimate(n, i, levels, counts, float(slope), float(intercept))


def _log3(count: int) -> Fraction:
    e = round(math.log(count, 3))
    if 3**e == count:
        return Fraction(e)
    return Fraction(math.log(count, 3))


def _fit_line(xs: Sequence[int], ys: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
    k = len(xs)
    mx = Fraction(sum(xs), k)
    my = sum(ys, Fraction(0)) / k
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    return slope, my - slope * mx


def period_slope(n: int, i: int, L: int, budget: Optional[int] = None) -> Fraction:
    """``(log_3 N(L + n) - log_3 N(L)) / n``, which is free of the period-n ripple."""
    return (_log3(box_count(n, i, L + n, budget)) - _log3(box_count(n, i, L, budget))) / n


# --- random parameters --------------------------------------------------------


def random_digitseq(rng: random.Random, max_len: int, canonical: bool = True) -> DigitSeq:
    """Uniform random prefix of length ``0..max_len``; canonical unless asked otherwise."""
    m = rng.randint(0, max_len)
    prefix = [rng.randrange(3) for _ in range(m)]
    if canonical:
        while prefix and prefix[-1] == 0:
            prefix.pop()
        return DigitSeq(tuple(prefix), Tail.ZERO)
    return DigitSeq(tuple(prefix), Tail(rng.choice((0, 2))))
