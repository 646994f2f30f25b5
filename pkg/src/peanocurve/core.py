"""Exact evaluation of the n-dimensional Peano curve.

Digit ``t_k`` of the parameter sits at row ``i`` and column ``j`` of the
digit matrix, with ``k = i + j*n`` (1-based ``i``, 0-based ``j``).  The
j-th ternary digit of coordinate ``x_i`` is ``t_k`` or ``2 - t_k`` depending
on the parity of

    S_k = (sum of all digits before position k)
          - (sum of the row-i digits before column j).
"""

from __future__ import annotations

import math
from typing import List, Sequence, Tuple

from .errors import DomainError
from .ternary import DigitSeq, TriadicRational

Point = Tuple[TriadicRational, ...]


def check_dim(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {n!r}")


def _check_row(n: int, i: int) -> None:
    check_dim(n)
    if not 1 <= i <= n:
        raise DomainError(f"coordinate index must lie in 1..{n}, got {i}")


def xi_apply(parity: int, a: int) -> int:
    """Apply the digit complement ``a -> 2 - a`` ``parity`` times."""
    return 2 - a if parity & 1 else a


def s_value(t: DigitSeq, n: int, i: int, j: int) -> int:
    """``S_{i+jn}(t)``, summed directly from its definition."""
    _check_row(n, i)
    if j < 0:
        raise DomainError(f"column index must be >= 0, got {j}")
    k = i + j * n
    return sum(t.digit(q) for q in range(1, k + 1)) - sum(
        t.digit(i + s * n) for s in range(j + 1)
    )


class SState:
    """Running digit sums that yield every ``S_k`` in O(1).

    Feed digits in index order with :meth:`push`; :meth:`s` gives the
    S-value for the next position before its digit is pushed.
    """

    __slots__ = ("n", "total", "row_totals", "count")

    def __init__(self, n: int):
        self.n = n
        self.total = 0
        self.row_totals = [0] * n
        self.count = 0

    @property
    def row(self) -> int:
        """0-based row of the next digit position."""
        return self.count % self.n

    def s(self) -> int:
        return self.total - self.row_totals[self.row]

    def push(self, digit: int) -> None:
        self.total += digit
        self.row_totals[self.row] += digit
        self.count += 1

    def tail_parity(self, row: int) -> int:
        """Parity of S in column ``count // n`` onward, once only tail digits remain.

        Valid when ``count`` is a multiple of ``n``.  Each further column of
        constant digit c changes S by c*(n-1), which is even for c in {0, 2}.
        """
        return (self.total - self.row_totals[row]) & 1


def min_depth(t: DigitSeq, n: int) -> int:
    """Smallest column depth J whose n*J digits contain the whole prefix."""
    return -(-len(t.prefix) // n)


def _check_depth(t: DigitSeq, n: int, J: int) -> None:
    need = min_depth(t, n)
    if J < need:
        raise DomainError(
            f"depth {J} too small: prefix of length {len(t.prefix)} needs "
            f"at least {need} columns for n={n}"
        )


def output_digits(t: DigitSeq, n: int, J: int) -> Tuple[List[List[int]], List[int]]:
    """Row-wise output digits of all coordinates over the first ``J`` columns.

    Returns ``(rows, tails)``: ``rows[i][j]`` is the j-th ternary digit of
    ``x_{i+1}`` and ``tails[i]`` is the constant digit that follows.
    """
    check_dim(n)
    _check_depth(t, n, J)
    state = SState(n)
    rows = [[] for _ in range(n)]
    for digit in t.digits(n * J):
        rows[state.row].append(xi_apply(state.s(), digit))
        state.push(digit)
    c = int(t.tail)
    tails = [xi_apply(state.tail_parity(r), c) for r in range(n)]
    return rows, tails


def _digits_value(digits: Sequence[int], tail: int) -> TriadicRational:
    numerator = 0
    for d in digits:
        numerator = 3 * numerator + d
    # a tail digit of 2 adds 3^-J; 0 adds nothing (1 never occurs)
    return TriadicRational(numerator + (tail == 2), len(digits))


def coordinate(t: DigitSeq, n: int, i: int, J: int) -> TriadicRational:
    """Exact ``x_i(t)``; ``J`` columns must cover the digit prefix."""
    _check_row(n, i)
    rows, tails = output_digits(t, n, J)
    return _digits_value(rows[i - 1], tails[i - 1])


def eval_curve(t: DigitSeq, n: int, J: int) -> Point:
    """The curve point ``(x_1(t), ..., x_n(t))``, every coordinate exact."""
    rows, tails = output_digits(t, n, J)
    return tuple(_digits_value(r, c) for r, c in zip(rows, tails))


def decimal_places(depth: int) -> int:
    """Decimal digits needed to tell apart values at ternary depth ``depth``."""
    return math.ceil(depth * math.log10(3)) + 2
