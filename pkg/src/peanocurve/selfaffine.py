"""Self-affinity of the coordinate functions.

Cutting the parameter after ``k`` columns (``k*n`` digits) splits ``t`` into
an anchor ``t(k)`` and a rescaled remainder ``u = 3**(k*n) * (t - t(k))``.
Then

    3**k * (x_i(t) - x_i(t(k))) == (-1)**sigma * x_i(u)

exactly, where ``sigma`` is the S-sum accumulated over the first ``k``
columns.  Everything here is integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import _check_row, coordinate, min_depth
from .errors import DomainError
from .ternary import DigitSeq, Tail, TriadicRational, to_triadic


@dataclass(frozen=True)
class AffineDecomposition:
    k: int
    anchor: TriadicRational
    shifted: DigitSeq
    sigma: int

    @property
    def sign(self) -> int:
        return -1 if self.sigma & 1 else 1


def decompose(t: DigitSeq, n: int, i: int, k: int) -> AffineDecomposition:
    _check_row(n, i)
    if k < 1:
        raise DomainError(f"column cut k must be >= 1, got {k}")
    cut = k * n
    head = t.digits(cut)
    sigma = sum(head) - sum(head[i - 1 + r * n] for r in range(k))
    anchor = to_triadic(DigitSeq(head, Tail.ZERO))
    shifted = DigitSeq(t.prefix[cut:], t.tail)
    return AffineDecomposition(k, anchor, shifted, sigma)


def check_self_affinity(t: DigitSeq, n: int, i: int, k: int, J: int) -> Fraction:
    """``3**k*(x_i(t) - x_i(t(k))) - sign*x_i(u)``; always exactly zero."""
    dec = decompose(t, n, i, k)
    if J < max(k, min_depth(t, n)):
        raise DomainError(f"depth {J} too small for k={k} and this prefix")
    head = DigitSeq(t.digits(k * n), Tail.ZERO)
    x_t = coordinate(t, n, i, J).to_fraction()
    x_anchor = coordinate(head, n, i, J).to_fraction()
    x_shift = coordinate(dec.shifted, n, i, J - k).to_fraction()
    return 3**k * (x_t - x_anchor) - dec.sign * x_shift


def self_affine_params(n: int):
    """Scale parameter ``H`` and integer base ``r`` of the coordinate functions."""
    if n < 2:
        raise DomainError(f"dimension must be >= 2, got {n}")
    return Fraction(1, n), 3**n


def classic_peano_s(t: DigitSeq, i: int, j: int) -> int:
    """Peano's planar parity sums: even-indexed digits for row 1, odd for row 2.

    Row 1, column j sums t_2, t_4, ..., t_2j; row 2 sums t_1, t_3, ..., t_{2j+1}.
    """
    if i == 1:
        return sum(t.digit(q) for q in range(2, 2 * j + 1, 2))
    if i == 2:
        return sum(t.digit(q) for q in range(1, 2 * j + 2, 2))
    raise DomainError(f"planar curve has rows 1 and 2, got {i}")
