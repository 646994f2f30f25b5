"""Point-to-parameter construction and space-filling-curve keys.

:func:`invert` builds parameter digits one index at a time, choosing each
digit so that the complement rule in :mod:`peanocurve.core` maps it back to
the requested coordinate digit.  The curve is not injective, so this picks
one preimage; boundary points are pinned by canonicalizing the target rows
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Point, SState, check_dim, eval_curve, xi_apply
from .errors import DomainError
from .ternary import DigitSeq, Number, Tail, as_triadic, from_triadic

PointDigits = Sequence[DigitSeq]


@dataclass(frozen=True, order=True)
class SfcKey:
    """Parameter cell ``index / 3**(n*depth)`` of a point at column depth ``depth``."""

    index: int
    depth: int

    def __str__(self):
        return f"{self.index}@{self.depth}"

    @classmethod
    def parse(cls, text: str) -> "SfcKey":
        index, sep, depth = text.partition("@")
        if not sep:
            raise DomainError(f"key must look like index@depth, got {text!r}")
        return cls(int(index), int(depth))


def point_digits(coords: Sequence[Number]) -> tuple:
    """Canonical digit rows for a point given as triadic numbers."""
    return tuple(from_triadic(as_triadic(c)) for c in coords)


def _target_rows(p: PointDigits, n: int, J: int):
    check_dim(n)
    if len(p) != n:
        raise DomainError(f"expected {n} coordinate rows, got {len(p)}")
    rows = []
    for row in p:
        if not isinstance(row, DigitSeq):
            raise DomainError(f"coordinate rows must be DigitSeq, got {row!r}")
        # value 1 keeps its 0.(2) form; it has no zero-tail representation
        row = row.canonical()
        rows.append(row.digits(J))
    return rows


def invert(p: PointDigits, n: int, J: int) -> DigitSeq:
    """A parameter ``t`` whose first ``J`` output digits match every target row.

    The result has a zero tail and a prefix of length ``n*J``; each
    coordinate of ``eval_curve(t)`` is within ``3**-J`` of the target.
    """
    if J < 1:
        raise DomainError(f"depth must be >= 1, got {J}")
    rows = _target_rows(p, n, J)
    state = SState(n)
    digits = []
    for j in range(J):
        for i in range(n):
            # S here depends only on digits already placed
            t = xi_apply(state.s(), rows[i][j])
            digits.append(t)
            state.push(t)
    return DigitSeq(tuple(digits), Tail.ZERO)


def key_encode(p: PointDigits, n: int, J: int) -> SfcKey:
    t = invert(p, n, J)
    index = 0
    for d in t.prefix:
        index = 3 * index + d
    return SfcKey(index, J)


def encode_point(coords: Sequence[Number], n: int, J: int) -> SfcKey:
    return key_encode(point_digits(coords), n, J)


def key_decode(k: SfcKey, n: int) -> Point:
    """Curve point at the left corner of the key's parameter cell."""
    check_dim(n)
    if k.depth < 0:
        raise DomainError(f"key depth must be >= 0, got {k.depth}")
    m = n * k.depth
    if not 0 <= k.index < 3**m:
        raise DomainError(f"key index {k.index} out of range for 3^{m} cells")
    digits = []
    index = k.index
    for _ in range(m):
        index, r = divmod(index, 3)
        digits.append(r)
    t = DigitSeq(tuple(reversed(digits)), Tail.ZERO)
    return eval_curve(t, n, k.depth)
