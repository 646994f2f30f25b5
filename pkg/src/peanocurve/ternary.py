"""Exact ternary digit sequences and triadic rationals.

A parameter ``t`` in [0, 1] is held as a finite digit prefix followed by a
constant tail of 0s or 2s.  Every triadic rational ``N/3**m`` has exactly
these representations, and all values handled here are triadic, so every
operation is exact integer arithmetic.

Digit strings use the form ``0.t1t2t3...`` in base 3 with an optional tail
suffix ``(0)`` or ``(2)``; ``0.110(2)`` is the prefix ``[1, 1, 0]`` followed
by 2s forever.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .errors import DomainError

DIGITS = (0, 1, 2)


class Tail(enum.IntEnum):
    """The constant digit repeated after a DigitSeq prefix."""

    ZERO = 0
    TWO = 2


def _strip3(numerator: int, exponent: int) -> Tuple[int, int]:
    if numerator == 0:
        return 0, 0
    while exponent > 0 and numerator % 3 == 0:
        numerator //= 3
        exponent -= 1
    return numerator, exponent


@functools.total_ordering
class TriadicRational:
    """The exact value ``numerator / 3**exponent`` in [0, 1], kept reduced.

    Two instances compare equal iff they denote the same number, whatever
    exponent they were built with.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int, exponent: int = 0):
        numerator, exponent = int(numerator), int(exponent)
        if exponent < 0:
            raise DomainError(f"exponent must be nonnegative, got {exponent}")
        if not 0 <= numerator <= 3**exponent:
            raise DomainError(f"{numerator}/3^{exponent} is outside [0, 1]")
        self.numerator, self.exponent = _strip3(numerator, exponent)

    @classmethod
    def from_fraction(cls, value) -> "TriadicRational":
        """Convert a Fraction (or int) whose denominator is a power of 3."""
        value = Fraction(value)
        den, exponent = value.denominator, 0
        while den % 3 == 0:
            den //= 3
            exponent += 1
        if den != 1:
            raise DomainError(f"{value} is not a triadic rational")
        return cls(value.numerator, exponent)

    def scaled(self, exponent: int) -> int:
        """Numerator of this value written over ``3**exponent``."""
        if exponent < self.exponent:
            raise DomainError(
                f"{self} cannot be written over 3^{exponent}"
            )
        return self.numerator * 3 ** (exponent - self.exponent)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 3**self.exponent)

    def __float__(self) -> float:
        return self.numerator / 3**self.exponent

    def __eq__(self, other):
        if isinstance(other, TriadicRational):
            return (self.numerator, self.exponent) == (other.numerator, other.exponent)
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, TriadicRational):
            m = max(self.exponent, other.exponent)
            return self.scaled(m) < other.scaled(m)
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() < other
        return NotImplemented

    def __hash__(self):
        return hash(self.to_fraction())

    def __repr__(self):
        return f"TriadicRational({self.numerator}, {self.exponent})"

    def __str__(self):
        return str(self.to_fraction())


Number = Union[TriadicRational, Fraction, int]


def as_triadic(value: Number) -> TriadicRational:
    if isinstance(value, TriadicRational):
        return value
    return TriadicRational.from_fraction(value)


@dataclass(frozen=True)
class DigitSeq:
    """Ternary digits ``t_1 t_2 ...``: a finite prefix then a constant tail."""

    prefix: Tuple[int, ...] = ()
    tail: Tail = Tail.ZERO

    def __post_init__(self):
        prefix = tuple(int(d) for d in self.prefix)
        for d in prefix:
            if d not in DIGITS:
                raise DomainError(f"ternary digit must be 0, 1 or 2, got {d}")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", Tail(self.tail))

    def digit(self, k: int) -> int:
        """The digit ``t_k`` with 1-based index ``k``."""
        if k < 1:
            raise DomainError(f"digit index is 1-based, got {k}")
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        return int(self.tail)

    def digits(self, m: int) -> Tuple[int, ...]:
        """The first ``m`` digits, reading into the tail when needed."""
        if m <= len(self.prefix):
            return self.prefix[:m]
        return self.prefix + (int(self.tail),) * (m - len(self.prefix))

    @property
    def is_canonical(self) -> bool:
        if self.tail is Tail.ZERO:
            return not self.prefix or self.prefix[-1] != 0
        # 1 has no zero-tail representation
        return self.prefix == ()

    def canonical(self) -> "DigitSeq":
        return from_triadic(to_triadic(self))

    def __str__(self):
        body = "".join(map(str, self.prefix))
        if self.tail is Tail.TWO:
            return f"0.{body}(2)"
        return f"0.{body}" if body else "0"

    @classmethod
    def parse(cls, text: str) -> "DigitSeq":
        return parse_digits(text)


_DIGIT_RE = re.compile(r"^0(?:\.([012]*)(?:\(([02])\))?)?$")


def parse_digits(text: str) -> DigitSeq:
    """Parse ``0.t1t2...`` with an optional ``(0)``/``(2)`` tail suffix."""
    match = _DIGIT_RE.match(text.strip())
    if match is None:
        raise DomainError(f"not a ternary digit string: {text!r}")
    body, tail = match.group(1) or "", match.group(2) or "0"
    return DigitSeq(tuple(int(c) for c in body), Tail(int(tail)))


def to_triadic(d: DigitSeq) -> TriadicRational:
    m = len(d.prefix)
    numerator = 0
    for digit in d.prefix:
        numerator = 3 * numerator + digit
    if d.tail is Tail.TWO:
        # sum_{k>m} 2/3^k == 3^-m
        numerator += 1
    return TriadicRational(numerator, m)


def from_triadic(value: Number) -> DigitSeq:
    """Canonical digits of ``value``: zero tail, no trailing zero digits.

    The value 1 has no zero-tail form and comes back as ``0.(2)``.
    """
    value = as_triadic(value)
    if value.numerator == 3**value.exponent and value.numerator != 0:
        return DigitSeq((), Tail.TWO)
    numerator, digits = value.numerator, []
    for _ in range(value.exponent):
        numerator, r = divmod(numerator, 3)
        digits.append(r)
    return DigitSeq(tuple(reversed(digits)), Tail.ZERO)


def alternate_rep(d: DigitSeq) -> DigitSeq:
    """The other ternary representation of a nonzero triadic value.

    ``(..., a, ZERO)`` with ``a != 0`` maps to ``(..., a - 1, TWO)`` and back.
    """
    prefix = list(d.prefix)
    if d.tail is Tail.ZERO:
        while prefix and prefix[-1] == 0:
            prefix.pop()
        if not prefix:
            raise DomainError("0 has a single ternary representation")
        prefix[-1] -= 1
        return DigitSeq(tuple(prefix), Tail.TWO)
    while prefix and prefix[-1] == 2:
        prefix.pop()
    if not prefix:
        raise DomainError("1 has a single ternary representation")
    prefix[-1] += 1
    return DigitSeq(tuple(prefix), Tail.ZERO)


def extend(d: DigitSeq, m: int) -> DigitSeq:
    """Materialize the prefix to length ``m`` by copying tail digits."""
    if m < len(d.prefix):
        raise DomainError(
            f"cannot extend a prefix of length {len(d.prefix)} to {m}"
        )
    return DigitSeq(d.digits(m), d.tail)


def from_digits(digits: Iterable[int], tail: Tail = Tail.ZERO) -> DigitSeq:
    return DigitSeq(tuple(digits), tail)
