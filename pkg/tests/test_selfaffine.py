import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from peanocurve.core import coordinate, s_value
from peanocurve.errors import DomainError
from peanocurve.selfaffine import (
    check_self_affinity,
    classic_peano_s,
    decompose,
    self_affine_params,
)
from peanocurve.ternary import DigitSeq, Tail, parse_digits, to_triadic

P = parse_digits


def test_decompose_hand_example():
    dec = decompose(P("0.1110"), 2, 1, 1)
    assert dec.anchor == Fraction(4, 9)
    assert to_triadic(dec.shifted) == Fraction(1, 3)
    assert dec.sigma == 1
    assert dec.sign == -1


@pytest.mark.parametrize("n, i, k", [(2, 1, 1), (3, 2, 2), (4, 4, 3)])
def test_decompose_zero(n, i, k):
    dec = decompose(DigitSeq(), n, i, k)
    assert (dec.anchor, to_triadic(dec.shifted), dec.sigma, dec.sign) == (0, 0, 0, 1)


def test_decompose_cut_at_last_digit():
    dec = decompose(P("0.1000"), 2, 1, 1)
    assert dec.anchor == Fraction(1, 3)
    assert to_triadic(dec.shifted) == 0
    assert dec.sigma == 0 and dec.sign == 1


def test_decompose_errors():
    with pytest.raises(DomainError):
        decompose(P("0.1"), 2, 1, 0)
    with pytest.raises(DomainError):
        decompose(P("0.1"), 2, 3, 1)


def test_self_affinity_hand_example():
    t = P("0.1110")
    assert coordinate(t, 2, 1, 3) == Fraction(5, 9)
    assert coordinate(P("0.11"), 2, 1, 3) == Fraction(2, 3)
    assert coordinate(P("0.1"), 2, 1, 3) == Fraction(1, 3)
    assert 3 * (Fraction(5, 9) - Fraction(2, 3)) == -Fraction(1, 3)
    assert check_self_affinity(t, 2, 1, 1, 3) == 0


@pytest.mark.parametrize("n, i, k", [(2, 1, 1), (3, 3, 2), (4, 2, 4)])
def test_self_affinity_at_zero(n, i, k):
    assert check_self_affinity(DigitSeq(), n, i, k, k) == 0


def test_self_affinity_random_nine_digits():
    rng = random.Random(9)
    for _ in range(50):
        t = DigitSeq(tuple(rng.randrange(3) for _ in range(9)))
        assert check_self_affinity(t, 3, 2, 2, 3) == 0


def test_self_affinity_depth_check():
    with pytest.raises(DomainError):
        check_self_affinity(P("0.111111"), 2, 1, 1, 2)


@st.composite
def cuts(draw):
    n = draw(st.integers(2, 4))
    cols = draw(st.integers(1, 12))
    prefix = draw(st.lists(st.integers(0, 2), max_size=n * cols))
    tail = draw(st.sampled_from([Tail.ZERO, Tail.TWO]))
    return n, cols, DigitSeq(tuple(prefix), tail), draw(st.integers(1, n)), draw(st.integers(1, cols))


@given(cuts())
def test_self_affinity_is_exact(c):
    n, cols, t, i, k = c
    assert check_self_affinity(t, n, i, k, cols) == 0


@given(cuts())
def test_sigma_is_s_value_after_the_cut(c):
    n, cols, t, i, k = c
    dec = decompose(t, n, i, k)
    assert dec.sigma >= 0
    # sigma == S_{i+(k+j)n}(t(k)) for every j >= 0
    head = DigitSeq(t.digits(k * n))
    for j in range(3):
        assert dec.sigma == s_value(head, n, i, k + j)
    assert to_triadic(dec.shifted).to_fraction() == 3 ** (k * n) * (
        to_triadic(t).to_fraction() - dec.anchor.to_fraction()
    )


@given(cuts())
def test_increment_form_with_unit_sign(c):
    """x(s r^-k + h) - x(s r^-k) = eps r^(-k/n) x(r^k h), eps = (-1)^sigma."""
    n, cols, t, i, k = c
    H, r = self_affine_params(n)
    dec = decompose(t, n, i, k)
    lhs = coordinate(t, n, i, cols).to_fraction() - coordinate(
        DigitSeq(t.digits(k * n)), n, i, cols
    ).to_fraction()
    x_h = coordinate(dec.shifted, n, i, cols - k).to_fraction()
    # r^(-kH) == 3^-k since r = 3^n and H = 1/n
    assert H == Fraction(1, n) and Fraction(1, 3**k) ** n == Fraction(1, r**k)
    if x_h == 0:
        assert lhs == 0
        return
    eps = lhs * 3**k / x_h
    assert eps in (-1, 1)
    assert eps == dec.sign


@pytest.mark.parametrize("n, expected", [(2, (Fraction(1, 2), 9)), (3, (Fraction(1, 3), 27)), (5, (Fraction(1, 5), 243))])
def test_self_affine_params(n, expected):
    assert self_affine_params(n) == expected


@pytest.mark.parametrize("t, i, j, expected", [("0.1110", 1, 1, 1), ("0.1000", 2, 0, 1), ("0.2222", 1, 0, 0)])
def test_classic_peano_s_examples(t, i, j, expected):
    assert classic_peano_s(P(t), i, j) == expected


def test_classic_peano_s_matches_general_formula_small():
    for length in range(0, 7):
        for word in itertools.product(range(3), repeat=length):
            t = DigitSeq(word)
            for j in range(length // 2 + 1):
                for i in (1, 2):
                    assert classic_peano_s(t, i, j) == s_value(t, 2, i, j)


def test_classic_peano_s_row_check():
    with pytest.raises(DomainError):
        classic_peano_s(DigitSeq(), 3, 0)
