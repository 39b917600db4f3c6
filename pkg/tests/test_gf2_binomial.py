from math import comb

from hypothesis import given, strategies as st

from quadco.gf2 import binom_mod2


def test_small_values():
    assert binom_mod2(5, 3) == 0
    assert binom_mod2(4, 0) == 1
    assert binom_mod2(2, 2) == 1
    assert binom_mod2(1, 1) == 1
    assert binom_mod2(3, 1) == 1


def test_out_of_range_is_zero():
    assert binom_mod2(-1, 0) == 0
    assert binom_mod2(3, -1) == 0
    assert binom_mod2(2, 3) == 0


@given(st.integers(0, 300), st.integers(0, 300))
def test_matches_parity_of_exact_binomial(a, b):
    assert binom_mod2(a, b) == comb(a, b) % 2


@given(st.integers(0, 200), st.integers(0, 200))
def test_symmetry(a, b):
    if b <= a:
        assert binom_mod2(a, b) == binom_mod2(a, a - b)


@given(st.integers(1, 200), st.integers(1, 200))
def test_pascal_rule(a, b):
    assert binom_mod2(a, b) == binom_mod2(a - 1, b) ^ binom_mod2(a - 1, b - 1)
