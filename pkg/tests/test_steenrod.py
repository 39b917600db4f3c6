import random

import pytest
from hypothesis import given, settings, strategies as st

from quadco import steenrod as sq
from quadco.errors import BadIndex, StepLimitExceeded, UnboundedWithoutWindow
from quadco.quadratic import Window
from quadco.steenrod import QElement

words = st.lists(st.integers(-6, 12), min_size=1, max_size=4).map(tuple)


def test_adem_expand_examples():
    assert sq.adem_expand(1, 1) == QElement.zero()
    assert sq.adem_expand(2, 2) == QElement.of((3, 1))
    assert sq.adem_expand(0, 5) == QElement.of((9, -4), (8, -3), (7, -2), (5, 0))
    assert sq.adem_expand(4, 2) == QElement.of((4, 2))


@given(st.integers(-15, 15), st.integers(-15, 15))
def test_adem_output_shape(u, v):
    for a, b in sq.adem_expand(u, v):
        assert a + b == u + v
        assert a >= 2 * b
        if u < 2 * v:
            assert a > u


def test_first_form_agrees():
    for n in range(-12, 13):
        for k in range(-12, 13):
            rhs = sq.adem_first_form(n, k)
            if rhs is None:
                assert 2 * k - 1 - n >= 2 * k
            else:
                assert rhs == sq.adem_expand(2 * k - 1 - n, k)


def test_classical_adem_small():
    assert sq.classical_adem(1, 1) == QElement.zero()
    assert sq.classical_adem(2, 2) == QElement.of((3, 1))
    assert sq.classical_adem(1, 2) == QElement.of((3, 0))
    assert sq.classical_adem(2, 3) == QElement.of((5, 0), (4, 1))


def test_normalize_examples():
    assert sq.normalize((3, 1)) == (QElement.of((3, 1)), 0)
    assert sq.normalize((2, 2))[0] == QElement.of((3, 1))
    assert sq.normalize((1, 2))[0] == QElement.of((3, 0))
    assert sq.normalize(())[0] == QElement.one()


def test_step_limit():
    with pytest.raises(StepLimitExceeded):
        sq.normalize((1, 2, 4), max_steps=1)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        sq.normalize((1, 2), strategy="middle")


@settings(max_examples=200)
@given(words)
def test_confluence_and_invariants(w):
    a, _ = sq.normalize(w, "leftmost")
    b, _ = sq.normalize(w, "rightmost")
    assert a == b
    assert a.is_admissible()
    for m in a.monomials:
        assert len(m) == len(w) and sum(m) == sum(w)


def test_confluence_seeded_batch():
    rng = random.Random(7)
    for _ in range(300):
        w = tuple(rng.randint(-6, 12) for _ in range(rng.randint(1, 4)))
        assert sq.normalize(w, "leftmost")[0] == sq.normalize(w, "rightmost")[0]


def test_multiply():
    y2 = QElement.gen(2)
    assert y2 * y2 == QElement.of((3, 1))
    assert QElement.one() * y2 == y2
    assert sq.multiply(QElement.zero(), y2) == QElement.zero()


def test_associativity_on_generators():
    rng = random.Random(3)
    for _ in range(60):
        a, b, c = (QElement.gen(rng.randint(-3, 8)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_relations_hold_after_normalizing():
    for u in range(-6, 7):
        for v in range(-6, 7):
            lhs = sq.normalize((u, v))[0]
            assert lhs == sq.adem_expand(u, v)


def test_admissible_counts():
    assert sq.admissible_basis_count(2, 3) == 2
    assert sq.admissible_basis_count(3, 7) == 4
    for n in range(-5, 10):
        assert sq.admissible_basis_count(1, n, nonneg=n >= 0, window=Window(-10, 10)) == 1
    with pytest.raises(UnboundedWithoutWindow):
        sq.admissible_basis_count(2, 3, nonneg=False)
    assert sq.admissible_basis_count(2, -3, nonneg=False, window=Window(-5, 1)) == 4


def test_counts_match_b_plus_dimensions():
    from quadco.additive import alpha_monomials

    for k in range(1, 5):
        for d in range(0, 30):
            assert sq.admissible_basis_count(k, d) == len(alpha_monomials(k, d))


def test_atilde():
    assert sq.atilde_normalize((0, 5)) == QElement.of((5, 0))
    assert sq.atilde_normalize((1, 1)) == QElement.zero()
    assert sq.atilde_normalize((5, 1)) == QElement.of((5, 1))
    with pytest.raises(BadIndex):
        sq.atilde_normalize((-1, 2))


def test_atilde_routes_agree():
    for a in range(0, 13):
        for b in range(0, 13):
            sq.atilde_normalize((a, b))
            for c in range(0, 13, 3):
                sq.atilde_normalize((a, b, c))


def test_relations_match_f():
    report = sq.relations_match_f(Window(-10, 10))
    assert report.ok and report.checked > 0
    assert sq.relation_coefficients_by_scan(1, 2) == {(3, 0)}
    assert sq.relation_coefficients_by_scan(2, 2) == {(3, 1)}


def test_text_forms():
    assert sq.parse_monomial("y2 y-3 y0") == (2, -3, 0)
    assert sq.parse_monomial("y2y2") == (2, 2)
    assert sq.parse_monomial("1") == ()
    with pytest.raises(ValueError):
        sq.parse_monomial("y2 x3")
    assert QElement.zero().lines() == ["0"]
    assert QElement.of((3, 1), (5,)).lines() == ["y5", "y3 y1"]
    assert QElement.of((3, 1)).to_json() == [[3, 1]]
