import pytest
from hypothesis import given, strategies as st

from quadco import quadratic as qd
from quadco import singer as sg
from quadco.additive import alpha
from quadco.errors import BadMembership, NegativeExcess, NotInS
from quadco.gf2 import PolyF2, binom_mod2
from quadco.quadratic import Window

x, y = PolyF2.var(sg.X), PolyF2.var(sg.Y)
pairs = st.tuples(st.integers(-20, 20), st.integers(-10, 10))


def text(p):
    return p.to_text(sg.XY_NAMES)


def test_index_pair():
    p = sg.IndexPair(7, 2)
    assert (p.excess, p.degree, p.in_s) == (3, 9, True)
    assert p.shift() == (9, 3)
    assert sg.IndexPair(3, 0).shift(2) == (7, 2)
    assert not sg.IndexPair(1, 1).in_s


@given(pairs)
def test_shift_preserves_membership(p):
    q = sg.IndexPair(*p)
    assert q.shift().in_s == q.in_s
    assert q.shift(-3).in_s == q.in_s
    if q.in_s:
        assert sg.IndexPair(q.excess, 0).shift(q.j) == q


def test_h_polynomials():
    assert sg.h_polynomial(0).body == PolyF2.one()
    assert sg.h_polynomial(1).body == alpha(1)
    assert sg.h_polynomial(2).body == alpha(1) ** 2
    assert sg.h_polynomial(3).body == alpha(1) ** 3 + alpha(2)
    assert sg.h_polynomial(3).to_text() == "alpha1^3 + alpha2"
    with pytest.raises(NegativeExcess):
        sg.h_polynomial(-1)


def test_h_polynomial_homogeneous():
    weights = {alpha(1).variables().pop(): 1, alpha(2).variables().pop(): 3}
    for e in range(0, 30):
        assert sg.h_polynomial(e).body.degrees(weights) <= {e}


def test_h_images():
    assert sg.h_image(3, 0) == x**3 + x * y**2 + y**3
    assert sg.h_image(2, 1) == x**2 * y
    assert sg.h_image(0, 0) == 1
    assert text(sg.h_image(2, 1)) == "x^2 y"
    with pytest.raises(NotInS):
        sg.h_image(1, 1)


def test_excess_zero_rows():
    for j in range(-5, 6):
        assert sg.h_image(2 * j, j) == PolyF2.monomial({sg.X: 2 * j, sg.Y: j})
        assert sg.f_row_support((2 * j, j)) == [] or all(
            not sg.f_gamma((2 * j, j), t) for t in sg.f_row_support((2 * j, j))
        )


def test_closed_form_matches_recursion():
    for e in range(0, 40):
        assert sg.h_closed_form(e) == sg.h_image(e, 0)


def test_f_values():
    assert sg.f_gamma((3, 0), (1, 2)) == 1
    assert sg.f_gamma((3, 0), (0, 3)) == 1
    assert all(sg.f_gamma((2, 1), (9 - m, m)) == 0 for m in range(0, 3) if 9 - m < 2 * m)
    assert sg.f_gamma((3, 0), (-1, 2)) == 0
    with pytest.raises(BadMembership):
        sg.f_gamma((1, 1), (0, 2))
    with pytest.raises(BadMembership):
        sg.f_gamma((3, 0), (3, 0))


def test_row_supports():
    assert sorted(sg.f_row_support((3, 0))) == [(0, 3), (1, 2)]
    assert sg.f_row_support((2, 1)) == []
    assert sg.f_row_support((0, 0)) == []
    with pytest.raises(NotInS):
        sg.f_row_support((0, 1))


def brute_row(s, radius=40):
    i, j = s
    out = set()
    for m in range(-radius, radius):
        t = (i + j - m, m)
        if not sg.in_s(t) and sg.f_gamma(s, t):
            out.add(t)
    return out


def brute_col(t, radius=40):
    l, m = t
    out = set()
    for j in range(-radius, radius):
        s = (l + m - j, j)
        if sg.in_s(s) and sg.f_gamma(s, t):
            out.add(s)
    return out


def test_supports_complete_by_scan():
    for i in range(-12, 13):
        for j in range(-12, 13):
            p = (i, j)
            if sg.in_s(p):
                assert brute_row(p) <= set(sg.f_row_support(p))
            else:
                nonzero = brute_col(p)
                tight = set(sg.f_col_support(p))
                wide = set(sg.f_col_range_wide(p))
                assert nonzero <= tight <= wide


def test_order_property():
    for i in range(-15, 16):
        for j in range(-15, 16):
            if sg.in_s((i, j)):
                for l, m in sg.f_row_support((i, j)):
                    assert l < i


@given(pairs, pairs)
def test_shift_equivariance(s, t):
    if sg.in_s(s) and not sg.in_s(t):
        ds, dt = sg.IndexPair(*s).shift(), sg.IndexPair(*t).shift()
        assert sg.f_gamma(ds, dt) == sg.f_gamma(s, t)


@given(pairs, st.integers(-10, 10))
def test_binomial_symmetry_identity(s, m):
    i, j = s
    l = i + j - m
    if sg.in_s(s) and not sg.in_s((l, m)):
        assert binom_mod2(m - j - 1, m + j - l - 1) == binom_mod2(m - j - 1, i - m - j)


def test_cross_validation():
    report = sg.f_cross_validate(6, 4)
    assert report.ok and report.rows == 7 * 9
    assert sg.f_cross_validate_window(Window(-8, 8)).ok
    assert sg.f_cross_validate_row((3, 0)) == []


def test_h_image_has_one_s_monomial_and_is_homogeneous():
    for e in range(0, 15):
        for j in range(-4, 5):
            img = sg.h_image(e + 2 * j, j)
            exps = [sg.xy_exponents(m) for m in img]
            assert {a + b for a, b in exps} == {e + 3 * j}
            assert [p for p in exps if sg.in_s(p)] == [(e + 2 * j, j)]


def test_gamma_spec():
    spec = sg.gamma_spec()
    win = Window(-10, 10)
    assert qd.check_strict_self_dual(spec, win)
    assert qd.check_pullback_admissible(spec, sg.is_natural, Window(-20, 20))
    assert qd.check_pushforward_admissible(spec, lambda k: k <= 1, Window(-20, 20))
    assert qd.audit_supports(spec, win) == []
    dual = qd.transpose_dual(spec, win)
    assert dual.coefficient((1, 2), (3, 0)) == 1
    assert spec.f((3, 0), (1, 2)) == 1 == spec.f((0, -1), (-2, 1))
    assert qd.relation_vector(spec, (3, 0)).terms() == ((3, 0), (0, 3), (1, 2))
    assert qd.relation_vector(spec, (2, 1)).terms() == ((2, 1),)


def test_pushforward_to_naturals_is_not_admissible():
    spec = sg.gamma_spec()
    r = qd.check_pushforward_admissible(spec, sg.is_natural, Window(-20, 20))
    assert not r
    s, t = r.witness
    assert spec.coefficient(s, t) == 1 and min(s) < 0 <= min(t)


def test_bplus_words():
    spec = sg.gamma_plus_spec()
    assert qd.enumerate_admissible_words(spec, 2, 3, Window(0, 3)) == [(2, 1), (3, 0)]
    assert len(qd.enumerate_admissible_words(spec, 3, 7, Window(0, 7))) == 4


def test_bplus_weak_copbw_small():
    from quadco.additive import bplus_slice

    spec = sg.gamma_plus_spec()
    for d in range(0, 16):
        r = qd.weak_copbw_check(spec, 3, d, Window(0, d), coalgebra_slices=bplus_slice)
        assert r.ok and r.coalgebra_matches
    r = qd.weak_copbw_check(spec, 3, 7, Window(0, 7))
    assert (r.intersection_dim, r.admissible_count) == (4, 4)


def test_bplus_slice_dense_agrees():
    spec = sg.gamma_plus_spec()
    for n in (3, 4):
        for d in range(0, 11):
            fast = qd.coalgebra_slice(spec, n, d, Window(0, d))
            dense = qd.coalgebra_slice_dense(spec, n, d, Window(0, d))
            assert fast.dim == len(dense.rows)


def test_surjectivity_on_singer():
    spec = sg.gamma_spec()
    r = qd.surjectivity_check(spec, sg.is_natural, 2, 3, Window(-5, 20))
    assert r.ok and r.restricted_count == r.sub_count == 2
    r = qd.surjectivity_check(spec, lambda k: k <= 1, 2, -3, Window(-5, 20))
    assert r.ok and r.pushforward_admissible and r.sub_count == 4


@given(st.sets(st.integers(-6, 6)))
def test_reciprocity_random_sets(J):
    r = qd.reciprocity_check(sg.gamma_spec(), J, Window(-6, 6))
    assert r.agree


def test_reciprocity_on_rays_sees_both_outcomes():
    spec = sg.gamma_spec()
    seen = set()
    for a in range(-4, 5):
        r = qd.reciprocity_check(spec, lambda k, a=a: k >= a, Window(-10, 10))
        assert r.agree
        assert r.pullback.ok == (a >= 0)
        seen.add(r.pullback.ok)
    assert seen == {True, False}
