import pytest
from hypothesis import given, strategies as st

from quadco.errors import NonInvertibleImage
from quadco.gf2 import PolyF2, mono, poly_substitute

x, y, z = PolyF2.var(1), PolyF2.var(2), PolyF2.var(3)
NAMES = {1: "x", 2: "y", 3: "z"}

monomials = st.dictionaries(st.integers(1, 3), st.integers(-3, 4), max_size=3)
polys = st.lists(monomials, max_size=5).map(lambda ms: PolyF2(mono(m) for m in ms))
polynomials = st.lists(st.dictionaries(st.integers(1, 3), st.integers(0, 4), max_size=3), max_size=5).map(
    lambda ms: PolyF2(mono(m) for m in ms)
)


def test_characteristic_two():
    assert x + x == PolyF2.zero()
    assert (x + y) ** 2 == x**2 + y**2
    assert (x + y) * (x + y) == x * x + y * y


def test_laurent_monomial_inverse():
    m = PolyF2.monomial({1: 2, 2: 1})
    assert m * m**-1 == 1
    assert (m**-2).is_laurent()


def test_negative_power_of_sum_rejected():
    with pytest.raises(NonInvertibleImage):
        (x + y) ** -1


def test_substitute_into_laurent_needs_monomial_image():
    p = PolyF2.var(1, -1)
    with pytest.raises(NonInvertibleImage):
        poly_substitute(p, {1: x + y})
    assert poly_substitute(p, {1: y * y}) == PolyF2.var(2, -2)


def test_unmapped_variables_stay_put():
    assert poly_substitute(x * z, {1: y}) == y * z


def test_text_and_json():
    p = x**2 * y + PolyF2.one()
    assert p.to_text(NAMES) == "x^2 y + 1"
    assert {"x": 2, "y": 1} in p.to_json(NAMES)
    assert PolyF2.zero().to_text(NAMES) == "0"


def test_homogeneity():
    assert (x**2 * y + y**3).is_homogeneous()
    assert not (x + y**2).is_homogeneous()
    assert (x**2 + y).is_homogeneous({1: 1, 2: 2})


def test_set_zero():
    assert (x * y + z).set_zero(1) == z


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_frobenius_is_squaring(a):
    assert a.frobenius() == a * a
    assert a.frobenius(2) == a**4


@given(polynomials, polynomials, polys)
def test_substitution_is_a_ring_map(a, b, img):
    assignment = {3: img}
    assert poly_substitute(a * b, assignment) == poly_substitute(a, assignment) * poly_substitute(b, assignment)
    assert poly_substitute(a + b, assignment) == poly_substitute(a, assignment) + poly_substitute(b, assignment)
