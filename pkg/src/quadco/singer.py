"""Singer's bialgebra in degree 2: S = {(i, j) : i >= 2j} over Z x Z.

Index k in Z stands for the degree-one basis element alpha_1^k of B_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from quadco.additive import ALPHA, NAMES, alpha
from quadco.errors import BadMembership, NegativeExcess, NotInS
from quadco.gf2 import PolyF2, binom_mod2, poly_substitute
from quadco.quadratic import AdmissibleSpec, Window, restrict

X, Y = 1, 2
XY_NAMES = {X: "x", Y: "y"}


class IndexPair(NamedTuple):
    i: int
    j: int

    @property
    def excess(self) -> int:
        return self.i - 2 * self.j

    @property
    def degree(self) -> int:
        return self.i + self.j

    @property
    def in_s(self) -> bool:
        return self.i >= 2 * self.j

    def shift(self, times: int = 1) -> IndexPair:
        """(i, j) -> (i + 2, j + 1), applied ``times`` times (negative allowed)."""
        return IndexPair(self.i + 2 * times, self.j + times)


def in_s(p) -> bool:
    return p[0] >= 2 * p[1]


def sigma(k: int) -> int:
    return 1 - k


@dataclass(frozen=True)
class HPolynomial:
    excess: int
    body: PolyF2

    def to_text(self) -> str:
        return self.body.to_text(NAMES)


@lru_cache(maxsize=None)
def _h_body(e: int) -> PolyF2:
    if e < 0:
        return PolyF2.zero()
    if e == 0:
        return PolyF2.one()
    return alpha(1) * _h_body(e - 1) + alpha(2) * _h_body(e - 3)


def h_polynomial(e: int) -> HPolynomial:
    """h_{(e,0)} from h_{e+1} = alpha1 h_e + alpha2 h_{e-2}, h_0 = 1."""
    if e < 0:
        raise NegativeExcess(f"excess {e} < 0")
    for k in range(e):  # warm the cache bottom-up to keep recursion shallow
        _h_body(k)
    return HPolynomial(e, _h_body(e))


_XY_ASSIGNMENT = {
    ALPHA + 1: PolyF2.var(X) + PolyF2.var(Y),
    ALPHA + 2: PolyF2.monomial({X: 2, Y: 1}),
}


def h_image(i: int, j: int) -> PolyF2:
    """Image of alpha2^j h_{(e,0)} in F2[x^±1, y^±1] (alpha1 -> x + y, alpha2 -> x^2 y)."""
    if i < 2 * j:
        raise NotInS(f"({i}, {j}) has negative excess")
    body = alpha(2) ** j * h_polynomial(i - 2 * j).body
    return poly_substitute(body, _XY_ASSIGNMENT)


def xy_exponents(m) -> tuple[int, int]:
    d = dict(m)
    return d.get(X, 0), d.get(Y, 0)


def h_closed_form(e: int) -> PolyF2:
    """x^e + sum_u binom(u-1, 2u-e-1) x^(e-u) y^u."""
    if e < 0:
        raise NegativeExcess(f"excess {e} < 0")
    p = PolyF2.monomial({X: e})
    for u in range(1, e + 1):
        if binom_mod2(u - 1, 2 * u - e - 1):
            p = p + PolyF2.monomial({X: e - u, Y: u})
    return p


def _f(s, t) -> int:
    (i, j), (l, m) = s, t
    if i + j != l + m:
        return 0
    return binom_mod2(m - j - 1, m + j - l - 1)


def f_gamma(s, t) -> int:
    """f((i,j),(l,m)) = binom(m-j-1, m+j-l-1) when i+j = l+m, else 0."""
    if not in_s(s):
        raise BadMembership(f"{tuple(s)} is not in S")
    if in_s(t):
        raise BadMembership(f"{tuple(t)} is not in S'")
    return _f(s, t)


def f_row_support(s) -> list[IndexPair]:
    """All (l, m) that can have f((i,j),(l,m)) = 1: m in [ceil((i+1)/2), i-j], l = i+j-m."""
    i, j = s
    if i < 2 * j:
        raise NotInS(f"({i}, {j}) is not in S")
    lo = (i + 2) // 2
    return [IndexPair(i + j - m, m) for m in range(lo, i - j + 1)]


def f_col_support(t) -> list[IndexPair]:
    """All (i, j) that can have f((i,j),(l,m)) = 1: j in [l-m+1, floor(l/2)], i = l+m-j."""
    l, m = t
    if l >= 2 * m:
        raise BadMembership(f"({l}, {m}) is not in S'")
    return [IndexPair(l + m - j, j) for j in range(l - m + 1, l // 2 + 1)]


def f_col_range_wide(t) -> list[IndexPair]:
    """The looser column range j in [l-m+1, m-1]."""
    l, m = t
    return [IndexPair(l + m - j, j) for j in range(l - m + 1, m)]


def _is_int(k) -> bool:
    return isinstance(k, int)


def gamma_spec() -> AdmissibleSpec:
    """<Z; S, f> for B, with sigma(n) = 1 - n."""
    return AdmissibleSpec(
        name="B",
        contains=_is_int,
        in_s=in_s,
        f=_f,
        row_support=f_row_support,
        col_support=f_col_support,
        degree=lambda k: k,
        sigma=sigma,
        sigma_inv=sigma,
    )


def is_natural(k) -> bool:
    return k >= 0


def gamma_plus_spec() -> AdmissibleSpec:
    """<N; S_N, f|> for B+."""
    return restrict(gamma_spec(), is_natural, name="B+")


@dataclass(frozen=True)
class CrossValidation:
    rows: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches


def f_cross_validate_row(s) -> list[tuple]:
    """Differences between h_image(s) and the closed-form row of f at s."""
    i, j = s
    image = h_image(i, j)
    found_s = []
    found = set()
    for m in image:
        a, b = xy_exponents(m)
        if a + b != i + j:
            return [("inhomogeneous", (i, j), (a, b))]
        if in_s((a, b)):
            found_s.append((a, b))
        else:
            found.add((a, b))
    problems = []
    if found_s != [(i, j)]:
        problems.append(("S-part", (i, j), tuple(found_s)))
    expected = {tuple(t) for t in f_row_support(s) if _f(s, t)}
    for t in sorted(found ^ expected):
        problems.append(("f", (i, j), t))
    return problems


def f_cross_validate(max_excess: int, max_abs_j: int) -> CrossValidation:
    """Check every row with excess <= max_excess and |j| <= max_abs_j against h_image."""
    rows = 0
    problems: list = []
    for e in range(max_excess + 1):
        for j in range(-max_abs_j, max_abs_j + 1):
            rows += 1
            problems.extend(f_cross_validate_row((e + 2 * j, j)))
    return CrossValidation(rows, tuple(problems))


def f_cross_validate_window(window: Window) -> CrossValidation:
    """As :func:`f_cross_validate` over the S-pairs of a window."""
    rows = 0
    problems: list = []
    for s in window.pairs():
        if in_s(s):
            rows += 1
            problems.extend(f_cross_validate_row(s))
    return CrossValidation(rows, tuple(problems))
