"""The bialgebras B and B+ of additive polynomials sum(alpha_i x^(2^i)).

B+_n = F2[alpha_1..alpha_n] represents the monoid of additive polynomials of
height n under composition; its diagonals are read off from the coefficients
of a composite of two generic polynomials.  Degrees are cohomological:
deg alpha_i = 2^i - 1.

Variable ids are allocated in fixed blocks (see ``var_name``) so that images
into different tensor splits can be compared inside one ambient ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from quadco.errors import BadIndex, BadSplit
from quadco.gf2 import F2Matrix, PolyF2, intersect_rowspaces, left_kernel, rank
from quadco.gf2.poly import poly_substitute

ALPHA = 0  # alpha_i of B+_n
BETA = 100  # generators of the left tensor factor
GAMMA = 200  # generators of the right tensor factor
XI = 300  # dual Steenrod algebra, left factor
XI_RIGHT = 400
Q_LEFT = 500  # Q_{p,k} of the left factor (k = 0..p-1)
Q_RIGHT = 600
U = 1000  # u_t: generator of the t-th copy of B+_1

_BLOCKS = [
    (U, "u"),
    (Q_RIGHT, "Q'"),
    (Q_LEFT, "Q"),
    (XI_RIGHT, "xi'"),
    (XI, "xi"),
    (GAMMA, "gamma"),
    (BETA, "beta"),
    (ALPHA, "alpha"),
]


def var_name(v: int) -> str:
    for base, name in _BLOCKS:
        if v > base or (base in (Q_LEFT, Q_RIGHT) and v >= base):
            return f"{name}{v - base}"
    return f"v{v}"


class _Names(dict):
    def __missing__(self, key):
        return var_name(key)

    def get(self, key, default=None):
        return self[key]


NAMES: Mapping[int, str] = _Names()


def alpha(i: int) -> PolyF2:
    return PolyF2.var(ALPHA + i)


def alpha_weights(n: int) -> dict[int, int]:
    return {ALPHA + i: (1 << i) - 1 for i in range(1, n + 1)}


@dataclass(frozen=True)
class AdditivePoly:
    """sum_i c_i x^(2^i) with c_0 = 1; ``coefficients`` holds c_0..c_n."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if not coeffs or coeffs[0] != PolyF2.one():
            raise ValueError("an additive polynomial must have leading coefficient c_0 = 1")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def height(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def identity(cls) -> AdditivePoly:
        return cls((PolyF2.one(),))

    @classmethod
    def generic(cls, var_ids: Sequence[int]) -> AdditivePoly:
        return cls((PolyF2.one(), *(PolyF2.var(v) for v in var_ids)))

    def __getitem__(self, k: int) -> PolyF2:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return PolyF2.zero()


def compose_additive(outer: AdditivePoly, inner: AdditivePoly, truncation: int) -> AdditivePoly:
    """Coefficients of outer∘inner through slot ``truncation``.

    Slot k is sum_{i+j=k} outer[i] * inner[j]^(2^i), using that raising to a
    power of two is additive in characteristic 2.
    """
    if truncation < 0:
        raise ValueError("truncation must be non-negative")
    slots = [PolyF2.one()]
    for k in range(1, truncation + 1):
        acc = PolyF2.zero()
        for i in range(0, min(k, outer.height) + 1):
            j = k - i
            if j > inner.height:
                continue
            b = outer[i]
            if b:
                acc = acc + b * inner[j].frobenius(i)
        slots.append(acc)
    return AdditivePoly(tuple(slots))


def factor_vars(base: int, count: int) -> tuple[int, ...]:
    return tuple(base + k for k in range(1, count + 1))


def diagonal(
    n: int,
    p: int,
    q: int,
    left: Sequence[int] | None = None,
    right: Sequence[int] | None = None,
) -> list[PolyF2]:
    """Images of alpha_1..alpha_n under Delta_{p,q}: B+_n -> B+_p ⊗ B+_q.

    The left factor's generators are ``left`` (default beta_1..beta_p), the
    right factor's ``right`` (default gamma_1..gamma_q).  A split with p or q
    equal to 0 is the counit identification.
    """
    if p < 0 or q < 0 or p + q != n:
        raise BadSplit(f"({p}, {q}) is not a split of {n}")
    left = factor_vars(BETA, p) if left is None else tuple(left)
    right = factor_vars(GAMMA, q) if right is None else tuple(right)
    inner = AdditivePoly.generic(left)
    outer = AdditivePoly.generic(right)
    return list(compose_additive(outer, inner, n).coefficients[1:])


@dataclass(frozen=True)
class TensorAlgebraCtx:
    """F2[u_1..u_n] = (B+_1)^{⊗n}; factor t owns variable ``base + t``."""

    n: int
    base: int = U

    @property
    def variables(self) -> tuple[int, ...]:
        return factor_vars(self.base, self.n)

    def u(self, t: int) -> int:
        if not 1 <= t <= self.n:
            raise BadIndex(f"factor {t} out of range 1..{self.n}")
        return self.base + t


def _compose_height_one(var_ids: Sequence[int]) -> list[PolyF2]:
    h = AdditivePoly.identity()
    for k, v in enumerate(var_ids, start=1):
        h = compose_additive(AdditivePoly.generic((v,)), h, k)
    return list(h.coefficients[1:])


def iterated_diagonal_images(n: int, ctx: TensorAlgebraCtx | None = None) -> list[PolyF2]:
    """alpha'_1..alpha'_n: the iterated coproduct of B+_n into F2[u_1..u_n]."""
    ctx = ctx or TensorAlgebraCtx(n)
    if ctx.n != n:
        raise ValueError("context has the wrong number of factors")
    return _cached_iterated(ctx.variables)


@lru_cache(maxsize=None)
def _cached_iterated(var_ids: tuple) -> list[PolyF2]:
    return _compose_height_one(var_ids)


def alpha_assignment(images: Sequence[PolyF2]) -> dict[int, PolyF2]:
    return {ALPHA + i: img for i, img in enumerate(images, start=1)}


def partial_counit(n: int, a: int, element: PolyF2, ctx: TensorAlgebraCtx | None = None) -> PolyF2:
    """delta_a: iterated coproduct of B+_n followed by augmenting factor a."""
    if not 1 <= a <= n:
        raise BadIndex(f"a = {a} must lie in 1..{n}")
    ctx = ctx or TensorAlgebraCtx(n)
    images = iterated_diagonal_images(n, ctx)
    return poly_substitute(element, alpha_assignment(images)).set_zero(ctx.u(a))


# -- degree slices ---------------------------------------------------------


def weighted_exponents(weights: Sequence[int], degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples e with sum(e_i * w_i) == degree (weights > 0), lex descending."""
    out: list[tuple[int, ...]] = []
    k = len(weights)

    def rec(pos: int, remaining: int, acc: list[int]):
        if pos == k:
            if remaining == 0:
                out.append(tuple(acc))
            return
        w = weights[pos]
        for e in range(remaining // w, -1, -1):
            acc.append(e)
            rec(pos + 1, remaining - e * w, acc)
            acc.pop()

    rec(0, degree, [])
    return out


def alpha_monomials(n: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors (e_1..e_n) of the alpha-monomials of B+_n in ``degree``."""
    return weighted_exponents([(1 << i) - 1 for i in range(1, n + 1)], degree)


def compositions(degree: int, parts: int) -> list[tuple[int, ...]]:
    return weighted_exponents([1] * parts, degree)


class _PowerCache:
    def __init__(self, generators: Sequence[PolyF2]):
        self.generators = list(generators)
        self.cache: dict[tuple[int, int], PolyF2] = {}

    def power(self, k: int, e: int) -> PolyF2:
        key = (k, e)
        if key not in self.cache:
            self.cache[key] = self.generators[k] ** e
        return self.cache[key]

    def monomial(self, exps: Sequence[int]) -> PolyF2:
        out = PolyF2.one()
        for k, e in enumerate(exps):
            if e:
                out = out * self.power(k, e)
        return out


def slice_matrix(polys: Sequence[PolyF2], var_ids: Sequence[int], degree: int) -> F2Matrix:
    """Rows of ``polys`` in the degree-``degree`` slice of F2[var_ids] (all weights 1).

    Column labels are exponent tuples over ``var_ids``.
    """
    labels = compositions(degree, len(var_ids))
    index = {lab: k for k, lab in enumerate(labels)}
    pos = {v: k for k, v in enumerate(var_ids)}
    rows = []
    for p in polys:
        r = 0
        for m in p.terms:
            dense = [0] * len(var_ids)
            for v, e in m:
                dense[pos[v]] = e
            r ^= 1 << index[tuple(dense)]
        rows.append(r)
    return F2Matrix(tuple(rows), tuple(labels))


def matrix_from_polys(polys: Sequence[PolyF2]) -> F2Matrix:
    """Rows of ``polys`` over the sorted union of their monomials."""
    labels = sorted({m for p in polys for m in p.terms})
    index = {m: k for k, m in enumerate(labels)}
    rows = []
    for p in polys:
        r = 0
        for m in p.terms:
            r |= 1 << index[m]
        rows.append(r)
    return F2Matrix(tuple(rows), tuple(labels))


def bplus_slice(n: int, degree: int) -> F2Matrix:
    """The degree-``degree`` piece of B+_n inside (B+_1)^{⊗n}.

    Labels are words (a_1..a_n), identified with u_1^{a_1}...u_n^{a_n}.
    """
    ctx = TensorAlgebraCtx(n)
    powers = _PowerCache(iterated_diagonal_images(n, ctx))
    polys = [powers.monomial(e) for e in alpha_monomials(n, degree)]
    return slice_matrix(polys, ctx.variables, degree)


# -- quadraticity ------------------------------------------------------------


@dataclass(frozen=True)
class DegreeRecord:
    degree: int
    dim_left: int
    dim_right: int
    dim_intersection: int
    dim_bn: int
    equal: bool


@dataclass(frozen=True)
class QuadraticityReport:
    n: int
    max_internal_degree: int
    records: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.equal for r in self.records)


def _graded_images(generators: Sequence[PolyF2], weights: Sequence[int], degree: int, cache: _PowerCache):
    return [cache.monomial(e) for e in weighted_exponents(weights, degree)]


def quadraticity_check(n: int, max_internal_degree: int) -> QuadraticityReport:
    """Compare B+_n with (B+_{n-1}⊗B+_1) ∩ (B+_1⊗B+_{n-1}) degree by degree."""
    if n < 3:
        raise ValueError("quadraticity_check needs n >= 3")
    ctx = TensorAlgebraCtx(n)
    u = ctx.variables
    full = iterated_diagonal_images(n, ctx)
    lower_left = _compose_height_one(u[:-1])
    lower_right = _compose_height_one(u[1:])
    w_lower = [(1 << i) - 1 for i in range(1, n)]

    left_gens = lower_left + [PolyF2.var(u[-1])]
    right_gens = [PolyF2.var(u[0])] + lower_right
    left_cache, right_cache, full_cache = _PowerCache(left_gens), _PowerCache(right_gens), _PowerCache(full)
    records = []
    for d in range(max_internal_degree + 1):
        a = slice_matrix(_graded_images(left_gens, w_lower + [1], d, left_cache), u, d)
        b = slice_matrix(_graded_images(right_gens, [1] + w_lower, d, right_cache), u, d)
        bn = slice_matrix([full_cache.monomial(e) for e in alpha_monomials(n, d)], u, d)
        inter = intersect_rowspaces(a, b)
        dim_bn = rank(bn)
        dim_i = len(inter.rows)
        contained = rank(list(inter.rows) + list(bn.rows)) == dim_i
        records.append(DegreeRecord(d, rank(a), rank(b), dim_i, dim_bn, contained and dim_bn == dim_i))
    return QuadraticityReport(n, max_internal_degree, tuple(records))


# -- cogeneration and divisibility -----------------------------------------


def cogeneration_check(n: int, degree: int) -> tuple[int, int]:
    """(number of alpha-monomials, rank of their Delta_{n-1,1} images) in ``degree``."""
    images = diagonal(n, n - 1, 1)
    cache = _PowerCache(images)
    polys = [cache.monomial(e) for e in alpha_monomials(n, degree)]
    return len(polys), rank(matrix_from_polys(polys).rows)


@dataclass(frozen=True)
class KernelRecord:
    n: int
    a: int
    degree: int
    monomials: int
    kernel_dim: int
    divisible: int  # monomials with alpha_n exponent >= 1
    divisible_vanish: bool

    @property
    def ok(self) -> bool:
        return self.divisible_vanish and self.kernel_dim == self.divisible


def kernel_of_delta(n: int, a: int, degree: int) -> KernelRecord:
    """Rank data showing ker(delta_a) ∩ (B+_n)_d == (alpha_n B+_n)_d."""
    if not 1 <= a <= n:
        raise BadIndex(f"a = {a} must lie in 1..{n}")
    ctx = TensorAlgebraCtx(n)
    images = [img.set_zero(ctx.u(a)) for img in iterated_diagonal_images(n, ctx)]
    cache = _PowerCache(images)
    exps = alpha_monomials(n, degree)
    polys = [cache.monomial(e) for e in exps]
    m = matrix_from_polys(polys)
    kernel = left_kernel(list(m.rows), m.width)
    divisible = [p for e, p in zip(exps, polys) if e[-1] >= 1]
    return KernelRecord(n, a, degree, len(exps), len(kernel), len(divisible), all(not p for p in divisible))


# -- comonoid axioms ---------------------------------------------------------


def coassociativity_holds(p: int, q: int, r: int) -> bool:
    """(Delta_{p,q}⊗id)∘Delta_{p+q,r} == (id⊗Delta_{q,r})∘Delta_{p,q+r} on generators."""
    n = p + q + r
    A, B, C = factor_vars(BETA, p), factor_vars(GAMMA, q), factor_vars(U, r)
    mid_l = factor_vars(Q_LEFT + 50, p + q)
    mid_r = factor_vars(Q_RIGHT + 50, q + r)

    first = diagonal(n, p + q, r, left=mid_l, right=C)
    inner_l = diagonal(p + q, p, q, left=A, right=B)
    lhs = [poly_substitute(x, dict(zip(mid_l, inner_l))) for x in first]

    second = diagonal(n, p, q + r, left=A, right=mid_r)
    inner_r = diagonal(q + r, q, r, left=B, right=C)
    rhs = [poly_substitute(x, dict(zip(mid_r, inner_r))) for x in second]
    return lhs == rhs


def counit_holds(n: int) -> bool:
    gens = [PolyF2.var(v) for v in factor_vars(BETA, n)]
    right = [PolyF2.var(v) for v in factor_vars(GAMMA, n)]
    return diagonal(n, n, 0) == gens and diagonal(n, 0, n) == right


# -- Q-coordinates -----------------------------------------------------------


def _q_assignment(vars_: Sequence[int], q_base: int) -> dict[int, PolyF2]:
    """alpha_k -> Q_k / Q_0 for k < top, alpha_top -> 1 / Q_0."""
    top = len(vars_)
    if top == 0:
        return {}
    q0_inv = PolyF2.var(q_base, -1)
    out = {}
    for k, v in enumerate(vars_, start=1):
        out[v] = q0_inv if k == top else PolyF2.var(q_base + k) * q0_inv
    return out


def q_coordinate_coproduct(n: int, p: int, q: int) -> list[PolyF2]:
    """Images of Q_{n,0}..Q_{n,n-1} (Q_{n,i} = alpha_i / alpha_n) under Delta_{p,q}.

    The results are Laurent polynomials in the left factor's Q_{p,k}
    (ids Q_LEFT + k) and the right factor's Q_{q,k} (ids Q_RIGHT + k).
    """
    if p < 0 or q < 0 or p + q != n:
        raise BadSplit(f"({p}, {q}) is not a split of {n}")
    if n == 0:
        return []
    left, right = factor_vars(BETA, p), factor_vars(GAMMA, q)
    images = [PolyF2.one()] + diagonal(n, p, q, left, right)
    assignment = {**_q_assignment(left, Q_LEFT), **_q_assignment(right, Q_RIGHT)}
    top_inv = poly_substitute(images[n], assignment) ** -1
    return [poly_substitute(images[i], assignment) * top_inv for i in range(n)]


# -- group completion --------------------------------------------------------


def theta(n: int, xi_monomial: Mapping[int, int]) -> PolyF2:
    """theta_n: xi_i -> alpha_i for i <= n, xi_i -> 0 for i > n."""
    exps = {}
    for i, e in xi_monomial.items():
        if i < 1:
            raise BadIndex("xi indices start at 1")
        if e == 0:
            continue
        if i > n:
            return PolyF2.zero()
        exps[ALPHA + i] = e
    return PolyF2.monomial(exps)


def milnor_coproduct(n: int) -> list[PolyF2]:
    """Coproducts of xi_1..xi_n from composing two generic additive power series."""
    if n < 1:
        raise ValueError("n must be >= 1")
    inner = AdditivePoly.generic(factor_vars(XI, n))
    outer = AdditivePoly.generic(factor_vars(XI_RIGHT, n))
    return list(compose_additive(outer, inner, n).coefficients[1:])


def milnor_formula(n: int) -> list[PolyF2]:
    """Delta xi_k = sum_{i+j=k} xi_j^(2^i) ⊗ xi_i, written out term by term."""

    def xi(side: int, k: int) -> PolyF2:
        return PolyF2.one() if k == 0 else PolyF2.var(side + k)

    out = []
    for k in range(1, n + 1):
        acc = PolyF2.zero()
        for i in range(k + 1):
            acc = acc + xi(XI, k - i).frobenius(i) * xi(XI_RIGHT, i)
        out.append(acc)
    return out


