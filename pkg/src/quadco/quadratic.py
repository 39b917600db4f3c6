"""Admissible quadratic coalgebras <I; S, f> over F2.

An (I, S)-admissible coalgebra is determined by a coefficient function
f: S x S' -> F2 whose rows have finite support; its relation space R has the
basis [s] + sum_{s'} f(s, s') [s'] for s in S.  Infinite index sets are only
ever touched through a finite :class:`Window`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Callable, Collection, Hashable, Iterable, Sequence

from quadco.errors import (
    ColumnMismatch,
    NoSigma,
    NotDualizable,
    NotInS,
    PreconditionFailed,
)
from quadco.gf2 import F2Matrix, intersect_rowspaces, nullspace, rank, same_rowspace
from quadco.gf2.matrix import bits

Index = Hashable
Pair = tuple


def _identity_degree(k) -> int:
    return k


@dataclass(frozen=True)
class AdmissibleSpec:
    """Everything needed to compute with <I; S, f>.

    ``row_support(s)`` must list every s' with f(s, s') = 1 (it may list
    more); ``col_support(s')`` does the same for columns and is what makes
    the coalgebra dualizable.  ``sigma`` and ``sigma_inv`` act on single indices.
    """

    name: str
    contains: Callable[[Index], bool]
    in_s: Callable[[Pair], bool]
    f: Callable[[Pair, Pair], int]
    row_support: Callable[[Pair], Iterable[Pair]]
    col_support: Callable[[Pair], Iterable[Pair]] | None = None
    degree: Callable[[Index], int] = _identity_degree
    sigma: Callable[[Index], Index] | None = None
    sigma_inv: Callable[[Index], Index] | None = None
    origin: AdmissibleSpec | None = field(default=None, compare=False, repr=False)

    def is_pair(self, p: Pair) -> bool:
        return self.contains(p[0]) and self.contains(p[1])

    def in_s_prime(self, p: Pair) -> bool:
        return self.is_pair(p) and not self.in_s(p)

    def coefficient(self, s: Pair, t: Pair) -> int:
        """f(s, t), and 0 whenever (s, t) is not in S x S'."""
        if not (self.is_pair(s) and self.in_s(s) and self.in_s_prime(t)):
            return 0
        return self.f(s, t) & 1

    def pair_degree(self, p: Pair) -> int:
        return self.degree(p[0]) + self.degree(p[1])

    def sigma_pair(self, p: Pair) -> Pair:
        if self.sigma is None:
            raise NoSigma(f"{self.name} carries no duality bijection")
        return (self.sigma(p[0]), self.sigma(p[1]))


@dataclass(frozen=True)
class RelationVector:
    """[s] + sum f(s, s')[s'] (signs vanish over F2)."""

    s: Pair
    support: tuple

    def terms(self) -> tuple:
        return (self.s, *self.support)


@dataclass(frozen=True)
class Window:
    """Bounds lo <= k <= hi on every index component, optionally on pair degree."""

    lo: int
    hi: int
    deg_lo: int | None = None
    deg_hi: int | None = None

    @classmethod
    def symmetric(cls, radius: int) -> Window:
        return cls(-radius, radius)

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def pairs(self) -> list[Pair]:
        out = []
        for p in itertools.product(self.indices(), repeat=2):
            d = p[0] + p[1]
            if self.deg_lo is not None and d < self.deg_lo:
                continue
            if self.deg_hi is not None and d > self.deg_hi:
                continue
            out.append(p)
        return out

    def image(self, fn: Callable[[int], int]) -> Window:
        """Smallest window containing fn(window); fn must map it onto an interval."""
        values = sorted(fn(k) for k in self.indices())
        if not values:
            return self
        if values != list(range(values[0], values[-1] + 1)):
            raise ValueError("map does not send the window onto an interval")
        return Window(values[0], values[-1])

    def to_json(self) -> dict:
        out = {"lo": self.lo, "hi": self.hi}
        if self.deg_lo is not None:
            out["deg_lo"] = self.deg_lo
        if self.deg_hi is not None:
            out["deg_hi"] = self.deg_hi
        return out


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: tuple | None
    window: Window
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def as_predicate(J) -> Callable[[Index], bool]:
    if J is None:
        return lambda k: True
    if callable(J):
        return J
    members = frozenset(J)
    return members.__contains__


# -- basic constructions -----------------------------------------------------


def relation_vector(spec: AdmissibleSpec, s: Pair) -> RelationVector:
    if not (spec.is_pair(s) and spec.in_s(s)):
        raise NotInS(f"{s} is not in S for {spec.name}")
    support = sorted({t for t in spec.row_support(s) if spec.coefficient(s, t)})
    return RelationVector(s, tuple(support))


def transpose_dual(spec: AdmissibleSpec, window: Window | None = None, bound: int = 256) -> AdmissibleSpec:
    """<I; S', f^!> with f^!(s', s) = f(s, s').

    When ``window`` is given, every column support inside it is enumerated
    and must have at most ``bound`` elements.
    """
    if spec.col_support is None:
        raise NotDualizable(f"{spec.name} has no column-support enumerator")
    if window is not None:
        for t in window.pairs():
            if spec.in_s_prime(t) and len(list(spec.col_support(t))) > bound:
                raise NotDualizable(f"column support of {t} exceeds {bound}")
    if spec.origin is not None:
        return spec.origin
    base = spec

    def in_s(p):
        return base.is_pair(p) and not base.in_s(p)

    def f(a, b):
        return base.f(b, a)

    return AdmissibleSpec(
        name=f"{spec.name}^!",
        contains=spec.contains,
        in_s=in_s,
        f=f,
        row_support=spec.col_support,
        col_support=spec.row_support,
        degree=spec.degree,
        sigma=spec.sigma,
        sigma_inv=spec.sigma_inv,
        origin=spec,
    )


def restrict(spec: AdmissibleSpec, J, name: str | None = None) -> AdmissibleSpec:
    """<J; S_J, f|>: the pullback (or pushforward) data along J ⊂ I.

    This is the coalgebra the pullback/pushforward is isomorphic to exactly
    when the corresponding admissibility check passes.
    """
    inJ = as_predicate(J)
    base = spec

    def contains(k):
        return base.contains(k) and inJ(k)

    def both(p):
        return inJ(p[0]) and inJ(p[1])

    def in_s(p):
        return base.in_s(p) and both(p)

    def rows(s):
        return [t for t in base.row_support(s) if both(t)]

    cols = None
    if base.col_support is not None:

        def cols(t):
            return [s for s in base.col_support(t) if both(s)]

    return AdmissibleSpec(
        name=name or f"{spec.name}|J",
        contains=contains,
        in_s=in_s,
        f=spec.f,
        row_support=rows,
        col_support=cols,
        degree=spec.degree,
    )


def finite_spec(
    indices: Collection,
    s_pairs: Collection[Pair],
    ones: Collection[tuple[Pair, Pair]] = (),
    sigma: dict | None = None,
    degree: Callable | None = None,
    name: str = "finite",
) -> AdmissibleSpec:
    """An AdmissibleSpec given by explicit tables (useful for small examples)."""
    idx = frozenset(indices)
    S = frozenset(s_pairs)
    table = frozenset(ones)
    rows: dict = {}
    cols: dict = {}
    for s, t in table:
        if s not in S or t in S:
            raise ValueError(f"{(s, t)} is not in S x S'")
        rows.setdefault(s, []).append(t)
        cols.setdefault(t, []).append(s)
    inverse = {v: k for k, v in sigma.items()} if sigma else None
    return AdmissibleSpec(
        name=name,
        contains=idx.__contains__,
        in_s=S.__contains__,
        f=lambda s, t: 1 if (s, t) in table else 0,
        row_support=lambda s: tuple(rows.get(s, ())),
        col_support=lambda t: tuple(cols.get(t, ())),
        degree=degree or (lambda k: 0),
        sigma=sigma.__getitem__ if sigma else None,
        sigma_inv=inverse.__getitem__ if inverse else None,
    )


def audit_supports(spec: AdmissibleSpec, window: Window) -> list[tuple]:
    """Brute-force check that the support enumerators are complete on ``window``.

    Returns the (s, t) pairs with f(s, t) = 1 that an enumerator missed.
    """
    pairs = [p for p in window.pairs() if spec.is_pair(p)]
    S = [p for p in pairs if spec.in_s(p)]
    Sp = [p for p in pairs if not spec.in_s(p)]
    by_degree: dict = {}
    for t in Sp:
        by_degree.setdefault(spec.pair_degree(t), []).append(t)
    missed = []
    for s in S:
        rows = set(spec.row_support(s))
        for t in by_degree.get(spec.pair_degree(s), ()):
            if spec.coefficient(s, t):
                if t not in rows:
                    missed.append(("row", s, t))
                if spec.col_support is not None and s not in set(spec.col_support(t)):
                    missed.append(("col", s, t))
    return missed


def audit_supports_exhaustive(spec: AdmissibleSpec, window: Window) -> list[tuple]:
    """As :func:`audit_supports` but without assuming f respects the grading."""
    pairs = [p for p in window.pairs() if spec.is_pair(p)]
    S = [p for p in pairs if spec.in_s(p)]
    Sp = [p for p in pairs if not spec.in_s(p)]
    missed = []
    for s in S:
        rows = set(spec.row_support(s))
        for t in Sp:
            if spec.coefficient(s, t) and t not in rows:
                missed.append(("row", s, t))
            if spec.coefficient(s, t) and spec.col_support is not None and s not in set(spec.col_support(t)):
                missed.append(("col", s, t))
    return missed


# -- admissible words --------------------------------------------------------


def _window_indices(spec: AdmissibleSpec, window: Window) -> list:
    return [k for k in window.indices() if spec.contains(k)]


def _words(indices: Sequence, degree_of: Callable, n: int, degree: int, admissible=None) -> list[tuple]:
    """All n-tuples over ``indices`` of total degree ``degree``.

    With ``admissible`` given, only tuples whose consecutive pairs satisfy it.
    """
    degs = {k: degree_of(k) for k in indices}
    if n == 0:
        return [()] if degree == 0 else []
    lo = min(degs.values(), default=0)
    hi = max(degs.values(), default=0)
    out = []

    def rec(prefix: list, remaining: int, left: int):
        if left == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for k in indices:
            r = remaining - degs[k]
            if r < (left - 1) * lo or r > (left - 1) * hi:
                continue
            if admissible is not None and prefix and not admissible((prefix[-1], k)):
                continue
            prefix.append(k)
            rec(prefix, r, left - 1)
            prefix.pop()

    rec([], degree, n)
    return out


def enumerate_admissible_words(spec: AdmissibleSpec, n: int, degree: int, window: Window) -> list[tuple]:
    """The graded slice of S^(n) inside the window, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sorted(_words(_window_indices(spec, window), spec.degree, n, degree, spec.in_s))


def is_admissible_word(spec: AdmissibleSpec, word: Sequence) -> bool:
    return all(spec.in_s((word[t], word[t + 1])) for t in range(len(word) - 1))


# -- the degree-(n, d) piece of <V; R> --------------------------------------


@dataclass
class CoalgebraSlice:
    """The intersection of the V^{⊗i} ⊗ R ⊗ V^{⊗j} inside one degree slice of V^{⊗n}.

    Every vector in the intersection is determined by its coordinates on the
    admissible words ``basis``: ``masks[w]`` records, as a bitmask over
    ``basis``, the coordinate at word ``w`` of the candidate vectors x_b.
    ``defects`` are the linear conditions on those coordinates coming from
    relations that were not used to build the masks.
    """

    n: int
    degree: int
    words: list
    basis: list
    masks: dict
    defects: list

    @property
    def dim(self) -> int:
        return len(self.basis) - rank(self.defects)

    def kernel_coordinates(self) -> list[int]:
        """Bitmasks c over ``basis`` spanning the coordinate vectors of the slice."""
        if not self.defects:
            return [1 << b for b in range(len(self.basis))]
        m = F2Matrix(tuple(self.defects), tuple(range(len(self.basis))))
        return list(nullspace(m).rows)

    def vector(self, c: int) -> frozenset:
        """Support (set of words) of the element with basis coordinates c."""
        return frozenset(w for w in self.words if (self.masks[w] & c).bit_count() & 1)

    def matrix(self) -> F2Matrix:
        labels = tuple(sorted(self.words))
        return F2Matrix.from_supports([self.vector(c) for c in self.kernel_coordinates()], labels)

    def coordinates(self, support: Iterable) -> int:
        pos = {w: k for k, w in enumerate(self.basis)}
        c = 0
        for w in support:
            if w in pos:
                c ^= 1 << pos[w]
        return c

    def contains(self, support: Iterable) -> bool:
        support = frozenset(support)
        c = self.coordinates(support)
        if any((c & d).bit_count() & 1 for d in self.defects):
            return False
        return self.vector(c) == support


class OrderViolation(PreconditionFailed):
    """A relation rewrites a word into one that is not lexicographically larger."""


def coalgebra_slice(spec: AdmissibleSpec, n: int, degree: int, window: Window) -> CoalgebraSlice:
    """Triangular computation of <V; R>_n in one degree, V = K[window ∩ I].

    Uses the annihilator description: R^⊥ is spanned by
    [s'] + sum_s f(s, s')[s] (s' in S'), and whenever f(s, s') = 1 the
    left index of s exceeds that of s'.  Each non-admissible word is thus
    solved for in terms of lexicographically larger words, working down
    from the top of the slice.
    """
    if spec.col_support is None:
        raise NotDualizable("the triangular slice needs column supports")
    indices = _window_indices(spec, window)
    words = sorted(_words(indices, spec.degree, n, degree), reverse=True)
    word_set = set(words)
    basis = [w for w in words if is_admissible_word(spec, w)]
    basis.reverse()
    pos = {w: k for k, w in enumerate(basis)}
    col_cache: dict = {}

    def column(t):
        if t not in col_cache:
            col_cache[t] = [s for s in spec.col_support(t) if spec.coefficient(s, t)]
        return col_cache[t]

    def relation(w, i, masks):
        acc = masks[w]
        for s in column((w[i], w[i + 1])):
            w2 = w[:i] + s + w[i + 2:]
            if w2 not in word_set:
                raise PreconditionFailed(f"window not closed: {w} rewrites to {w2}")
            if w2 not in masks:
                raise OrderViolation(f"{w} rewrites to the smaller word {w2}")
            acc ^= masks[w2]
        return acc

    masks: dict = {}
    for w in words:
        if w in pos:
            masks[w] = 1 << pos[w]
            continue
        i = next(i for i in range(n - 1) if not spec.in_s((w[i], w[i + 1])))
        masks[w] = 0
        masks[w] = relation(w, i, masks)
    defects = []
    for w in words:
        slots = [i for i in range(n - 1) if not spec.in_s((w[i], w[i + 1]))]
        for i in slots[1:]:
            d = relation(w, i, masks)
            if d:
                defects.append(d)
    return CoalgebraSlice(n, degree, words, basis, masks, defects)


def coalgebra_slice_dense(spec: AdmissibleSpec, n: int, degree: int, window: Window) -> F2Matrix:
    """The same slice by brute force: intersect the row spaces of all V^{⊗i}⊗R⊗V^{⊗j}."""
    indices = _window_indices(spec, window)
    words = tuple(sorted(_words(indices, spec.degree, n, degree)))
    word_set = set(words)
    full = F2Matrix.from_supports([[w] for w in words], words)
    if n <= 1:
        return full
    result = full
    for i in range(n - 1):
        supports = []
        for w in words:
            s = (w[i], w[i + 1])
            if not spec.in_s(s):
                continue
            sup = [w]
            for t in spec.row_support(s):
                if spec.coefficient(s, t):
                    w2 = w[:i] + t + w[i + 2:]
                    if w2 not in word_set:
                        raise PreconditionFailed(f"window not closed: {w} relates to {w2}")
                    sup.append(w2)
            supports.append(sup)
        result = intersect_rowspaces(result, F2Matrix.from_supports(supports, words))
    return result


@dataclass(frozen=True)
class CoPBWReport:
    n: int
    degree: int
    slice_dim: int  # dimension of V^{⊗n} in this degree
    admissible_count: int  # |S^(n)| in this degree
    intersection_dim: int
    projection_rank: int
    coalgebra_rank: int | None = None
    coalgebra_matches: bool | None = None

    @property
    def ok(self) -> bool:
        iso = self.intersection_dim == self.admissible_count == self.projection_rank
        return iso and self.coalgebra_matches is not False


def weak_copbw_check(
    spec: AdmissibleSpec,
    n: int,
    degree: int,
    window: Window,
    coalgebra_slices: Callable[[int, int], F2Matrix] | None = None,
) -> CoPBWReport:
    """Is <V; R>_n -> K[S^(n)] an isomorphism in this degree?

    ``coalgebra_slices(n, d)``, when given, supplies an independently
    computed copy of the same slice (columns labelled by words); it must
    span exactly the intersection.
    """
    piece = coalgebra_slice(spec, n, degree, window)
    coords = piece.kernel_coordinates()
    proj_rank = rank(coords)
    cg_rank = matches = None
    if coalgebra_slices is not None:
        m = coalgebra_slices(n, degree)
        supports = [frozenset(m.support(r)) for r in m.rows]
        unknown = {w for sup in supports for w in sup} - set(piece.words)
        cg_rank = rank(m)
        inside = not unknown and all(piece.contains(sup) for sup in supports)
        matches = inside and cg_rank == piece.dim
    return CoPBWReport(
        n=n,
        degree=degree,
        slice_dim=len(piece.words),
        admissible_count=len(piece.basis),
        intersection_dim=piece.dim,
        projection_rank=proj_rank,
        coalgebra_rank=cg_rank,
        coalgebra_matches=matches,
    )


# -- pullback / pushforward admissibility -----------------------------------


def check_pullback_admissible(spec: AdmissibleSpec, J, window: Window) -> CheckResult:
    """f(s_J, s') = 0 for s_J in S_J and s' in S' \\ S'_J (s_J ranging over the window)."""
    inJ = as_predicate(J)
    checked = 0
    for s in window.pairs():
        if not (spec.is_pair(s) and spec.in_s(s) and inJ(s[0]) and inJ(s[1])):
            continue
        for t in spec.row_support(s):
            checked += 1
            if spec.coefficient(s, t) and not (inJ(t[0]) and inJ(t[1])):
                return CheckResult(False, (s, t), window, checked)
    return CheckResult(True, None, window, checked)


def check_pushforward_admissible(spec: AdmissibleSpec, J, window: Window) -> CheckResult:
    """f(s, s'_J) = 0 for s in S \\ S_J and s'_J in S'_J (s'_J ranging over the window)."""
    inJ = as_predicate(J)
    pairs = window.pairs()
    checked = 0
    for t in pairs:
        if not (spec.in_s_prime(t) and inJ(t[0]) and inJ(t[1])):
            continue
        if spec.col_support is not None:
            candidates = spec.col_support(t)
        else:
            candidates = [s for s in pairs if spec.is_pair(s) and spec.in_s(s)]
        for s in candidates:
            checked += 1
            if spec.coefficient(s, t) and not (inJ(s[0]) and inJ(s[1])):
                return CheckResult(False, (s, t), window, checked)
    return CheckResult(True, None, window, checked)


@dataclass(frozen=True)
class ReciprocityReport:
    pullback: CheckResult
    pushforward: CheckResult

    @property
    def agree(self) -> bool:
        return self.pullback.ok == self.pushforward.ok


def reciprocity_check(spec: AdmissibleSpec, J, window: Window) -> ReciprocityReport:
    """Pullback along J versus pushforward along sigma(J).

    The pushforward side is examined on sigma(window), so both checks see
    the same pairs up to sigma.
    """
    if spec.sigma is None or spec.sigma_inv is None:
        raise NoSigma(f"{spec.name} carries no duality bijection")
    inJ = as_predicate(J)
    sigma_inv = spec.sigma_inv

    def in_sigma_J(k):
        return inJ(sigma_inv(k))

    pull = check_pullback_admissible(spec, inJ, window)
    push = check_pushforward_admissible(spec, in_sigma_J, window.image(spec.sigma))
    return ReciprocityReport(pull, push)


def check_strict_self_dual(spec: AdmissibleSpec, window: Window) -> CheckResult:
    """sigma(S) ⊂ S', sigma(S') ⊂ S and f(s, t) == f(sigma t, sigma s) on the window."""
    if spec.sigma is None:
        raise NoSigma(f"{spec.name} carries no duality bijection")
    sigma = spec.sigma
    for k in window.indices():
        if spec.contains(k) and spec.sigma_inv is not None and spec.sigma_inv(sigma(k)) != k:
            return CheckResult(False, ("sigma_inv", k), window)
    pairs = [p for p in window.pairs() if spec.is_pair(p)]
    S = [p for p in pairs if spec.in_s(p)]
    Sp = [p for p in pairs if not spec.in_s(p)]
    for s in S:
        if not spec.in_s_prime(spec.sigma_pair(s)):
            return CheckResult(False, ("sigma(S)", s), window)
    for t in Sp:
        if not spec.in_s(spec.sigma_pair(t)):
            return CheckResult(False, ("sigma(S')", t), window)
    f = spec.f
    checked = 0
    for s in S:
        ss = (sigma(s[0]), sigma(s[1]))
        for t in Sp:
            checked += 1
            if f(s, t) != f((sigma(t[0]), sigma(t[1])), ss):
                return CheckResult(False, (s, t), window, checked)
    return CheckResult(True, None, window, checked)


# -- vector-space duality on finite slices ----------------------------------


def pair_labels(v_basis: Sequence) -> tuple:
    return tuple(itertools.product(v_basis, repeat=2))


def perp(v_basis: Sequence, r_vectors: F2Matrix) -> F2Matrix:
    """Basis of R^⊥ ⊂ V*⊗V* for R spanned by the rows of ``r_vectors``.

    Columns of the result carry the same labels, read as eta_a ⊗ eta_b.
    """
    expected = pair_labels(v_basis)
    if set(r_vectors.labels) != set(expected) or len(r_vectors.labels) != len(expected):
        raise ColumnMismatch("columns must be exactly the ordered pairs of basis tags")
    return nullspace(r_vectors)


def _tensor_image(phi: dict, labels: tuple, row: int) -> int:
    index = {lab: k for k, lab in enumerate(labels)}
    out = 0
    for k in bits(row):
        a, b = labels[k]
        for x in bits(phi[a]):
            for y in bits(phi[b]):
                out ^= 1 << index[(x, y)]
    return out


def find_self_duality(v_basis: Sequence, r_vectors: F2Matrix, max_dim: int = 4) -> dict | None:
    """Search GL(V) for phi: V -> V* with (phi⊗phi)(R) = R^⊥.

    Exhaustive, so only for tiny V.  Returns phi as {basis tag: [dual tags]}
    or None when no such isomorphism exists.
    """
    v_basis = list(v_basis)
    k = len(v_basis)
    if k > max_dim:
        raise ValueError(f"exhaustive search limited to dim V <= {max_dim}")
    target = perp(v_basis, r_vectors)
    labels = r_vectors.labels
    pos_labels = tuple((v_basis.index(a), v_basis.index(b)) for a, b in labels)
    for images in itertools.product(range(1, 1 << k), repeat=k):
        if rank(list(images)) != k:
            continue
        phi = dict(enumerate(images))
        rows = tuple(_tensor_image(phi, pos_labels, r) for r in r_vectors.rows)
        if same_rowspace(F2Matrix(rows, labels), target) and rank(rows) == len(target.rows):
            return {v_basis[i]: [v_basis[j] for j in bits(images[i])] for i in range(k)}
    return None


# -- surjectivity -------------------------------------------------------------


@dataclass(frozen=True)
class SurjectivityReport:
    n: int
    degree: int
    restricted_count: int  # |S^(n) ∩ J^n|
    sub_count: int  # |S_J^(n)|
    pushforward_admissible: bool
    ok: bool


def surjectivity_check(spec: AdmissibleSpec, J, n: int, degree: int, window: Window) -> SurjectivityReport:
    """Surjectivity of <V; R> -> <K[J]; R^J> in one degree, via admissible-word counts.

    For n >= 3 both sides must first pass :func:`weak_copbw_check` on the
    slice.  Whether the pushforward is itself admissible is reported but
    not required.
    """
    inJ = as_predicate(J)
    push = check_pushforward_admissible(spec, inJ, window)
    sub = restrict(spec, inJ)
    if n >= 3:
        for candidate in (spec, sub):
            report = weak_copbw_check(candidate, n, degree, window)
            if not report.ok:
                raise PreconditionFailed(f"weak coPBW fails for {candidate.name}: {report}")
    big = [w for w in enumerate_admissible_words(spec, n, degree, window) if all(inJ(k) for k in w)]
    small = enumerate_admissible_words(sub, n, degree, window)
    return SurjectivityReport(n, degree, len(big), len(small), push.ok, set(big) == set(small))


def with_name(spec: AdmissibleSpec, name: str) -> AdmissibleSpec:
    return replace(spec, name=name)
