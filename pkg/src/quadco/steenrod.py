"""The universal Steenrod algebra as a rewriting system on words y_{a1} ... y_{ak}.

Generators y_i carry internal degree i and are indexed by all of Z.  A word
is admissible when a_t >= 2 a_{t+1} for every adjacent pair; inadmissible
pairs are rewritten with the generalized Adem relations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from quadco.errors import BadIndex, StepLimitExceeded, RouteMismatch, UnboundedWithoutWindow
from quadco.gf2 import binom_mod2
from quadco.quadratic import Window
from quadco.singer import f_gamma, in_s

QMonomial = tuple  # tuple of ints

DEFAULT_MAX_STEPS = 10**5


def canonical_key(m: QMonomial):
    return (len(m), m)


def is_admissible(m: Sequence[int]) -> bool:
    return all(m[t] >= 2 * m[t + 1] for t in range(len(m) - 1))


def _toggle(acc: set, m) -> None:
    if m in acc:
        acc.remove(m)
    else:
        acc.add(m)


@dataclass(frozen=True)
class QElement:
    """An F2-linear combination of words."""

    monomials: frozenset = frozenset()

    @classmethod
    def of(cls, *words: Iterable[int]) -> QElement:
        acc: set = set()
        for w in words:
            _toggle(acc, tuple(w))
        return cls(frozenset(acc))

    @classmethod
    def zero(cls) -> QElement:
        return cls()

    @classmethod
    def one(cls) -> QElement:
        return cls(frozenset({()}))

    @classmethod
    def gen(cls, i: int) -> QElement:
        return cls(frozenset({(i,)}))

    def __add__(self, other: QElement) -> QElement:
        return QElement(self.monomials ^ other.monomials)

    __sub__ = __add__

    def __mul__(self, other: QElement) -> QElement:
        return multiply(self, other)

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, m) -> bool:
        return tuple(m) in self.monomials

    def sorted(self) -> list[QMonomial]:
        return sorted(self.monomials, key=canonical_key)

    def is_admissible(self) -> bool:
        return all(is_admissible(m) for m in self.monomials)

    def lines(self) -> list[str]:
        if not self.monomials:
            return ["0"]
        return [monomial_text(m) for m in self.sorted()]

    def to_text(self) -> str:
        return " + ".join(self.lines())

    def to_json(self) -> list[list[int]]:
        return [list(m) for m in self.sorted()]

    def __repr__(self) -> str:
        return f"QElement({self.to_text()})"


def monomial_text(m: QMonomial) -> str:
    return " ".join(f"y{a}" for a in m) if m else "1"


_TOKEN = re.compile(r"y(-?\d+)")


def parse_monomial(text: str) -> QMonomial:
    """Parse 'y2 y-3 y0' (separators: spaces, '*' or nothing)."""
    body = text.replace("*", " ").strip()
    if body in ("", "1"):
        return ()
    pos = 0
    out = []
    for tok in body.split():
        pos = 0
        while pos < len(tok):
            match = _TOKEN.match(tok, pos)
            if not match:
                raise ValueError(f"cannot parse {text!r}")
            out.append(int(match.group(1)))
            pos = match.end()
    return tuple(out)


# -- the relations -----------------------------------------------------------


@lru_cache(maxsize=None)
def _adem_terms(u: int, v: int) -> tuple:
    terms = []
    for m in range(u - v + 1, u // 2 + 1):
        if binom_mod2(v - m - 1, v + m - u - 1):
            pair = (u + v - m, m)
            if not (pair[0] >= 2 * pair[1] and pair[0] > u):
                raise AssertionError(f"Adem output {pair} for ({u}, {v}) breaks progress")
            terms.append(pair)
    return tuple(terms)


def adem_expand(u: int, v: int) -> QElement:
    """y_u y_v if u >= 2v, else sum_m binom(v-m-1, v+m-u-1) y_{u+v-m} y_m."""
    if u >= 2 * v:
        return QElement.of((u, v))
    return QElement.of(*_adem_terms(u, v))


def adem_first_form(n: int, k: int) -> QElement | None:
    """Right side of y_{2k-1-n} y_k = sum_j binom(n-1-j, j) y_{2k-1-j} y_{k+j-n}.

    Returns None when n < 0, where the left side is already admissible.
    """
    if n < 0:
        return None
    return QElement.of(*((2 * k - 1 - j, k + j - n) for j in range(0, n) if binom_mod2(n - 1 - j, j)))


def classical_adem(u: int, v: int) -> QElement:
    """Classical Adem relation without Sq^0 = 1: sum_c binom(v-c-1, u-2c) y_{u+v-c} y_c, c >= 0."""
    if u >= 2 * v:
        return QElement.of((u, v))
    return QElement.of(*((u + v - c, c) for c in range(0, u // 2 + 1) if binom_mod2(v - c - 1, u - 2 * c)))


# -- normalization -----------------------------------------------------------


def _find_pair(m: QMonomial, strategy: str) -> int:
    slots = range(len(m) - 1)
    if strategy == "rightmost":
        slots = reversed(slots)
    elif strategy != "leftmost":
        raise ValueError(f"unknown strategy {strategy!r}")
    for t in slots:
        if m[t] < 2 * m[t + 1]:
            return t
    return -1


def _rewrite(start: Iterable, expand, strategy: str, max_steps: int) -> tuple[QElement, int]:
    pending: set = set()
    for m in start:
        _toggle(pending, tuple(m))
    done: set = set()
    steps = 0
    while pending:
        m = pending.pop()
        t = _find_pair(m, strategy)
        if t < 0:
            _toggle(done, m)
            continue
        steps += 1
        if steps > max_steps:
            raise StepLimitExceeded(f"more than {max_steps} rewrites")
        head, tail = m[:t], m[t + 2:]
        for pair in expand(m[t], m[t + 1]):
            _toggle(pending, head + pair + tail)
    return QElement(frozenset(done)), steps


def normalize(m: Sequence[int] | QElement, strategy: str = "leftmost", max_steps: int = DEFAULT_MAX_STEPS) -> tuple[QElement, int]:
    """Admissible normal form and the number of rewrites used."""
    start = m.monomials if isinstance(m, QElement) else [tuple(m)]
    return _rewrite(start, _adem_terms, strategy, max_steps)


def multiply(a: QElement, b: QElement, strategy: str = "leftmost", max_steps: int = DEFAULT_MAX_STEPS) -> QElement:
    products = [x + y for x in a.monomials for y in b.monomials]
    return _rewrite(products, _adem_terms, strategy, max_steps)[0]


# -- the quotient by negative generators -------------------------------------


@lru_cache(maxsize=None)
def _classical_terms(u: int, v: int) -> tuple:
    return tuple(classical_adem(u, v).sorted())


def atilde_normalize(m: Sequence[int], strategy: str = "leftmost", max_steps: int = DEFAULT_MAX_STEPS) -> QElement:
    """Normal form in the quotient by the y_j with j < 0.

    Computed twice: in the full algebra followed by deleting words with a
    negative index, and by a rewriting system that only ever sees
    non-negative indices.  The two must agree.
    """
    m = tuple(m)
    if any(a < 0 for a in m):
        raise BadIndex(f"{m} has a negative index")
    full, _ = normalize(m, strategy, max_steps)
    route_a = QElement(frozenset(w for w in full.monomials if min(w, default=0) >= 0))
    route_b, _ = _rewrite([m], _classical_terms, strategy, max_steps)
    if route_a != route_b:
        raise RouteMismatch(f"{m}: {route_a.to_text()} vs {route_b.to_text()}")
    return route_a


# -- counting -----------------------------------------------------------------


def admissible_basis_count(k: int, d: int, nonneg: bool = True, window: Window | None = None) -> int:
    """Number of admissible (a_1, ..., a_k) of total degree d."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if window is None:
        if not nonneg:
            raise UnboundedWithoutWindow("Z-indexed slices need an index window")
        lo, hi = 0, max(d, 0)
    else:
        lo, hi = window.lo, window.hi
        if nonneg:
            lo = max(lo, 0)

    @lru_cache(maxsize=None)
    def count(left: int, remaining: int, upper: int | None) -> int:
        if left == 0:
            return 1 if remaining == 0 else 0
        top = hi if upper is None else min(hi, upper)
        return sum(count(left - 1, remaining - a, a // 2) for a in range(lo, top + 1))

    # a // 2 is floor division, so the bound a_t >= 2 a_{t+1} is exact for negatives too
    return count(k, d, None)


# -- comparison with the coefficient function ---------------------------------


@dataclass(frozen=True)
class RelationsReport:
    checked: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches


def relation_coefficients_by_scan(u: int, v: int) -> frozenset:
    """{(i, j) in S : f((i,j),(u,v)) = 1} found by scanning j over a generous range."""
    span = abs(u) + abs(v) + 2
    out = set()
    for j in range(-span, span + 1):
        i = u + v - j
        if in_s((i, j)) and f_gamma((i, j), (u, v)):
            out.add((i, j))
    return frozenset(out)


def relations_match_f(window: Window) -> RelationsReport:
    """adem_expand(u, v) == sum over S of f((i,j),(u,v)) y_i y_j for (u, v) in S' ∩ window."""
    checked = 0
    bad = []
    for u, v in window.pairs():
        if in_s((u, v)):
            continue
        checked += 1
        expected = relation_coefficients_by_scan(u, v)
        got = adem_expand(u, v).monomials
        if got != expected:
            bad.append(((u, v), tuple(sorted(got)), tuple(sorted(expected))))
    return RelationsReport(checked, tuple(bad))
