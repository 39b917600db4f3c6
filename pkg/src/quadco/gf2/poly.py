"""Sparse multivariate (Laurent) polynomials over F2.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable id
with no zero exponents; a polynomial is the frozenset of its monomials, so
addition is symmetric difference.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from quadco.errors import NonInvertibleImage

Monomial = tuple  # tuple[tuple[int, int], ...]

ONE_MONO: Monomial = ()


def mono(exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[int, int] = {}
    for var, exp in items:
        acc[var] = acc.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for var, exp in b:
        acc[var] = acc.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ONE_MONO
    return tuple((v, e * k) for v, e in a)


def mono_degree(a: Monomial, weights: Mapping[int, int] | None = None) -> int:
    if weights is None:
        return sum(e for _, e in a)
    return sum(weights[v] * e for v, e in a)


def _toggle(acc: set, m: Monomial) -> None:
    if m in acc:
        acc.remove(m)
    else:
        acc.add(m)


class PolyF2:
    """An immutable polynomial over F2 in integer-labelled variables."""

    __slots__ = ("terms",)

    def __init__(self, monomials: Iterable = ()):
        acc: set = set()
        for m in monomials:
            _toggle(acc, m if isinstance(m, tuple) else mono(m))
        self.terms = frozenset(acc)

    @classmethod
    def _wrap(cls, terms) -> PolyF2:
        obj = cls.__new__(cls)
        obj.terms = frozenset(terms)
        return obj

    @classmethod
    def one(cls) -> PolyF2:
        return cls._wrap((ONE_MONO,))

    @classmethod
    def zero(cls) -> PolyF2:
        return cls._wrap(())

    @classmethod
    def var(cls, v: int, exp: int = 1) -> PolyF2:
        return cls._wrap((mono({v: exp}),))

    @classmethod
    def monomial(cls, exponents) -> PolyF2:
        return cls._wrap((mono(exponents),))

    def __add__(self, other: PolyF2) -> PolyF2:
        return PolyF2._wrap(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: PolyF2) -> PolyF2:
        if len(other.terms) == 1 and ONE_MONO in other.terms:
            return self
        if len(self.terms) == 1 and ONE_MONO in self.terms:
            return other
        acc: set = set()
        for a in self.terms:
            for b in other.terms:
                _toggle(acc, mono_mul(a, b))
        return PolyF2._wrap(acc)

    def frobenius(self, times: int = 1) -> PolyF2:
        """Raise to the power 2**times (injective on monomials in char 2)."""
        k = 1 << times
        return PolyF2._wrap(mono_pow(m, k) for m in self.terms)

    def __pow__(self, k: int) -> PolyF2:
        if k < 0:
            if len(self.terms) != 1:
                raise NonInvertibleImage(f"cannot invert {self!r}")
            (m,) = self.terms
            return PolyF2._wrap((mono_pow(m, k),))
        result = PolyF2.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base.frobenius()
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyF2):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        if other == 1:
            return self.terms == {ONE_MONO}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __contains__(self, m) -> bool:
        return (m if isinstance(m, tuple) else mono(m)) in self.terms

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def is_laurent(self) -> bool:
        return any(e < 0 for m in self.terms for _, e in m)

    def degrees(self, weights: Mapping[int, int] | None = None) -> set[int]:
        return {mono_degree(m, weights) for m in self.terms}

    def is_homogeneous(self, weights: Mapping[int, int] | None = None) -> bool:
        return len(self.degrees(weights)) <= 1

    def set_zero(self, var: int) -> PolyF2:
        """Image under the ring map sending ``var`` to 0 and fixing the rest."""
        out = []
        for m in self.terms:
            e = dict(m).get(var, 0)
            if e < 0:
                raise NonInvertibleImage(f"variable {var} appears inverted")
            if e == 0:
                out.append(m)
        return PolyF2._wrap(out)

    def rename(self, mapping: Mapping[int, int]) -> PolyF2:
        return PolyF2._wrap(mono((mapping.get(v, v), e) for v, e in m) for m in self.terms)

    def sorted_terms(self, order: Iterable[int] | None = None) -> list:
        vs = sorted(self.variables()) if order is None else list(order)

        def key(m):
            d = dict(m)
            return tuple(-d.get(v, 0) for v in vs)

        return sorted(self.terms, key=key)

    def to_text(self, names: Mapping[int, str] | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in self.sorted_terms():
            if not m:
                parts.append("1")
                continue
            factors = []
            for v, e in m:
                name = names.get(v, f"v{v}") if names is not None else f"v{v}"
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append(" ".join(factors))
        return " + ".join(parts)

    def to_json(self, names: Mapping[int, str] | None = None) -> list[dict]:
        out = []
        for m in self.sorted_terms():
            out.append({(names.get(v, f"v{v}") if names is not None else f"v{v}"): e for v, e in m})
        return out

    def __repr__(self) -> str:
        return f"PolyF2({self.to_text()})"


def poly_mul(p: PolyF2, q: PolyF2) -> PolyF2:
    return p * q


def poly_substitute(p: PolyF2, assignment: Mapping[int, PolyF2]) -> PolyF2:
    """Apply the ring morphism sending each variable to its image.

    Variables missing from ``assignment`` are left fixed.  A variable carrying
    a negative exponent must map to a single (invertible) monomial.
    """
    cache: dict[tuple[int, int], PolyF2] = {}

    def power(v: int, e: int) -> PolyF2:
        key = (v, e)
        if key not in cache:
            image = assignment.get(v)
            if image is None:
                cache[key] = PolyF2.var(v, e)
            elif e < 0 and len(image.terms) != 1:
                raise NonInvertibleImage(f"variable {v} has exponent {e} but maps to {image!r}")
            else:
                cache[key] = image ** e
        return cache[key]

    result: set = set()
    for m in p.terms:
        img = PolyF2.one()
        for v, e in m:
            img = img * power(v, e)
            if not img:
                break
        for t in img.terms:
            _toggle(result, t)
    return PolyF2._wrap(result)
