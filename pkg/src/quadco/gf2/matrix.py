"""Dense bit matrices over F2 with labelled columns.

Rows are Python ints; bit ``k`` of a row is the entry in column ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from quadco.errors import ColumnMismatch


@dataclass(frozen=True)
class F2Matrix:
    rows: tuple
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "labels", tuple(self.labels))
        bound = 1 << len(self.labels)
        for r in self.rows:
            if r < 0 or r >= bound:
                raise ValueError("row wider than the number of column labels")

    @property
    def width(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.rows)

    @classmethod
    def from_lists(cls, rows: Iterable[Sequence[int]], labels: Sequence | None = None) -> F2Matrix:
        rows = [list(r) for r in rows]
        if labels is None:
            labels = range(len(rows[0]) if rows else 0)
        return cls(tuple(pack(r) for r in rows), tuple(labels))

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable], labels: Sequence) -> F2Matrix:
        """Build rows from collections of column labels (each label toggles its bit)."""
        index = {lab: k for k, lab in enumerate(labels)}
        rows = []
        for sup in supports:
            r = 0
            for lab in sup:
                r ^= 1 << index[lab]
            rows.append(r)
        return cls(tuple(rows), tuple(labels))

    def to_lists(self) -> list[list[int]]:
        return [unpack(r, self.width) for r in self.rows]

    def support(self, row: int) -> list:
        return [self.labels[k] for k in bits(row)]

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.to_lists())


def pack(bits_: Sequence[int]) -> int:
    r = 0
    for k, b in enumerate(bits_):
        if b & 1:
            r |= 1 << k
    return r


def unpack(row: int, width: int) -> list[int]:
    return [(row >> k) & 1 for k in range(width)]


def bits(row: int):
    """Yield the set bit positions of ``row`` in increasing order."""
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


def _echelon(rows: Iterable[int]) -> dict[int, int]:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            col = (r & -r).bit_length() - 1
            p = pivots.get(col)
            if p is None:
                pivots[col] = r
                break
            r ^= p
    return pivots


def _rref(rows: Iterable[int]) -> list[int]:
    pivots = _echelon(rows)
    cols = sorted(pivots)
    done: dict[int, int] = {}
    for c in reversed(cols):
        r = pivots[c]
        rest = r & ~((1 << (c + 1)) - 1)
        for c2 in bits(rest):
            if c2 in done:
                r ^= done[c2]
        done[c] = r
    return [done[c] for c in cols]


def rank(m: F2Matrix | Iterable[int]) -> int:
    rows = m.rows if isinstance(m, F2Matrix) else m
    return len(_echelon(rows))


def rank_and_reduce(m: F2Matrix) -> tuple[int, F2Matrix]:
    """Row rank and reduced row-echelon form (pivots are the lowest set bits)."""
    reduced = _rref(m.rows)
    return len(reduced), F2Matrix(tuple(reduced), m.labels)


def pivot_columns(m: F2Matrix) -> list[int]:
    return sorted(_echelon(m.rows))


def left_kernel(rows: Sequence[int], width: int | None = None) -> list[int]:
    """Basis of the dependencies among ``rows``; bit k of a result selects rows[k]."""
    if width is None:
        width = max((r.bit_length() for r in rows), default=0)
    mask = (1 << width) - 1
    pivots: dict[int, int] = {}
    out = []
    for k, r in enumerate(rows):
        r |= 1 << (width + k)
        while r & mask:
            col = (r & -r).bit_length() - 1
            p = pivots.get(col)
            if p is None:
                pivots[col] = r
                break
            r ^= p
        else:
            out.append(r >> width)
    return out


def nullspace(m: F2Matrix) -> F2Matrix:
    """Basis of {x : m x = 0}, i.e. the annihilator of the row space."""
    reduced = _rref(m.rows)
    pivot_of = {(r & -r).bit_length() - 1: r for r in reduced}
    out = []
    for free in range(m.width):
        if free in pivot_of:
            continue
        v = 1 << free
        for c, r in pivot_of.items():
            if (r >> free) & 1:
                v |= 1 << c
        out.append(v)
    return F2Matrix(tuple(_rref(out)), m.labels)


def _check_labels(a: F2Matrix, b: F2Matrix) -> None:
    if a.labels != b.labels:
        raise ColumnMismatch("column labels differ")


def intersect_rowspaces(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    """Basis (in RREF) of rowspace(a) ∩ rowspace(b).

    Each dependency sum(a_k) + sum(b_l) = 0 of the stacked rows yields the
    common vector sum(a_k); these span the intersection.
    """
    _check_labels(a, b)
    na = len(a.rows)
    a_mask = (1 << na) - 1
    vecs = []
    for dep in left_kernel(list(a.rows) + list(b.rows), a.width):
        v = 0
        for k in bits(dep & a_mask):
            v ^= a.rows[k]
        vecs.append(v)
    return F2Matrix(tuple(_rref(vecs)), a.labels)


def rowspace_contains(m: F2Matrix, vec: int) -> bool:
    pivots = _echelon(m.rows)
    while vec:
        col = (vec & -vec).bit_length() - 1
        p = pivots.get(col)
        if p is None:
            return False
        vec ^= p
    return True


def same_rowspace(a: F2Matrix, b: F2Matrix) -> bool:
    _check_labels(a, b)
    return _rref(a.rows) == _rref(b.rows)


def project(m: F2Matrix, columns: Sequence) -> F2Matrix:
    """Restrict every row to the given column labels (in the given order)."""
    index = {lab: k for k, lab in enumerate(m.labels)}
    picks = [index[c] for c in columns]
    rows = []
    for r in m.rows:
        out = 0
        for j, k in enumerate(picks):
            if (r >> k) & 1:
                out |= 1 << j
        rows.append(out)
    return F2Matrix(tuple(rows), tuple(columns))


def relabel(m: F2Matrix, labels: Sequence) -> F2Matrix:
    """Re-express ``m`` over a column order that is a permutation of its labels."""
    if set(labels) != set(m.labels) or len(labels) != len(m.labels):
        raise ColumnMismatch("relabel needs a permutation of the existing labels")
    return project(m, labels)
