import pytest
from hypothesis import given, strategies as st

from quadco.errors import ColumnMismatch
from quadco.gf2 import F2Matrix, intersect_rowspaces, left_kernel, nullspace, rank, rowspace_contains, same_rowspace

WIDTH = 6
LABELS = tuple(range(WIDTH))
row_lists = st.lists(st.integers(0, (1 << WIDTH) - 1), max_size=7)


def span(rows):
    out = {0}
    for r in rows:
        out |= {v ^ r for v in out}
    return out


def test_rank_of_identity_and_dependent_rows():
    assert rank([1, 2, 4]) == 3
    assert rank([3, 5, 6]) == 2
    assert rank([]) == 0


def test_from_lists_round_trip():
    m = F2Matrix.from_lists([[1, 0, 1], [0, 1, 1]])
    assert m.to_lists() == [[1, 0, 1], [0, 1, 1]]


def test_row_wider_than_labels_rejected():
    with pytest.raises(ValueError):
        F2Matrix((8,), (0, 1, 2))


def test_intersection_requires_same_labels():
    with pytest.raises(ColumnMismatch):
        intersect_rowspaces(F2Matrix((1,), ("a", "b")), F2Matrix((1,), ("b", "a")))


@given(row_lists)
def test_nullspace_dimension_and_orthogonality(rows):
    m = F2Matrix(tuple(rows), LABELS)
    null = nullspace(m)
    assert rank(null) == len(null.rows) == WIDTH - rank(rows)
    for a in rows:
        for b in null.rows:
            assert (a & b).bit_count() % 2 == 0


@given(row_lists, row_lists)
def test_intersection_matches_brute_force(a, b):
    got = intersect_rowspaces(F2Matrix(tuple(a), LABELS), F2Matrix(tuple(b), LABELS))
    assert span(got.rows) == span(a) & span(b)


@given(row_lists)
def test_left_kernel_combinations_vanish(rows):
    for combo in left_kernel(rows, WIDTH):
        acc = 0
        for k, r in enumerate(rows):
            if combo >> k & 1:
                acc ^= r
        assert acc == 0
    assert len(left_kernel(rows, WIDTH)) == len(rows) - rank(rows)


@given(row_lists, st.integers(0, (1 << WIDTH) - 1))
def test_membership(rows, v):
    assert rowspace_contains(F2Matrix(tuple(rows), LABELS), v) == (v in span(rows))


@given(row_lists)
def test_same_rowspace_after_row_operations(rows):
    if len(rows) >= 2:
        mixed = [rows[0] ^ rows[1], *rows[1:]]
        assert same_rowspace(F2Matrix(tuple(rows), LABELS), F2Matrix(tuple(mixed), LABELS))
