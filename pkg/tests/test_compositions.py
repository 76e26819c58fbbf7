"""Counting formulas against the enumeration oracle, and the h-sequence."""
from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import is_unimodal
from rectcomp.compositions import (
    EnumerationGuardError,
    PartBounds,
    UNBOUNDED,
    count,
    count_support,
    enumerate_compositions,
    h_sequence,
)


def test_part_bounds_validation():
    with pytest.raises(ValueError):
        PartBounds(-1, 3)
    with pytest.raises(ValueError):
        PartBounds(3, 2)
    assert PartBounds(2, UNBOUNDED).unbounded
    assert not PartBounds(2, 2).unbounded


def test_count_examples():
    assert count(5, 2, PartBounds(0, UNBOUNDED)) == 6
    assert count(3, 2, PartBounds(1, 2)) == 2
    assert count(0, 0, PartBounds(0, UNBOUNDED)) == 1
    assert count(0, 0, PartBounds(1, 5)) == 1
    assert count(3, 0, PartBounds(0, 3)) == 0
    assert count(4, 3, PartBounds(0, 2)) == 6


def test_count_unbounded_matches_binomials():
    # stars and bars in both classic forms
    for n in range(12):
        for k in range(1, 6):
            assert count(n, k, PartBounds(0, UNBOUNDED)) == math.comb(n + k - 1, k - 1)
            if n >= k:
                assert count(n, k, PartBounds(1, UNBOUNDED)) == math.comb(n - 1, k - 1)


def test_count_unreachable_targets():
    assert count(1, 2, PartBounds(1, UNBOUNDED)) == 0
    assert count(7, 3, PartBounds(0, 2)) == 0
    assert count(2, 3, PartBounds(1, 2)) == 0


def test_count_support_examples():
    assert count_support(5, 2, {1, 2, 3}) == 2
    assert count_support(5, 2, range(6)) == count(5, 2, PartBounds(0, 5)) == 6
    assert count_support(7, 3, {2}) == 0
    assert count_support(6, 3, {2}) == 1
    assert count_support(0, 0, {1, 2}) == 1


def test_count_support_rejects_bad_input():
    with pytest.raises(ValueError):
        count_support(3, 2, [])
    with pytest.raises(ValueError):
        count_support(3, 2, [-1, 2])


def test_enumerate_lexicographic_order():
    got = list(enumerate_compositions(5, 2, bounds=PartBounds(0, UNBOUNDED)))
    assert got == [(0, 5), (1, 4), (2, 3), (3, 2), (4, 1), (5, 0)]


def test_enumerate_trivial_and_support():
    assert list(enumerate_compositions(0, 3, bounds=PartBounds(0, 2))) == [(0, 0, 0)]
    tuples = list(enumerate_compositions(6, 3, support={1, 2, 3}))
    assert len(tuples) == 7
    assert len(tuples) == count_support(6, 3, {1, 2, 3})
    assert all(sum(t) == 6 for t in tuples)
    assert tuples == sorted(tuples)


def test_enumerate_argument_validation():
    with pytest.raises(ValueError):
        list(enumerate_compositions(3, 2))
    with pytest.raises(ValueError):
        list(enumerate_compositions(3, 2, bounds=PartBounds(0, 2), support={1}))


def test_enumeration_guard():
    with pytest.raises(EnumerationGuardError):
        list(enumerate_compositions(50, 12, bounds=PartBounds(0, UNBOUNDED)))
    # explicit guard override admits the same space
    small = list(enumerate_compositions(3, 2, bounds=PartBounds(0, 3), guard=16))
    assert len(small) == 4
    with pytest.raises(EnumerationGuardError):
        list(enumerate_compositions(3, 2, bounds=PartBounds(0, 3), guard=15))


def test_oracle_equivalence_grid():
    bounds_family = [PartBounds(0, 2), PartBounds(0, 3), PartBounds(0, 4),
                     PartBounds(1, 2), PartBounds(1, 4),
                     PartBounds(0, UNBOUNDED), PartBounds(1, UNBOUNDED),
                     PartBounds(2, UNBOUNDED)]
    for bounds in bounds_family:
        for k in range(6):
            for n in range(16):
                listed = list(enumerate_compositions(n, k, bounds=bounds))
                assert len(listed) == count(n, k, bounds)
                assert len(set(listed)) == len(listed)
                if not bounds.unbounded:
                    sup = range(bounds.a, bounds.b + 1)
                    assert count_support(n, k, sup) == count(n, k, bounds)


def test_shift_invariance():
    # c(n,k,a,b) = c(n-ka, k, 0, b-a), and the unbounded analogue
    for a in range(4):
        for width in range(4):
            b = a + width
            for k in range(5):
                for n in range(16):
                    assert count(n, k, PartBounds(a, b)) == \
                        count(n - k * a, k, PartBounds(0, width))
    for a in range(4):
        for k in range(5):
            for n in range(16):
                assert count(n, k, PartBounds(a, UNBOUNDED)) == \
                    count(n - k * a, k, PartBounds(0, UNBOUNDED))


def test_h_sequence_examples():
    assert h_sequence(1, 1) == (1, 1)
    h25 = h_sequence(2, 5)
    assert len(h25) == 11
    assert sum(h25) == 363
    assert h25[0] == 5
    assert h_sequence(0, 7) == (7,)


def test_h_sequence_matches_row_sums():
    for l in range(5):
        for m in range(1, 8):
            h = h_sequence(l, m)
            for n, value in enumerate(h):
                assert value == sum(count(n, j, PartBounds(0, l)) for j in range(1, m + 1))


def test_h_sequence_normalization():
    for l in range(9):
        for m in range(1, 21):
            total = sum(h_sequence(l, m))
            if l == 0:
                assert total == m
            else:
                assert total == ((l + 1) ** (m + 1) - (l + 1)) // l


def test_h_sequence_unimodal():
    for l in range(9):
        for m in range(1, 21):
            assert is_unimodal(h_sequence(l, m)), (l, m)


def test_h_sequence_validation():
    with pytest.raises(ValueError):
        h_sequence(-1, 3)
    with pytest.raises(ValueError):
        h_sequence(2, 0)


@given(
    n=st.integers(0, 25),
    k=st.integers(0, 6),
    a=st.integers(0, 3),
    width=st.integers(0, 4),
)
@settings(max_examples=80, deadline=None)
def test_count_nonnegative_and_shift(n, k, a, width):
    bounds = PartBounds(a, a + width)
    value = count(n, k, bounds)
    assert value >= 0
    assert value == count(n - k * a, k, PartBounds(0, width))


@given(n=st.integers(0, 12), k=st.integers(0, 4),
       support=st.sets(st.integers(0, 6), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_count_support_matches_enumeration(n, k, support):
    assert count_support(n, k, support) == \
        len(list(enumerate_compositions(n, k, support=support)))
