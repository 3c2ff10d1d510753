import pytest
from hypothesis import given
from hypothesis import strategies as st

from wminus.dims import (
    distinct_partition_count,
    multiset_generator_count,
    odd_partition_count,
    series_coefficients,
)


def test_series_examples():
    t = series_coefficients(4, 4)
    assert t[(1, 1)] == 1
    assert t[(0, 0)] == 1
    assert t[(2, 2)] == 1


def test_multiset_examples():
    assert multiset_generator_count(1, 1) == 1
    assert multiset_generator_count(2, 1) == 0
    # {(1,1),(3,1)} is the only multiset with sums (4,2)
    assert multiset_generator_count(4, 2) == 1


def test_odd_partition_examples():
    assert odd_partition_count(0) == 1
    assert odd_partition_count(4) == 2
    assert odd_partition_count(9) == 8
    # partitions into odd parts, n = 0..12
    assert [odd_partition_count(n) for n in range(13)] == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15]


@given(st.integers(0, 7), st.integers(0, 7))
def test_series_matches_brute_force(r, k):
    assert series_coefficients(7, 7)[(r, k)] == multiset_generator_count(r, k)


@given(st.integers(0, 25))
def test_odd_equals_distinct(n):
    assert odd_partition_count(n) == distinct_partition_count(n)


def test_mirror_side():
    pos, neg = series_coefficients(5, 5), series_coefficients(5, 5, "<")
    assert all(neg[(-r, k)] == pos[(r, k)] for r in range(6) for k in range(6))
    assert neg.r_range()[0] == -5


def test_render_and_machine_lines():
    t = series_coefficients(3, 2)
    lines = t.render().splitlines()
    assert lines[0].split() == ["k\\r", "0", "1", "2", "3"]
    assert lines[2].split() == ["1", "0", "1", "0", "1"]
    assert ("dim[1,1]", "1") in list(t.machine_lines())


def test_bad_bounds():
    with pytest.raises(ValueError):
        series_coefficients(-1, 2)
    with pytest.raises(ValueError):
        series_coefficients(2, 2, "x")
