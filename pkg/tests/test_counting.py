from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from erdos_fq.counting import (
    composition_sum,
    irreducible_count,
    irreducible_count_bounds,
    irreducible_table,
    smooth_count,
    smooth_count_by_partitions,
    smooth_table,
)
from erdos_fq.exact import NotAPrimePowerError, divisors

PRIME_POWERS_64 = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64]


def test_irreducible_count_examples():
    assert irreducible_count(2, 1) == 2
    assert irreducible_count(2, 4) == 3
    assert irreducible_count(3, 2) == 3
    # OEIS A001037
    assert [irreducible_count(2, n) for n in range(1, 11)] == [2, 1, 2, 3, 6, 9, 18, 30, 56, 99]


def test_irreducible_count_errors():
    with pytest.raises(NotAPrimePowerError):
        irreducible_count(6, 2)
    with pytest.raises(ValueError):
        irreducible_count(2, 0)


def test_irreducible_count_bounds_examples():
    lo, hi = irreducible_count_bounds(2, 4)
    assert (lo, hi) == (2, 4)
    lo, hi = irreducible_count_bounds(2, 1)
    assert lo <= 2 <= hi == 2


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_irreducible_count_within_bounds(q):
    for n in range(1, 60):
        lo, hi = irreducible_count_bounds(q, n)
        assert lo <= irreducible_count(q, n) <= hi


@settings(max_examples=60)
@given(st.sampled_from(PRIME_POWERS_64), st.integers(1, 80))
def test_necklace_identity(q, n):
    assert sum(d * irreducible_count(q, d) for d in divisors(n)) == q**n


def test_irreducible_table_validate():
    t = irreducible_table(3, 40)
    t.validate()
    assert t[1] == 3
    t.counts[12] += 1
    with pytest.raises(ValueError, match="n=12"):
        t.validate()


def test_smooth_count_examples():
    assert smooth_count(2, 2, 2, 1) == 3
    assert smooth_count(2, 3, 2, 2) == 0
    for q in (2, 3, 4, 9):
        for n in range(1, 8):
            assert smooth_count(q, 1, n, 8) == irreducible_count(q, n)


@pytest.mark.parametrize("q,m", [(2, 4), (3, 3), (4, 2), (5, 3)])
def test_smooth_table_matches_partition_sum(q, m):
    table = smooth_table(q, 5, m)
    for k in range(6):
        for n in range(k * m + 1):
            assert table.get(k, n) == smooth_count_by_partitions(q, k, n, m)


def test_smooth_table_marginal():
    # with m >= n every degree-n polynomial is m-smooth, so the k-sum is q^n
    q, m = 3, 12
    table = smooth_table(q, 12, m)
    for n in range(1, m + 1):
        assert sum(table.get(k, n) for k in range(n + 1)) == q**n
    with pytest.raises(KeyError):
        table.get(13, 5)


def test_composition_sum_brackets_smooth_count():
    # an ordered tuple of irreducibles overcounts unordered multisets by at most k!
    from math import factorial

    for q in (2, 3):
        for n in range(1, 10):
            for k in range(1, n + 1):
                psi = smooth_count(q, k, n, n)
                comp = composition_sum(q, k, n)
                assert psi <= comp <= factorial(k) * psi


def test_composition_sum_k1():
    assert composition_sum(2, 1, 7) == irreducible_count(2, 7)
    assert composition_sum(2, 0, 0) == 1
    assert composition_sum(2, 0, 3) == 0
    assert Fraction(composition_sum(2, 2, 2)) == 4  # (x)(x), (x)(x+1), (x+1)(x), (x+1)(x+1)
