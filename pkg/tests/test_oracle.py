from math import factorial

import pytest

from erdos_fq.counting import composition_sum, irreducible_count, smooth_count
from erdos_fq.oracle import OracleBudgetError, finite_field_tables, oracle_enumerate


def test_field_tables_are_fields():
    for q in (4, 8, 9):
        add, mul = finite_field_tables(q)
        for a in range(1, q):
            assert sorted(mul[a][b] for b in range(q)) == list(range(q))
            assert any(mul[a][b] == 1 for b in range(q))
        assert all(add[a][0] == a for a in range(q))


def test_small_enumeration_by_hand():
    t = oracle_enumerate(2, 4)
    assert t.pi_prime(1) == 2
    assert t.pi_prime(4) == 3
    # x^2, x(x+1), (x+1)^2
    assert t.pi_k(2, 2) == 3
    assert t.pi_star_k(2, 2) == 1
    assert t.psi(2, 2, 1) == 3
    t3 = oracle_enumerate(3, 2)
    assert t3.pi_prime(2) == 3


@pytest.mark.parametrize("q,D", [(2, 10), (3, 6), (4, 5), (5, 4), (7, 3), (8, 3), (9, 3)])
def test_oracle_matches_formulas(q, D):
    t = oracle_enumerate(q, D)
    psi = t.psi_table()
    for n in range(1, D + 1):
        assert t.pi_prime(n) == irreducible_count(q, n)
        assert sum(t.pi_k(k, n) for k in range(1, n + 1)) == q**n
        for k in range(1, n + 1):
            for m in range(1, D + 1):
                assert psi[(k, n, m)] == smooth_count(q, k, n, m)
            comp = composition_sum(q, k, n)
            assert factorial(k) * t.pi_star_k(k, n) <= comp <= factorial(k) * t.pi_k(k, n)


def test_partial_sum_k1():
    from fractions import Fraction

    t = oracle_enumerate(2, 8)
    direct = sum(Fraction(irreducible_count(2, n), n * 2**n) for n in range(1, 9))
    assert t.erdos_partial_sum(1) == direct


def test_oracle_limits():
    with pytest.raises(ValueError):
        oracle_enumerate(11, 2)
    with pytest.raises(ValueError):
        oracle_enumerate(2, 16)
    with pytest.raises(OracleBudgetError):
        oracle_enumerate(2, 12, budget=1000)
