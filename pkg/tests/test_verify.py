from erdos_fq.bounds import Verdict
from erdos_fq.verify import (
    Check,
    default_degree_bound,
    overall,
    suite_banks_martin,
    suite_bounds,
    suite_lemma32,
    suite_mertens,
)


def test_overall():
    h, f, u = (Check("x", v) for v in (Verdict.HOLDS, Verdict.FAILS, Verdict.UNDECIDED))
    assert overall([h, h]) is Verdict.HOLDS
    assert overall([h, u]) is Verdict.UNDECIDED
    assert overall([u, f]) is Verdict.FAILS
    assert Check("claim", Verdict.FAILS, "why").line().startswith("fails")


def test_default_degree_bounds():
    assert [default_degree_bound(q) for q in (2, 3, 4, 5, 7)] == [200, 150, 150, 110, 110]


def test_mertens_exception_recorded():
    checks = suite_mertens(q_max=3, n_max=5)
    assert overall(checks) is Verdict.HOLDS
    assert any("only at q=2, n=1" in c.claim for c in checks)


def test_lemma32_small():
    checks = suite_lemma32(n_max=12, bound_n_max=10, q_max=4)
    assert overall(checks) is Verdict.HOLDS


def test_bounds_suite_small():
    checks = suite_bounds(q_max=5, k_max=6, N=30)
    assert overall(checks) is Verdict.HOLDS


def test_banks_martin_needs_room_past_minimum():
    checks, _ = suite_banks_martin(3, 6, 60)
    assert overall(checks) is Verdict.UNDECIDED
    checks, rep = suite_banks_martin(3, 8, 60)
    assert overall(checks) is Verdict.HOLDS
    assert rep.minima[0] == 6


def test_banks_martin_q7_descends():
    checks, rep = suite_banks_martin(7, 8, 40)
    assert overall(checks) is Verdict.HOLDS
    assert rep.failures == []
