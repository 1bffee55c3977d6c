"""End-to-end acceptance checks, one per criterion.

Each test prints a single ``ACCEPTANCE n: PASS|FAIL ...`` line (visible
even without ``-s``) and then asserts. Run alone with

    pytest tests/test_acceptance.py -v
"""

import time
from fractions import Fraction

import pytest

from erdos_fq.bounds import Verdict, banks_martin_scan, prime_powers, universal_constants
from erdos_fq.counting import irreducible_count
from erdos_fq.enclosure import (
    Enclosure,
    PrecisionConfig,
    certified_decimal,
    certified_digit_count,
    euler_gamma,
    zeta_int,
)
from erdos_fq.exact import divisors, moebius
from erdos_fq.mordell import MordellCache, mordell
from erdos_fq.reference import Q5_EXCESS, TABLE_QS, TABLE_VALUES
from erdos_fq.sums import TABLES, erdos_sum_irreducibles, fkq_range
from erdos_fq.verify import (
    default_degree_bound,
    overall,
    suite_lemma32,
    suite_mertens,
    suite_oracle,
    suite_universal,
)

CFG = PrecisionConfig(256)


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        return ok

    return emit


def test_acceptance_1_irreducible_sum(report):
    t0 = time.perf_counter()
    x = erdos_sum_irreducibles(2, 200, CFG)
    elapsed = time.perf_counter() - t0
    # the published digits are truncated, so agreement of the certified
    # 19-place prefix is the containment test
    digits = certified_digit_count(x)
    ok = (
        certified_decimal(x, 19) == "1.4676602238442289268"
        and digits >= 19
        and elapsed < 5
    )
    report(1, ok, f"F(I_2) = {certified_decimal(x)} ({digits} certified digits, {elapsed:.2f}s < 5s)")
    assert ok


def test_acceptance_2_table_grid(report):
    TABLES.clear()
    t0 = time.perf_counter()
    mismatches = []
    for q in TABLE_QS:
        for res in fkq_range(q, 10, default_degree_bound(q), CFG):
            want = TABLE_VALUES[q][res.k]
            places = len(want) - 2
            got = certified_decimal(res.value, places) if res.certified_digits() >= places else None
            if got != want:
                mismatches.append((q, res.k, got, want))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 30 * 60
    report(2, ok, f"50 cells, {50 - len(mismatches)} exact digit matches, {elapsed:.1f}s < 1800s"
           + (f"; mismatches {mismatches}" if mismatches else ""))
    assert ok


MINIMA = {2: (4, "0.956237", 10), 3: (6, "0.994968", 12), 4: (9, "0.999781", 12)}


def test_acceptance_3_banks_martin(report):
    t0 = time.perf_counter()
    details, ok = [], True
    for q, (k_min, prefix, k_max) in MINIMA.items():
        rep = banks_martin_scan(q, k_max, default_degree_bound(q), CFG)
        v = rep.values[k_min - 1]
        strict = rep.steps[k_min - 2] == ">" and rep.steps[k_min - 1] == "<"
        good = rep.minima[:1] == [k_min] and strict and certified_decimal(v, 6) == prefix
        ok &= good
        details.append(f"q={q} min k={rep.minima[:1]} {certified_decimal(v, 6)}")
    rep5 = banks_martin_scan(5, 30, 60, CFG)
    descending = rep5.descending is Verdict.HOLDS
    above = all(a is Verdict.HOLDS for a in rep5.above_one)
    excess_ok = True
    for k, (mant, exp) in Q5_EXCESS.items():
        scaled = (rep5.values[k - 1] - 1) * Fraction(10**-exp)
        excess_ok &= certified_decimal(scaled, len(mant) - 2) == mant
    ok &= descending and above and excess_ok
    elapsed = time.perf_counter() - t0
    details.append(f"q=5 k<=30 decreasing={descending} >1={above} k=29,30 digits={excess_ok}")
    report(3, ok, "; ".join(details) + f" ({elapsed:.1f}s)")
    assert ok


def test_acceptance_4_lemma_coefficients(report):
    checks = suite_lemma32(n_max=60, bound_n_max=0, q_max=1)
    ok = len(checks) == 60 and overall(checks) is Verdict.HOLDS
    report(4, ok, f"c_0 = H_n and c_j = 0 for 1 <= j <= n/2, exact, n <= 60 ({len(checks)} checks)")
    assert ok


def test_acceptance_5_mertens(report):
    checks = suite_mertens(q_max=16, n_max=40, cfg=CFG)
    held = sum(c.verdict is Verdict.HOLDS for c in checks)
    ok = overall(checks) is Verdict.HOLDS
    report(5, ok, f"{held}/{len(checks)} certified, q <= 16, n <= 40, sole exception (2, 1) confirmed")
    assert ok


def test_acceptance_6_universal(report):
    checks = suite_universal(q_max=19, N=200, cfg=CFG)
    consts = universal_constants(CFG)
    digits = {name: certified_digit_count(enc) for name, enc in consts.items()}
    ok = overall(checks) is Verdict.HOLDS and all(d >= 6 for d in digits.values())
    n_q = len(prime_powers(3, 19))
    report(6, ok, f"B(q) < e^gamma for {n_q} prime powers 3..19; constants "
           + ", ".join(f"{certified_decimal(e, 6)}" for e in consts.values()))
    assert ok


def test_acceptance_7_oracle(report):
    t0 = time.perf_counter()
    checks = suite_oracle(2, 14) + suite_oracle(3, 9)
    elapsed = time.perf_counter() - t0
    ok = overall(checks) is Verdict.HOLDS and elapsed < 600
    report(7, ok, f"F_2 deg <= 14 and F_3 deg <= 9: {len(checks)} exhaustive checks hold ({elapsed:.1f}s < 600s)")
    assert ok


def test_acceptance_8_properties(report):
    failures = []
    if any(sum(moebius(d) for d in divisors(n)) != (n == 1) for n in range(1, 10_001)):
        failures.append("moebius")
    for q in prime_powers(2, 64):
        if any(sum(d * irreducible_count(q, d) for d in divisors(n)) != q**n for n in range(1, 81)):
            failures.append(f"necklace q={q}")
    sym, alt = MordellCache(), MordellCache()
    for k in range(1, 6):
        for N in range(1, 7):
            for a in range(11):
                x = mordell((k, N, a), CFG, sym, base="symmetric")
                y = mordell((k, N, a), CFG, alt, base="alternating")
                same = x.overlaps(y) if isinstance(x, Enclosure) else x == y
                if not same:
                    failures.append(f"mordell {(k, N, a)}")
    for make in (lambda c: zeta_int(3, c), lambda c: euler_gamma(c).exp(),
                 lambda c: erdos_sum_irreducibles(3, 40, c)):
        encs = [make(PrecisionConfig(b)) for b in (64, 128, 256, 512)]
        if not all(a.contains(b) for a, b in zip(encs, encs[1:])):
            failures.append("nesting")
    ok = not failures
    report(8, ok, "moebius sum n <= 10^4, necklace q <= 64 n <= 80, Mordell k <= 5 N <= 6 a <= 10, "
           "precision-doubling nesting" + (f"; failures {failures}" if failures else ""))
    assert ok
