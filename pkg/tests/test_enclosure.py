import math
from fractions import Fraction

import gmpy2
import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from erdos_fq.enclosure import (
    DomainError,
    Enclosure,
    PrecisionConfig,
    certified_decimal,
    certified_digit_count,
    dilog,
    enclosure_arith,
    euler_gamma,
    pi_enclosure,
    zeta_int,
)

CFG = PrecisionConfig()


def test_precision_config():
    assert CFG.precision_bits == 256
    with pytest.raises(ValueError):
        PrecisionConfig(32)


def test_add_is_tight():
    x = enclosure_arith("add", Enclosure.exact(1), Enclosure.exact(2))
    assert x.contains(3)
    assert x.width <= 2 * 2.0**-254


def test_div_third_straddles():
    x = enclosure_arith("div", Enclosure.exact(1), Enclosure.exact(3))
    third = Fraction(1, 3)
    assert x.lo_fraction() < third < x.hi_fraction()


def test_exp_log_roundtrip():
    x = enclosure_arith("exp", enclosure_arith("log", Enclosure.exact(5)))
    assert x.contains(5)


def test_domain_errors():
    with pytest.raises(DomainError):
        Enclosure.exact(1) / Enclosure(-1, 1)
    with pytest.raises(DomainError):
        Enclosure(-1, 2).log()
    with pytest.raises(ValueError):
        enclosure_arith("sin", Enclosure.exact(1))


def test_negation_and_even_power():
    x = -(Enclosure.exact(1) / 3)
    assert certified_decimal(x, 10) == "-0.3333333333"
    assert Enclosure(-1, 2).pow(2).contains(Enclosure(0, 4))
    assert (-(Enclosure.exact(1) / 3)).pow(2).contains(Fraction(1, 9))


def test_sqrt_and_fractional_power():
    assert Enclosure.exact(2).sqrt().pow(2).contains(2)
    assert Enclosure.exact(5).pow(Fraction(1, 2)).contains(Enclosure.exact(5).sqrt())
    r = Enclosure.exact(7).pow(Fraction(1, 3)).pow(3)
    assert r.contains(7)


def test_gamma():
    g = euler_gamma(CFG)
    assert not g.contains(Fraction("0.577215"))
    assert certified_decimal(g, 6) == "0.577215"
    assert certified_decimal(g.exp(), 6) == "1.781072"
    assert g.width < 1e-60
    # independent digits from MPFR's own constant
    with gmpy2.context(precision=400):
        ref = gmpy2.const_euler()
    assert g.lo_fraction() <= Fraction(*ref.as_integer_ratio()) <= g.hi_fraction()


def test_gamma_first_15_digits():
    assert certified_decimal(euler_gamma(CFG), 15) == "0.577215664901532"


def test_pi():
    assert certified_decimal(pi_enclosure(CFG), 20) == "3.14159265358979323846"


def _zeta_partial_oracle(s, terms=20000):
    """Partial sum plus the integral-test bracket [T^(1-s)/(s-1) - ..., ...]."""
    head = math.fsum(n ** (-s) for n in range(1, terms))
    lo = head + terms ** (1 - s) / (s - 1)
    hi = head + terms ** (-s) + terms ** (1 - s) / (s - 1)
    return lo, hi


@pytest.mark.parametrize("s", [2, 3, 4, 5, 10, 31, 100])
def test_zeta_matches_oracles(s):
    z = zeta_int(s, CFG)
    lo, hi = _zeta_partial_oracle(s)
    assert float(z.lo) <= hi + 1e-15 and float(z.hi) >= lo - 1e-15
    with mpmath.workprec(340):
        ref = Fraction(mpmath.nstr(mpmath.zeta(s), 100, strip_zeros=False))
    slack = Fraction(1, 2**280)
    assert z.lo_fraction() <= ref + slack
    assert z.hi_fraction() >= ref - slack
    assert z.width < 2.0**-240


def test_zeta_two_digits():
    # pi^2/6 = 1.6449340668..., not 1.644930
    assert certified_decimal(zeta_int(2, CFG), 10) == "1.6449340668"
    assert zeta_int(2, CFG).overlaps(pi_enclosure(CFG).pow(2) / 6)


@given(st.integers(8, 200))
def test_zeta_large_s(s):
    z = zeta_int(s, CFG)
    assert z.lo_fraction() > 1
    assert z.hi_fraction() <= 1 + 2 * Fraction(1, 2**s)


def test_zeta_rejects_small_s():
    with pytest.raises(ValueError):
        zeta_int(1, CFG)


def test_dilog_values():
    assert dilog(Enclosure.exact(0), CFG).width == 0
    half = dilog(Enclosure.exact(Fraction(1, 2)), CFG)
    pi = pi_enclosure(CFG)
    ln2 = Enclosure.exact(2).log()
    closed = pi * pi / 12 - ln2 * ln2 / 2
    assert half.overlaps(closed)
    assert half.width < 2.0**-240
    with pytest.raises((ValueError, DomainError)):
        dilog(Enclosure.exact(1), CFG)


def test_dilog_inverse_sqrt_q_decreases():
    vals = [dilog(Enclosure.exact(q).pow(Fraction(-1, 2)), CFG) for q in (2, 3, 4, 5, 7, 9, 16, 64, 1024)]
    for a, b in zip(vals, vals[1:]):
        assert b.hi < a.lo
    assert vals[-1].hi < 0.04


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=0, max_value=Fraction(3, 4), max_denominator=10**6))
def test_dilog_below_linear_bound(x):
    v = dilog(Enclosure.exact(x), CFG)
    bound = pi_enclosure(CFG).pow(2) / 6 * x
    assert v.lo <= bound.hi


def test_certified_decimal_truncates():
    x = Enclosure(Fraction("0.12345678"), Fraction("0.12345679"))
    assert certified_decimal(x) == "0.1234567"
    assert certified_digit_count(x) == 7
    assert certified_decimal(Enclosure(Fraction(-1, 10), Fraction(1, 10))) is None
    assert certified_decimal(Enclosure.exact(Fraction(2, 3)), 4) == "0.6666"
