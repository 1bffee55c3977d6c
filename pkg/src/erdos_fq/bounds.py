"""Closed-form bounds on Erdős sums and certified claim checkers.

Every checker returns a three-valued ``Verdict``: an inequality between two
enclosures is only decided when the intervals are disjoint.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .counting import _irreducible_count
from .enclosure import (
    DEFAULT_CONFIG,
    Enclosure,
    PrecisionConfig,
    dilog,
    euler_gamma,
    pi_enclosure,
    zeta_int,
)
from .exact import FieldOrder, validate_field_order
from .sums import SumResult, fkq_range

__all__ = [
    "BanksMartinReport",
    "QkBoundResult",
    "Verdict",
    "banks_martin_scan",
    "fkq_lower_bound",
    "fkq_upper_bound",
    "irreducible_sum_bounds",
    "less_than",
    "lower_bound_applies",
    "next_prime_power",
    "prime_powers",
    "qk_bound",
    "universal_bound_check",
    "universal_constants",
]


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDECIDED = "undecided"

    def __str__(self) -> str:
        return self.value


def less_than(x: Enclosure, y: Enclosure) -> Verdict:
    """Certified x < y."""
    c = x.compare(y)
    if c == -1:
        return Verdict.HOLDS
    if c == 1:
        return Verdict.FAILS
    return Verdict.UNDECIDED


def prime_powers(lo: int, hi: int) -> list[int]:
    out = []
    for q in range(max(lo, 2), hi + 1):
        try:
            validate_field_order(q)
        except ValueError:
            continue
        out.append(q)
    return out


def _inv_sqrt(q: int, bits: int) -> Enclosure:
    return Enclosure.exact(q, bits).pow(Fraction(-1, 2))


def irreducible_sum_bounds(
    q: FieldOrder | int, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> tuple[Enclosure, Enclosure]:
    """(zeta(2) - q/(q-1) Li2(q^-1/2), zeta(2)) bracketing F(I_q)."""
    fo = validate_field_order(q)
    bits = cfg.precision_bits
    upper = zeta_int(2, cfg)
    lower = upper - dilog(_inv_sqrt(fo.q, bits), cfg) * Fraction(fo.q, fo.q - 1)
    return lower, upper


def fkq_upper_bound(
    q: FieldOrder | int, k: int, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> Enclosure:
    """zeta(3) + Li2(1/q)/2 for k = 2; zeta(k+1) + log(q/(q-1)) zeta(k-1) for k >= 3."""
    fo = validate_field_order(q)
    if k < 2:
        raise ValueError("fkq_upper_bound needs k >= 2; use irreducible_sum_bounds for k = 1")
    bits = cfg.precision_bits
    if k == 2:
        return zeta_int(3, cfg) + dilog(Enclosure.exact(Fraction(1, fo.q), bits), cfg) * Fraction(1, 2)
    log_ratio = Enclosure.exact(Fraction(fo.q, fo.q - 1), bits).log()
    return zeta_int(k + 1, cfg) + log_ratio * zeta_int(k - 1, cfg)


def fkq_lower_bound(
    q: FieldOrder | int, k: int, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> Enclosure:
    """(1 - sqrt(q)/(q-1))^k zeta(k+1).

    The derivation needs a nonnegative base, which fails only at q = 2.
    There the raw formula value is still returned (it is tiny, and negative
    for odd k); ``lower_bound_applies`` tells callers whether it is backed
    by the argument.
    """
    fo = validate_field_order(q)
    if k < 1:
        raise ValueError("k must be >= 1")
    bits = cfg.precision_bits
    base = 1 - Enclosure.exact(fo.q, bits).sqrt() / (fo.q - 1)
    return base.pow(k) * zeta_int(k + 1, cfg)


def lower_bound_applies(q: FieldOrder | int) -> bool:
    """True when 1 - sqrt(q)/(q-1) >= 0, i.e. (q-1)^2 >= q."""
    fo = validate_field_order(q)
    return (fo.q - 1) ** 2 >= fo.q


# ---------------------------------------------------------------------------
# q_k


@dataclass
class QkBoundResult:
    k: int
    a: Enclosure | None
    b: Enclosure | None
    eta: Enclosure
    bound: Enclosure
    threshold: Enclosure | None = None  # (sqrt(4ab^2+b^4) + 2a + b^2)/2
    explicit: int | None = None  # stated thresholds for k = 2, 3


def _eta(cfg: PrecisionConfig) -> Enclosure:
    z3, z4 = zeta_int(3, cfg), zeta_int(4, cfg)
    return (z3 * 32 + 1) / (z4 * z4 * (9 * 1024))


def qk_bound(k: int, cfg: PrecisionConfig = DEFAULT_CONFIG) -> QkBoundResult:
    """Size of q beyond which F(I_1,q) > ... > F(I_k,q) is guaranteed.

    k = 2 uses the direct threshold q >= 11 and k = 3 the reference value
    q = 413; for k >= 4 the bound is 4.03 (k-1)^2 4^k zeta(k)^2.
    """
    if k < 2:
        raise ValueError("qk_bound needs k >= 2")
    bits = cfg.precision_bits
    eta = _eta(cfg)
    if k in (2, 3):
        val = 11 if k == 2 else 413
        return QkBoundResult(k, None, None, eta, Enclosure.exact(val, bits), explicit=val)
    zk = zeta_int(k, cfg)
    a = zeta_int(k - 1, cfg) * 2 ** (k + 1) + 1
    b = zk * ((k - 1) * 2 ** (k + 1))
    b2 = b * b
    threshold = ((a * b2 * 4 + b2 * b2).sqrt() + a * 2 + b2) * Fraction(1, 2)
    bound = zk * zk * (Fraction(403, 100) * (k - 1) ** 2 * 4**k)
    return QkBoundResult(k, a, b, eta, bound, threshold)


# ---------------------------------------------------------------------------
# universal bound for primitive sets


def universal_constants(cfg: PrecisionConfig = DEFAULT_CONFIG) -> dict[str, Enclosure]:
    """e^gamma, the q-independent limit 1 + e^(gamma-1) + (pi^2-9)/6, and 1 + e^gamma/2."""
    g = euler_gamma(cfg)
    pi = pi_enclosure(cfg)
    return {
        "e_gamma": g.exp(),
        "limit": 1 + (g - 1).exp() + (pi * pi - 9) / 6,
        "q2": 1 + g.exp() / 2,
    }


def universal_bound_check(
    q: FieldOrder | int, N: int = 60, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> tuple[Enclosure, Verdict]:
    """B(q) = 1 + e^gamma (1-1/q)^q + sum_{n>=2} pi'(n)/(n(n+1)q^n), and B(q) < e^gamma.

    Terms beyond degree N are bounded by sum_{n>N} 1/n^3 <= 1/(2N^2).
    """
    fo = validate_field_order(q)
    if fo.q == 2:
        raise ValueError("q = 2 is covered by the separate constant 1 + e^gamma/2")
    if N < 2:
        raise ValueError("N must be >= 2")
    qq, bits = fo.q, cfg.precision_bits
    head = sum(
        (Fraction(_irreducible_count(qq, n), n * (n + 1) * qq**n) for n in range(2, N + 1)),
        Fraction(0),
    )
    eg = euler_gamma(cfg).exp()
    main = eg * Enclosure.exact((1 - Fraction(1, qq)) ** qq, bits) + (1 + head)
    B = Enclosure(main.lo, main.hi_fraction() + Fraction(1, 2 * N * N), bits)
    return B, less_than(B, eg)


# ---------------------------------------------------------------------------
# Banks-Martin scan


@dataclass
class BanksMartinReport:
    q: int
    k_max: int
    N: int
    results: list[SumResult] = field(repr=False)
    steps: list[str]  # steps[i] compares k=i+1 with k=i+2: ">", "<" or "undecided"
    above_one: list[Verdict]
    minima: list[int]

    @property
    def values(self) -> list[Enclosure]:
        return [r.value for r in self.results]

    @property
    def descending(self) -> Verdict:
        if all(s == ">" for s in self.steps):
            return Verdict.HOLDS
        if any(s == "<" for s in self.steps):
            return Verdict.FAILS
        return Verdict.UNDECIDED

    @property
    def failures(self) -> list[int]:
        """k such that F(I_k) < F(I_{k+1}) is certified."""
        return [i + 1 for i, s in enumerate(self.steps) if s == "<"]

    @property
    def undecided(self) -> list[int]:
        return [i + 1 for i, s in enumerate(self.steps) if s == "undecided"]


def _step(x: Enclosure, y: Enclosure) -> str:
    c = x.compare(y)
    return {1: ">", -1: "<"}.get(c, "undecided")


def banks_martin_scan(
    q: FieldOrder | int, k_max: int, N: int, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> BanksMartinReport:
    """Certified comparisons of consecutive F(I_{k,q}) for k <= k_max, and against 1."""
    fo = validate_field_order(q)
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    results = fkq_range(fo, k_max, N, cfg)
    vals = [r.value for r in results]
    steps = [_step(vals[i], vals[i + 1]) for i in range(len(vals) - 1)]
    above = [less_than(Enclosure.exact(1, cfg.precision_bits), v) for v in vals]
    minima = [
        i + 1
        for i in range(1, len(vals) - 1)
        if steps[i - 1] == ">" and steps[i] == "<"
    ]
    return BanksMartinReport(fo.q, k_max, N, results, steps, above, minima)


def next_prime_power(x: Enclosure) -> int:
    """Smallest prime power strictly above the enclosure."""
    q = int(math.floor(x.hi)) + 1
    while True:
        try:
            validate_field_order(q)
            return q
        except ValueError:
            q += 1
