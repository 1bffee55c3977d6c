"""Erdős sums over F_q[x].

F(I_q) is the sum over monic irreducibles p of 1/(deg p * q^deg p); F(I_{k,q})
is the same sum over monic polynomials with exactly k irreducible factors
(counted with multiplicity). The k-factor sum is split as

    F(I_{k,q}) = S + R + (error),

where S sums exactly over N-smooth polynomials of degree <= kN, and R
replaces the remaining polynomials by Mordell sums. See ``fkq``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .counting import SmoothCountTable, _irreducible_count, smooth_table
from .enclosure import (
    DEFAULT_CONFIG,
    Enclosure,
    PrecisionConfig,
    certified_decimal,
    certified_digit_count,
    euler_gamma,
    zeta_int,
)
from .exact import FieldOrder, harmonic, moebius, validate_field_order
from .mordell import MordellTable, mordell_table

__all__ = [
    "InsufficientPrecisionError",
    "MertensCoefficient",
    "SumResult",
    "erdos_sum_irreducibles",
    "fkq",
    "fkq_range",
    "head_sum",
    "mertens_coefficient",
    "mertens_product",
    "tail_estimate",
]


class InsufficientPrecisionError(ValueError):
    """More digits were requested than the enclosure certifies."""


# ---------------------------------------------------------------------------
# k = 1


def _pow_q(q: int, exponent: Fraction, bits: int) -> Enclosure:
    """Enclosure of q**exponent for a half-integer (or integer) exponent."""
    if exponent.denominator == 1:
        return Enclosure.exact(Fraction(q) ** int(exponent), bits)
    return Enclosure.exact(q, bits).pow(exponent)


def erdos_sum_irreducibles(
    q: FieldOrder | int, N: int, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> Enclosure:
    """Enclosure of F(I_q) from the first N degrees.

    Uses pi'(n) <= q^n/n for the tail: the true value is
    S_N + zeta(2) - H_N^(2) minus something in [0, 5 q^(-N/2) / N^2].
    """
    fo = validate_field_order(q)
    if N < 1:
        raise ValueError("N must be >= 1")
    qq, bits = fo.q, cfg.precision_bits
    head = Fraction(0)
    for n in range(1, N + 1):
        head += Fraction(_irreducible_count(qq, n), n * qq**n) - Fraction(1, n * n)
    upper = zeta_int(2, cfg) + head
    slack = _pow_q(qq, Fraction(-N, 2), bits) * Fraction(5, N * N)
    return Enclosure(upper.lo_fraction() - slack.hi_fraction(), upper.hi, bits)


# ---------------------------------------------------------------------------
# Mertens product and its log-series coefficients


_EXACT_MERTENS_BITS = 4096


def mertens_product(
    q: FieldOrder | int, n: int, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> Enclosure:
    """Enclosure of prod_{i<=n} (1 - q^-i)^{pi'_q(i)}.

    Small cases are evaluated as one exact rational; otherwise the log is
    summed with log1p so that tiny q^-i keep full relative accuracy.
    """
    fo = validate_field_order(q)
    if n < 1:
        raise ValueError("n must be >= 1")
    qq, bits = fo.q, cfg.precision_bits
    counts = [_irreducible_count(qq, i) for i in range(1, n + 1)]
    size = sum(c * i for i, c in enumerate(counts, 1)) * math.log2(qq)
    if size <= _EXACT_MERTENS_BITS:
        prod = Fraction(1)
        for i, c in enumerate(counts, 1):
            prod *= (1 - Fraction(1, qq**i)) ** c
        return Enclosure.exact(prod, bits)
    work = bits + 32
    total = Enclosure.exact(0, work)
    for i, c in enumerate(counts, 1):
        total = total + Enclosure.exact(Fraction(-1, qq**i), work).log1p() * c
    return total.exp().with_bits(bits)


@dataclass(frozen=True)
class MertensCoefficient:
    n: int
    j: int
    value: Fraction


def mertens_coefficient(n: int, j: int) -> Fraction:
    """c_j in |sum_{i<=n} pi'_q(i) log(1 - q^-i)| = sum_j c_j q^-j.

    c_j = sum_{d<=n} 1/(j+d) sum_{r | (j+d)/d, r <= n/d} mu(r); only d | j
    contribute since (j+d)/d must be an integer.
    """
    if n < 1 or j < 0:
        raise ValueError("mertens_coefficient needs n >= 1 and j >= 0")
    if j == 0:
        return harmonic(n)
    total = Fraction(0)
    for d in range(1, n + 1):
        if j % d:
            continue
        m = (j + d) // d
        inner = sum(moebius(r) for r in range(1, min(m, n // d) + 1) if m % r == 0)
        if inner:
            total += Fraction(inner, j + d)
    return total


# ---------------------------------------------------------------------------
# k-factor sums


@dataclass
class SumResult:
    """F(I_{k,q}) as S + R with certified one-sided defects."""

    q: FieldOrder
    k: int
    N: int
    S: Enclosure
    R: Enclosure
    lower_defect: Enclosure
    upper_defect: Enclosure
    value: Enclosure
    S_exact: Fraction | None = None

    def limiting_term(self) -> str:
        """Name of the largest contribution to the value's width."""
        parts = {
            "lower defect (raise N)": self.lower_defect.hi,
            "upper defect (raise N)": self.upper_defect.hi,
            "tail rounding (raise precision bits)": self.R.width,
        }
        return max(parts, key=parts.get)

    def certified_digits(self) -> int:
        return certified_digit_count(self.value)

    def decimal(self, digits: int | None = None) -> str:
        """Truncated decimal with exactly ``digits`` certified places."""
        if digits is not None and self.certified_digits() < digits:
            raise InsufficientPrecisionError(
                f"requested {digits} digits for q={self.q}, k={self.k}, N={self.N} but only "
                f"{self.certified_digits()} are certified; limiting term: {self.limiting_term()}"
            )
        out = certified_decimal(self.value, digits)
        if out is None:
            raise InsufficientPrecisionError(
                f"no certified digits for q={self.q}, k={self.k}; limiting term: {self.limiting_term()}"
            )
        return out


class _TableStore:
    """Reuse the largest table built so far for a given (q, N) / N."""

    def __init__(self) -> None:
        self.smooth: dict[tuple[int, int], SmoothCountTable] = {}
        self.mordell: dict[tuple[int, int], MordellTable] = {}

    def smooth_for(self, q: int, k: int, N: int) -> SmoothCountTable:
        t = self.smooth.get((q, N))
        if t is None or t.k_max < k:
            t = smooth_table(q, k, N)
            self.smooth[(q, N)] = t
        return t

    def mordell_for(self, k: int, N: int, bits: int) -> MordellTable:
        t = self.mordell.get((N, bits))
        if t is None or t.k_max < k:
            t = mordell_table(k, N, PrecisionConfig(bits))
            self.mordell[(N, bits)] = t
        return t

    def clear(self) -> None:
        self.smooth.clear()
        self.mordell.clear()


TABLES = _TableStore()


@lru_cache(maxsize=64)
def _lcm_upto(n: int) -> int:
    return math.lcm(*range(1, n + 1)) if n >= 1 else 1


def _head_exact(q: int, k: int, N: int, table: SmoothCountTable) -> Fraction:
    if k == 0:
        return Fraction(0)
    top = k * N
    L = _lcm_upto(top)
    row = table.rows[k]
    num = 0
    for n in range(k, top + 1):
        v = row[n]
        if v:
            num += int(v) * (L // n) * q ** (top - n)
    return Fraction(num, L * q**top)


def head_sum(
    q: FieldOrder | int,
    k: int,
    N: int,
    cfg: PrecisionConfig = DEFAULT_CONFIG,
    table: SmoothCountTable | None = None,
) -> Enclosure:
    """S_{k,N,q} = sum_{k<=n<=kN} Psi'_{k,q}(n, N) / (n q^n), exact then rounded out."""
    fo = validate_field_order(q)
    if k < 0 or N < 1:
        raise ValueError("head_sum needs k >= 0 and N >= 1")
    if table is None:
        table = TABLES.smooth_for(fo.q, k, N)
    elif table.k_max < k or table.m != N or table.q.q != fo.q:
        raise LookupError(f"smooth table (q={table.q}, k_max={table.k_max}, m={table.m}) "
                          f"cannot serve q={fo.q}, k={k}, N={N}")
    return Enclosure.exact(_head_exact(fo.q, k, N, table), cfg.precision_bits)


def _tail_parts(q: int, k: int, N: int, smooth: SmoothCountTable, mt: MordellTable):
    """Exact rational bounds (R_lo, R_hi, W_hi) with W = sum_i i R_i."""
    scale = 1 << mt.frac_bits
    r_lo = r_hi = w_hi = Fraction(0)
    for i in range(1, k + 1):
        span = (k - i) * N
        psi = np.asarray(smooth.rows[k - i][: span + 1], dtype=object)
        weights = np.empty(span + 1, dtype=object)
        weights[:] = [q ** (span - n) for n in range(span + 1)]
        coef = psi * weights
        lo = int(np.dot(coef, mt.lo[i][: span + 1]))
        hi = int(np.dot(coef, mt.hi[i][: span + 1]))
        den = scale * q**span * math.factorial(i)
        part_lo, part_hi = Fraction(lo, den), Fraction(hi, den)
        r_lo += part_lo
        r_hi += part_hi
        w_hi += i * part_hi
    return r_lo, r_hi, w_hi


def _defects(q: int, N: int, w_hi: Fraction, bits: int) -> tuple[Enclosure, Enclosure]:
    factor = _pow_q(q, Fraction(2 - N, 2), bits) / (q - 1)
    lower = factor * Enclosure.exact(w_hi, bits)
    upper = Enclosure.exact(Fraction(2, N * q**N), bits)
    return lower, upper


def tail_estimate(
    q: FieldOrder | int,
    k: int,
    N: int,
    cfg: PrecisionConfig = DEFAULT_CONFIG,
    cache: MordellTable | None = None,
) -> tuple[Enclosure, Enclosure, Enclosure]:
    """(R, lower_defect, upper_defect) for F(I_{k,q}).

    R = sum_{i=1}^k (1/i!) sum_{n<=(k-i)N} Psi'_{k-i}(n, N) M(i, N+1, n) / q^n,
    lower_defect = q^(1-N/2)/(q-1) sum_i i R_i, upper_defect = 2/(N q^N).
    """
    fo = validate_field_order(q)
    if k < 1 or N < 1:
        raise ValueError("tail_estimate needs k >= 1 and N >= 1")
    bits = cfg.precision_bits
    smooth = TABLES.smooth_for(fo.q, k, N)
    if cache is None or cache.k_max < k or cache.N != N:
        cache = TABLES.mordell_for(k, N, bits)
    r_lo, r_hi, w_hi = _tail_parts(fo.q, k, N, smooth, cache)
    lower, upper = _defects(fo.q, N, w_hi, bits)
    return Enclosure(r_lo, r_hi, bits), lower, upper


def _assemble(fo: FieldOrder, k: int, N: int, bits: int, smooth, mt) -> SumResult:
    s = _head_exact(fo.q, k, N, smooth)
    r_lo, r_hi, w_hi = _tail_parts(fo.q, k, N, smooth, mt)
    lower, upper = _defects(fo.q, N, w_hi, bits)
    value = Enclosure(
        s + r_lo - lower.hi_fraction(),
        s + r_hi + upper.hi_fraction(),
        bits,
    )
    return SumResult(
        q=fo,
        k=k,
        N=N,
        S=Enclosure.exact(s, bits),
        R=Enclosure(r_lo, r_hi, bits),
        lower_defect=lower,
        upper_defect=upper,
        value=value,
        S_exact=s,
    )


def fkq(
    q: FieldOrder | int, k: int, N: int, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> SumResult:
    """Certified enclosure of F(I_{k,q}) using smoothness cutoff N."""
    return fkq_range(q, k, N, cfg, k_min=k)[0]


def fkq_range(
    q: FieldOrder | int,
    k_max: int,
    N: int,
    cfg: PrecisionConfig = DEFAULT_CONFIG,
    k_min: int = 1,
) -> list[SumResult]:
    """SumResults for k_min..k_max, sharing one smooth table and one Mordell table."""
    fo = validate_field_order(q)
    if k_min < 1 or k_max < k_min or N < 1:
        raise ValueError("fkq needs 1 <= k_min <= k_max and N >= 1")
    bits = cfg.precision_bits
    smooth = TABLES.smooth_for(fo.q, k_max, N)
    mt = TABLES.mordell_for(k_max, N, bits)
    return [_assemble(fo, k, N, bits, smooth, mt) for k in range(k_min, k_max + 1)]


def e_gamma(cfg: PrecisionConfig = DEFAULT_CONFIG) -> Enclosure:
    """e^gamma, always derived from the gamma enclosure."""
    return euler_gamma(cfg).exp()
