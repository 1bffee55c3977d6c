"""Mordell sums M(k, N, a) = sum over n_1..n_k >= N of 1/(n_1...n_k (n_1+...+n_k+a)).

Two evaluation paths:

* ``mordell``: scalar, memoized. Exact ``Fraction`` whenever a >= 1, an
  ``Enclosure`` when a = 0 (the value involves zeta(k+1)).
* ``MordellTable``: every M(c, N+1, a) needed by the tail estimate at once,
  in integer fixed point with separate floor/ceil arrays. This is the fast
  path; the scalar route is its test oracle.

Both descend from N to 1 with inclusion-exclusion on the coordinates equal
to N-1:

    M(k, N, a) = sum_i (-1)^i C(k, i) M(k-i, N-1, a + i(N-1)) / (N-1)^i
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .enclosure import DEFAULT_CONFIG, Enclosure, PrecisionConfig, zeta_int
from .exact import binomial_shifted

__all__ = [
    "MordellCache",
    "MordellKey",
    "MordellTable",
    "mordell",
    "mordell_base",
    "mordell_base_alternating",
    "mordell_table",
]


@dataclass(frozen=True)
class MordellKey:
    k: int
    N: int
    a: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.N < 1 or self.a < 0:
            raise ValueError(f"invalid Mordell key {self}")
        if self.k == 0 and self.a == 0:
            raise ValueError("M(0, N, 0) diverges")


@dataclass
class MordellCache:
    values: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.values)


def _h_complete(k: int, a: int) -> Fraction:
    """Complete homogeneous symmetric polynomial h_k(1, 1/2, ..., 1/a)."""
    h = [Fraction(1)] + [Fraction(0)] * k
    for b in range(1, a + 1):
        inv = Fraction(1, b)
        for c in range(1, k + 1):
            h[c] += h[c - 1] * inv
    return h[k]


def mordell_base(k: int, a: int) -> Fraction:
    """Exact M(k, 1, a) for a >= 1, as (k!/a) h_k(1, 1/2, ..., 1/a).

    Comes from 1/(s+a) = int_0^1 x^(s+a-1) dx and
    sum_{n>=1} x^n/n = -log(1-x), giving int_0^1 x^(a-1) (-log(1-x))^k dx.
    All terms are positive, so this never cancels.
    """
    if a < 1:
        raise ValueError("mordell_base needs a >= 1; use zeta for a = 0")
    return Fraction(math.factorial(k), a) * _h_complete(k, a)


def mordell_base_alternating(k: int, a: int) -> Fraction:
    """Exact M(k, 1, a) for a >= 1 via k! sum_i (-1)^i C(a-1, i) / (i+1)^(k+1)."""
    if a < 1:
        raise ValueError("finite alternating form needs a >= 1")
    total = sum(
        Fraction((-1) ** i * binomial_shifted(a, i), (i + 1) ** (k + 1)) for i in range(a)
    )
    return math.factorial(k) * total


_BASES = {"symmetric": mordell_base, "alternating": mordell_base_alternating}


def mordell(
    key: MordellKey | tuple[int, int, int],
    cfg: PrecisionConfig = DEFAULT_CONFIG,
    cache: MordellCache | None = None,
    base: str = "symmetric",
) -> Fraction | Enclosure:
    """M(k, N, a): a ``Fraction`` when a >= 1, else an ``Enclosure``.

    ``base`` picks the N = 1 formula: "symmetric" (positive terms) or
    "alternating" (binomial sum); both are exact.
    """
    if not isinstance(key, MordellKey):
        key = MordellKey(*key)
    if cache is None:
        cache = MordellCache()
    if base not in _BASES:
        raise ValueError(f"unknown base formula {base!r}")
    return _mordell(key.k, key.N, key.a, cfg, cache.values, base)


def _mordell(k: int, N: int, a: int, cfg: PrecisionConfig, memo: dict, base: str):
    if k == 0:
        return Fraction(1, a)
    ck = (k, N, a, cfg.precision_bits if a == 0 else 0, base)
    hit = memo.get(ck)
    if hit is not None:
        return hit
    if N == 1:
        if a == 0:
            val = zeta_int(k + 1, cfg) * math.factorial(k)
        else:
            val = _BASES[base](k, a)
    else:
        step = N - 1
        val = Fraction(0)
        for i in range(k + 1):
            term = _mordell(k - i, step, a + i * step, cfg, memo, base)
            coeff = Fraction((-1) ** i * math.comb(k, i), step**i)
            val = val + term * coeff if isinstance(term, Enclosure) else val + coeff * term
    memo[ck] = val
    return val


# ---------------------------------------------------------------------------
# fixed-point table


def _floor_div(x: np.ndarray, d) -> np.ndarray:
    return x // d


def _ceil_div(x: np.ndarray, d) -> np.ndarray:
    return -((-x) // d)


@dataclass
class MordellTable:
    """Integer bounds lo[c][a] <= 2^P M(c, N+1, a) <= hi[c][a].

    Valid for 1 <= c <= k_max and 0 <= a <= (k_max - c) * N.
    """

    k_max: int
    N: int
    frac_bits: int
    lo: list = field(repr=False)
    hi: list = field(repr=False)

    def bounds(self, c: int, a: int) -> tuple[Fraction, Fraction]:
        scale = 1 << self.frac_bits
        return Fraction(int(self.lo[c][a]), scale), Fraction(int(self.hi[c][a]), scale)

    def enclosure(self, c: int, a: int, bits: int = 256) -> Enclosure:
        lo, hi = self.bounds(c, a)
        return Enclosure(lo, hi, bits)


def _objarray(values) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    out[:] = values
    return out


def mordell_table(k_max: int, N: int, cfg: PrecisionConfig = DEFAULT_CONFIG) -> MordellTable:
    """Bounds on M(c, N+1, a) for all c <= k_max, a <= (k_max - c) N.

    Each recurrence level amplifies absolute error by about (1 + 1/L)^c,
    so the working precision carries k_max log2(N+1) extra bits.
    """
    if k_max < 1 or N < 1:
        raise ValueError("mordell_table needs k_max >= 1 and N >= 1")
    K = k_max
    P = (
        cfg.precision_bits
        + math.ceil(K * math.log2(N + 1))
        + math.factorial(K).bit_length()
        + 64
    )
    one = 1 << P
    top = K * N
    idx = _objarray(list(range(top + 1)))
    idx[0] = 1  # placeholder; a = 0 handled separately

    # level 1: c!/a h_c(1..1/a) via h_c(a) = sum_{b<=a} h_{c-1}(b)/b
    h_lo = _objarray([one] * (top + 1))
    h_hi = h_lo.copy()
    inv_lo = _floor_div(h_lo, idx)
    inv_hi = _ceil_div(h_hi, idx)
    inv_lo[0] = inv_hi[0] = 0
    lo = [inv_lo.copy()]  # c = 0: 1/a, index 0 unused
    hi = [inv_hi.copy()]
    for c in range(1, K + 1):
        t_lo = _floor_div(h_lo, idx)
        t_hi = _ceil_div(h_hi, idx)
        t_lo[0] = t_hi[0] = 0
        h_lo = np.cumsum(t_lo).astype(object)
        h_hi = np.cumsum(t_hi).astype(object)
        fc = math.factorial(c)
        m_lo = _floor_div(h_lo * fc, idx)
        m_hi = _ceil_div(h_hi * fc, idx)
        z = zeta_int(c + 1, cfg.with_bits(P + 16)) * fc
        zlo, zhi = z.lo_fraction(), z.hi_fraction()
        m_lo[0] = math.floor(zlo * one)
        m_hi[0] = math.ceil(zhi * one)
        span = (K - c) * N + 1
        lo.append(m_lo[:span].copy())
        hi.append(m_hi[:span].copy())
    lo[0] = lo[0][: K * N + 1]
    hi[0] = hi[0][: K * N + 1]

    # levels 2..N+1
    for L in range(2, N + 2):
        step = L - 1
        new_lo = [lo[0]]
        new_hi = [hi[0]]
        for c in range(1, K + 1):
            span = (K - c) * N + 1
            acc_lo = np.zeros(span, dtype=object)
            acc_hi = np.zeros(span, dtype=object)
            for j in range(c + 1):
                w = math.comb(c, j) * step ** (c - j)
                start = j * step
                src_lo = lo[c - j][start : start + span]
                src_hi = hi[c - j][start : start + span]
                if j % 2 == 0:
                    acc_lo += w * src_lo
                    acc_hi += w * src_hi
                else:
                    acc_lo -= w * src_hi
                    acc_hi -= w * src_lo
            den = step**c
            new_lo.append(_floor_div(acc_lo, den))
            new_hi.append(_ceil_div(acc_hi, den))
        lo, hi = new_lo, new_hi
    return MordellTable(K, N, P, lo, hi)
