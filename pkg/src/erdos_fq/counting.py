"""Exact counts of monic polynomials over F_q.

* ``irreducible_count``: Gauss's Möbius-sum formula for the number of monic
  irreducibles of degree n.
* ``smooth_count``: number of monic degree-n polynomials with exactly k
  irreducible factors (with multiplicity), all of degree <= m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian

import numpy as np
from gmpy2 import mpz

from .exact import FieldOrder, divisors, moebius, multiset_binomial, validate_field_order

__all__ = [
    "IrreducibleCountTable",
    "SmoothCountTable",
    "composition_sum",
    "irreducible_count",
    "irreducible_count_bounds",
    "irreducible_table",
    "smooth_count",
    "smooth_count_by_partitions",
    "smooth_table",
]


@lru_cache(maxsize=8192)
def _irreducible_count(q: int, n: int) -> int:
    total = sum(moebius(n // d) * q**d for d in divisors(n))
    quotient, rem = divmod(total, n)
    if rem:
        raise ArithmeticError(f"Gauss sum for q={q}, n={n} is not divisible by n")
    return quotient


def irreducible_count(q: FieldOrder | int, n: int) -> int:
    """Number of monic irreducible polynomials of degree n over F_q."""
    fo = validate_field_order(q)
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    return _irreducible_count(fo.q, n)


def irreducible_count_bounds(q: FieldOrder | int, n: int) -> tuple[Fraction, Fraction]:
    """Rational (lower, upper) with lower <= pi'_q(n) <= upper.

    upper = q^n/n and lower = q^n/n - (q/(q-1)) q^(n/2)/n. For odd n the
    irrational q^(n/2) is replaced by q^((n+1)/2), which only loosens the
    lower bound.
    """
    fo = validate_field_order(q)
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    qq = fo.q
    upper = Fraction(qq**n, n)
    half = qq ** ((n + 1) // 2)
    lower = upper - Fraction(qq, qq - 1) * Fraction(half, n)
    return lower, upper


@dataclass
class IrreducibleCountTable:
    q: FieldOrder
    max_degree: int
    counts: dict[int, int] = field(repr=False)

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def necklace_defect(self, n: int) -> int:
        """q^n - sum_{d | n} d * pi'(d); zero for a valid table."""
        return self.q.q**n - sum(d * self.counts[d] for d in divisors(n))

    def validate(self, sample: list[int] | None = None) -> None:
        degrees = sample if sample is not None else range(1, self.max_degree + 1)
        if self.counts.get(1) != self.q.q:
            raise ValueError("table invariant failed: pi'(1) != q")
        for n in degrees:
            if n <= self.max_degree and self.necklace_defect(n) != 0:
                raise ValueError(f"table invariant failed: necklace identity at n={n}")


def irreducible_table(q: FieldOrder | int, max_degree: int) -> IrreducibleCountTable:
    fo = validate_field_order(q)
    counts = {n: _irreducible_count(fo.q, n) for n in range(1, max_degree + 1)}
    return IrreducibleCountTable(fo, max_degree, counts)


@dataclass
class SmoothCountTable:
    """Psi'_{k,q}(n, m) for 0 <= k <= k_max and all n, at one smoothness m."""

    q: FieldOrder
    m: int
    k_max: int
    rows: list = field(repr=False)  # rows[k][n] for 0 <= n <= k*m

    def get(self, k: int, n: int) -> int:
        if k < 0 or k > self.k_max or n < 0 or n > k * self.m:
            if k > self.k_max:
                raise KeyError(f"k={k} exceeds table k_max={self.k_max}")
            return 0
        return int(self.rows[k][n])

    @property
    def counts(self) -> dict[tuple[int, int], int]:
        return {
            (k, n): int(v)
            for k in range(self.k_max + 1)
            for n, v in enumerate(self.rows[k])
            if v
        }

    def row(self, k: int) -> list[int]:
        return [int(v) for v in self.rows[k]]


def smooth_table(q: FieldOrder | int, k_max: int, m: int) -> SmoothCountTable:
    """Dynamic program over irreducible degrees j = 1..m.

    After processing degree j, rows[k][n] counts polynomials with k factors
    of degree <= j. Adding degree j multiplies the generating function by
    sum_l C(l + pi'(j) - 1, l) y^l x^(j l).
    """
    fo = validate_field_order(q)
    if k_max < 0 or m < 1:
        raise ValueError("smooth_table needs k_max >= 0 and m >= 1")
    rows = [np.zeros(k * m + 1, dtype=object) for k in range(k_max + 1)]
    for row in rows:
        row[:] = mpz(0)
    rows[0][0] = mpz(1)
    for j in range(1, m + 1):
        pij = _irreducible_count(fo.q, j)
        weights = [mpz(multiset_binomial(pij, ell)) for ell in range(k_max + 1)]
        for k in range(k_max, 0, -1):
            target = rows[k]
            for ell in range(1, k + 1):
                src = rows[k - ell]
                span = (k - ell) * (j - 1) + 1
                start = j * ell
                target[start : start + span] += weights[ell] * src[:span]
    return SmoothCountTable(fo, m, k_max, rows)


@lru_cache(maxsize=64)
def _cached_smooth_table(q: int, k_max: int, m: int) -> SmoothCountTable:
    return smooth_table(q, k_max, m)


def smooth_count(q: FieldOrder | int, k: int, n: int, m: int) -> int:
    """Psi'_{k,q}(n, m); zero outside the support k <= n <= k*m."""
    fo = validate_field_order(q)
    if m < 1:
        raise ValueError("smoothness m must be >= 1")
    if k < 0 or n < 0 or n < k or n > k * m:
        return 0
    return _cached_smooth_table(fo.q, k, m).get(k, n)


def smooth_count_by_partitions(q: FieldOrder | int, k: int, n: int, m: int) -> int:
    """Direct sum over (l_1..l_m) with sum l_j = k, sum j l_j = n (small cases only)."""
    fo = validate_field_order(q)
    if k == 0:
        return 1 if n == 0 else 0
    total = 0
    for ls in cartesian(*(range(min(k, n // j) + 1) for j in range(1, m + 1))):
        if sum(ls) != k or sum(j * ell for j, ell in enumerate(ls, 1)) != n:
            continue
        term = 1
        for j, ell in enumerate(ls, 1):
            term *= multiset_binomial(_irreducible_count(fo.q, j), ell)
        total += term
    return total


def composition_sum(q: FieldOrder | int, k: int, n: int) -> int:
    """sum over j_1 + ... + j_k = n (all j_i >= 1) of prod pi'_q(j_i)."""
    fo = validate_field_order(q)
    if k == 0:
        return 1 if n == 0 else 0
    pi = [0] + [_irreducible_count(fo.q, j) for j in range(1, n + 1)]
    conv = [1] + [0] * n
    for _ in range(k):
        nxt = [0] * (n + 1)
        for a, ca in enumerate(conv):
            if ca:
                for b in range(1, n - a + 1):
                    nxt[a + b] += ca * pi[b]
        conv = nxt
    return conv[n]
