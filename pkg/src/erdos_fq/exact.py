"""Exact integer and rational primitives.

Everything here works on arbitrary-size Python integers and
``fractions.Fraction`` (always kept in lowest terms).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import gmpy2

Rational = Fraction

__all__ = [
    "FieldOrder",
    "NotAPrimePowerError",
    "Rational",
    "binomial_shifted",
    "divisors",
    "factorize",
    "harmonic",
    "is_prime",
    "moebius",
    "multiset_binomial",
    "validate_field_order",
]


class NotAPrimePowerError(ValueError):
    """Raised when a candidate field order has two distinct prime factors."""


def _require_positive(name: str, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


# Deterministic Miller-Rabin witnesses, valid for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization ``((p, e), ...)`` for desk-scale n."""
    _require_positive("n", n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def moebius(m: int) -> int:
    """Möbius function: 0 unless m is squarefree, else (-1)**(number of primes)."""
    _require_positive("m", m)
    fac = factorize(m)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of n."""
    _require_positive("n", n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def binomial_shifted(a: int, i: int) -> int:
    """Return C(a-1, i), with the generalized value C(-1, i) = (-1)**i at a = 0.

    This is the binomial appearing in Mordell's closed form for
    sum 1/(n_1...n_k (n_1+...+n_k+a)).
    """
    if a < 0 or i < 0:
        raise ValueError(f"binomial_shifted needs a >= 0 and i >= 0, got a={a}, i={i}")
    if a == 0:
        return -1 if i % 2 else 1
    return comb(a - 1, i)


def multiset_binomial(count: int, ell: int) -> int:
    """C(ell + count - 1, ell): ways to choose ell items from count kinds with repetition.

    Computed as a falling-factorial product so huge ``count`` is fine.
    """
    if ell < 0 or count < 0:
        raise ValueError("multiset_binomial needs non-negative arguments")
    if ell == 0:
        return 1
    num = gmpy2.mpz(1)
    for t in range(ell):
        num *= count + t
    return int(num // gmpy2.fac(ell))


@lru_cache(maxsize=4096)
def harmonic(n: int) -> Fraction:
    """Exact harmonic number H_n = 1 + 1/2 + ... + 1/n."""
    _require_positive("n", n)
    num, den = gmpy2.mpz(0), gmpy2.mpz(1)
    for d in range(1, n + 1):
        num = num * d + den
        den *= d
    return Fraction(int(num), int(den))


@dataclass(frozen=True)
class FieldOrder:
    """A prime power q = p**e, the size of a finite field."""

    q: int
    p: int
    e: int

    def __post_init__(self) -> None:
        if self.e < 1 or not is_prime(self.p) or self.p**self.e != self.q:
            raise NotAPrimePowerError(f"{self.q} is not {self.p}^{self.e} with {self.p} prime")

    def __int__(self) -> int:
        return self.q

    def __str__(self) -> str:
        return str(self.q)


def validate_field_order(q: int | FieldOrder) -> FieldOrder:
    """Return ``FieldOrder(q, p, e)`` or raise if q is not a prime power."""
    if isinstance(q, FieldOrder):
        return q
    if not isinstance(q, int) or isinstance(q, bool):
        raise TypeError(f"q must be an int, got {type(q).__name__}")
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    for e in range(q.bit_length(), 0, -1):
        root, exact = gmpy2.iroot(q, e)
        if exact and is_prime(int(root)):
            return FieldOrder(q, int(root), e)
    raise NotAPrimePowerError(f"{q} is not a prime power")
