"""Rigorous interval ("enclosure") arithmetic on top of MPFR.

Every endpoint is an MPFR float produced with an explicit rounding
direction: lower endpoints round toward -inf, upper endpoints toward +inf.
MPFR rounds exp/log/sqrt/pow correctly in the requested direction, so the
transcendental operations below are as rigorous as the field operations.

Special constants (gamma, zeta at integers, the dilogarithm) are built from
truncated series with explicit remainder bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import gmpy2
from gmpy2 import mpfr, mpq, mpz

__all__ = [
    "DomainError",
    "Enclosure",
    "PrecisionConfig",
    "certified_decimal",
    "dilog",
    "enclosure_arith",
    "euler_gamma",
    "pi_enclosure",
    "zeta_int",
]

Number = Union[int, Fraction, "Enclosure"]


class DomainError(ArithmeticError):
    """Operation undefined somewhere on the operand interval."""


@dataclass(frozen=True)
class PrecisionConfig:
    precision_bits: int = 256
    series_tail_tolerance: float | None = None

    def __post_init__(self) -> None:
        if self.precision_bits < 64:
            raise ValueError(f"precision_bits must be >= 64, got {self.precision_bits}")
        if self.series_tail_tolerance is not None and not self.series_tail_tolerance > 0:
            raise ValueError("series_tail_tolerance must be positive")

    @property
    def tail_tolerance(self) -> Fraction:
        if self.series_tail_tolerance is None:
            return Fraction(1, 2 ** (self.precision_bits + 8))
        return Fraction(self.series_tail_tolerance)

    def with_bits(self, bits: int) -> "PrecisionConfig":
        return PrecisionConfig(bits, self.series_tail_tolerance)


DEFAULT_CONFIG = PrecisionConfig()


@lru_cache(maxsize=None)
def _ctx(bits: int, up: bool):
    return gmpy2.context(precision=bits, round=gmpy2.RoundUp if up else gmpy2.RoundDown)


def _down(bits: int):
    return _ctx(bits, False)


def _up(bits: int):
    return _ctx(bits, True)


def _to_mpq(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def _round(x, bits: int, up: bool) -> mpfr:
    """Round an exact int/Fraction/mpfr to `bits` in the given direction."""
    if isinstance(x, (int, mpz)):
        return mpfr(x, bits, _ctx(bits, up))
    if isinstance(x, mpfr):
        return mpfr(x, bits, _ctx(bits, up))
    return mpfr(_to_mpq(x), bits, _ctx(bits, up))


class Enclosure:
    """A closed interval [lo, hi] guaranteed to contain some real number."""

    __slots__ = ("lo", "hi", "precision_bits")

    def __init__(self, lo, hi, precision_bits: int = 256):
        lo = _round(lo, precision_bits, False)
        hi = _round(hi, precision_bits, True)
        if not (gmpy2.is_finite(lo) and gmpy2.is_finite(hi)):
            raise DomainError("enclosure endpoints must be finite")
        if lo > hi:
            raise ValueError(f"empty enclosure: lo={lo} > hi={hi}")
        self.lo = lo
        self.hi = hi
        self.precision_bits = precision_bits

    # construction -------------------------------------------------------

    @classmethod
    def exact(cls, value, bits: int = 256) -> "Enclosure":
        """Tightest enclosure of an exact int, Fraction or decimal string."""
        if isinstance(value, Enclosure):
            return value
        if isinstance(value, str):
            value = Fraction(value)
        return cls(value, value, bits)

    @classmethod
    def around(cls, center, radius, bits: int = 256) -> "Enclosure":
        center, radius = Fraction(center), Fraction(radius)
        return cls(center - radius, center + radius, bits)

    @classmethod
    def hull(cls, *encs: "Enclosure") -> "Enclosure":
        bits = max(e.precision_bits for e in encs)
        return cls(min(e.lo for e in encs), max(e.hi for e in encs), bits)

    def _coerce(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return other
        if isinstance(other, (int, Fraction, mpz, mpq)):
            return Enclosure.exact(Fraction(int(other)) if isinstance(other, mpz) else other,
                                   self.precision_bits)
        return NotImplemented

    # inspection ---------------------------------------------------------

    @property
    def width(self) -> mpfr:
        return _up(self.precision_bits).sub(self.hi, self.lo)

    @property
    def mid(self) -> mpfr:
        c = _down(self.precision_bits + 1)
        return c.div(c.add(self.lo, self.hi), 2)

    def lo_fraction(self) -> Fraction:
        n, d = self.lo.as_integer_ratio()
        return Fraction(int(n), int(d))

    def hi_fraction(self) -> Fraction:
        n, d = self.hi.as_integer_ratio()
        return Fraction(int(n), int(d))

    def contains(self, x) -> bool:
        if isinstance(x, Enclosure):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, float):
            x = Fraction(x)
        if isinstance(x, str):
            x = Fraction(x)
        x = _to_mpq(x)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def overlaps(self, other: "Enclosure") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def compare(self, other) -> int | None:
        """-1 if certainly below `other`, 1 if certainly above, None if undecided."""
        other = self._coerce(other)
        if self.hi < other.lo:
            return -1
        if self.lo > other.hi:
            return 1
        return None

    def is_positive(self) -> bool:
        return self.lo > 0

    def __repr__(self) -> str:
        return f"Enclosure([{self.lo:.25g}, {self.hi:.25g}], bits={self.precision_bits})"

    def __str__(self) -> str:
        return certified_decimal(self) or repr(self)

    # arithmetic ---------------------------------------------------------

    def _bits(self, other: "Enclosure") -> int:
        return max(self.precision_bits, other.precision_bits)

    def __neg__(self) -> "Enclosure":
        b = self.precision_bits
        return Enclosure(_down(b).minus(self.hi), _up(b).minus(self.lo), b)

    def __add__(self, other) -> "Enclosure":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b = self._bits(other)
        return Enclosure(_down(b).add(self.lo, other.lo), _up(b).add(self.hi, other.hi), b)

    __radd__ = __add__

    def __sub__(self, other) -> "Enclosure":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b = self._bits(other)
        return Enclosure(_down(b).sub(self.lo, other.hi), _up(b).sub(self.hi, other.lo), b)

    def __rsub__(self, other) -> "Enclosure":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Enclosure":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b = self._bits(other)
        d, u = _down(b), _up(b)
        pairs = [(self.lo, other.lo), (self.lo, other.hi), (self.hi, other.lo), (self.hi, other.hi)]
        return Enclosure(min(d.mul(x, y) for x, y in pairs), max(u.mul(x, y) for x, y in pairs), b)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Enclosure":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.lo <= 0 <= other.hi:
            raise DomainError("division by an enclosure containing zero")
        b = self._bits(other)
        d, u = _down(b), _up(b)
        pairs = [(self.lo, other.lo), (self.lo, other.hi), (self.hi, other.lo), (self.hi, other.hi)]
        return Enclosure(min(d.div(x, y) for x, y in pairs), max(u.div(x, y) for x, y in pairs), b)

    def __rtruediv__(self, other) -> "Enclosure":
        return self._coerce(other) / self

    def __pow__(self, n) -> "Enclosure":
        return self.pow(n)

    def pow(self, n) -> "Enclosure":
        """Power with an int, Fraction or Enclosure exponent (base > 0 unless n is an int)."""
        b = self.precision_bits
        if isinstance(n, int):
            if n < 0:
                return Enclosure.exact(1, b) / self.pow(-n)
            if n == 0:
                return Enclosure.exact(1, b)
            d, u = _down(b), _up(b)
            if self.lo >= 0:
                return Enclosure(d.pow(self.lo, n), u.pow(self.hi, n), b)
            if self.hi <= 0:
                r = (-self).pow(n)
                return r if n % 2 == 0 else -r
            if n % 2:
                return Enclosure(d.pow(self.lo, n), u.pow(self.hi, n), b)
            m = max(u.minus(self.lo), self.hi)
            return Enclosure(0, u.pow(m, n), b)
        if self.lo <= 0:
            raise DomainError("non-integer power of an enclosure reaching zero or below")
        if isinstance(n, Fraction) and (n.denominator & (n.denominator - 1)) == 0:
            # dyadic exponent is exact in binary; MPFR pow is monotone in the base
            e = mpfr(_to_mpq(n), b + n.numerator.bit_length() + 8)
            d, u = _down(b), _up(b)
            if e >= 0:
                return Enclosure(d.pow(self.lo, e), u.pow(self.hi, e), b)
            return Enclosure(d.pow(self.hi, e), u.pow(self.lo, e), b)
        return (self.log() * self._coerce(n)).exp()

    def sqrt(self) -> "Enclosure":
        if self.lo < 0:
            raise DomainError("sqrt of an enclosure reaching below zero")
        b = self.precision_bits
        return Enclosure(_down(b).sqrt(self.lo), _up(b).sqrt(self.hi), b)

    def exp(self) -> "Enclosure":
        b = self.precision_bits
        return Enclosure(_down(b).exp(self.lo), _up(b).exp(self.hi), b)

    def log(self) -> "Enclosure":
        if self.lo <= 0:
            raise DomainError("log of an enclosure reaching zero or below")
        b = self.precision_bits
        return Enclosure(_down(b).log(self.lo), _up(b).log(self.hi), b)

    def log1p(self) -> "Enclosure":
        """log(1 + x); keeps full relative accuracy for tiny x."""
        if self.lo <= -1:
            raise DomainError("log1p of an enclosure reaching -1 or below")
        b = self.precision_bits
        return Enclosure(_down(b).log1p(self.lo), _up(b).log1p(self.hi), b)

    def with_bits(self, bits: int) -> "Enclosure":
        return Enclosure(self.lo, self.hi, bits)


def enclosure_arith(op: str, *args) -> Enclosure:
    """Apply one of add, sub, mul, div, exp, log, pow, neg to enclosures."""
    unary = {"exp": Enclosure.exp, "log": Enclosure.log, "neg": Enclosure.__neg__}
    binary = {
        "add": Enclosure.__add__,
        "sub": Enclosure.__sub__,
        "mul": Enclosure.__mul__,
        "div": Enclosure.__truediv__,
        "pow": Enclosure.pow,
    }
    if op in unary:
        if len(args) != 1:
            raise TypeError(f"{op} takes one operand")
        return unary[op](args[0])
    if op in binary:
        if len(args) != 2:
            raise TypeError(f"{op} takes two operands")
        return binary[op](*args)
    raise ValueError(f"unknown enclosure operation {op!r}")


# --------------------------------------------------------------------------
# digits


def _floor_scaled(x: Fraction, digits: int) -> int:
    return (x.numerator * 10**digits) // x.denominator


def certified_decimal(enc: Enclosure, digits: int | None = None, max_digits: int = 200) -> str | None:
    """Decimal truncation of the enclosed value, using only digits shared by lo and hi.

    With ``digits`` given, return exactly that many decimals or None when the
    enclosure is too wide to certify them. Otherwise return the longest
    certified prefix (None if not even the integer part is certain).
    """
    if enc.lo < 0 <= enc.hi:
        return None
    neg = enc.hi < 0
    lo, hi = enc.lo_fraction(), enc.hi_fraction()
    if neg:
        lo, hi = -hi, -lo

    def agree(d: int) -> bool:
        return _floor_scaled(lo, d) == _floor_scaled(hi, d)

    if digits is None:
        if not agree(0):
            return None
        d = 0
        while d < max_digits and agree(d + 1):
            d += 1
    else:
        if not agree(digits):
            return None
        d = digits
    v = _floor_scaled(lo, d)
    s = str(v).rjust(d + 1, "0")
    out = s if d == 0 else f"{s[:-d]}.{s[-d:]}"
    return "-" + out if neg else out


def certified_digit_count(enc: Enclosure, max_digits: int = 200) -> int:
    """Number of certified decimals after the point (-1 if none)."""
    s = certified_decimal(enc, max_digits=max_digits)
    if s is None:
        return -1
    return len(s.split(".")[1]) if "." in s else 0


# --------------------------------------------------------------------------
# constants

# Euler-Mascheroni constant truncated to 150 decimals.
_GAMMA_DIGITS = (
    "0.57721566490153286060651209008240243104215933593992"
    "35988057672348848677267776646709369470632917467495"
    "14631447249807082480960504014486542836224173997644"
)
_GAMMA_DECIMALS = len(_GAMMA_DIGITS) - 2


def euler_gamma(cfg: PrecisionConfig = DEFAULT_CONFIG) -> Enclosure:
    """Enclosure of Euler's constant from the embedded literal."""
    lo = Fraction(_GAMMA_DIGITS)
    return Enclosure(lo, lo + Fraction(1, 10**_GAMMA_DECIMALS), cfg.precision_bits)


def pi_enclosure(cfg: PrecisionConfig = DEFAULT_CONFIG) -> Enclosure:
    b = cfg.precision_bits
    return Enclosure(_down(b).const_pi(), _up(b).const_pi(), b)


@lru_cache(maxsize=None)
def _bernoulli_even(m: int) -> tuple[Fraction, ...]:
    """B_0, B_2, ..., B_{2m} (exact), via the Akiyama-Tanigawa recurrence."""
    n_max = 2 * m
    out = []
    a = [Fraction(0)] * (n_max + 1)
    for n in range(n_max + 1):
        a[n] = Fraction(1, n + 1)
        for j in range(n, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if n % 2 == 0:
            out.append(a[0])
    return tuple(out)


def _rising(s: int, r: int) -> int:
    out = 1
    for t in range(r):
        out *= s + t
    return out


@lru_cache(maxsize=256)
def _zeta_cached(s: int, bits: int) -> Enclosure:
    # Direct sum over n < T, Euler-Maclaurin for the tail starting at T.
    # Remainder after m correction terms: 2 zeta(2m) (s)_{2m-1} / ((2 pi)^{2m} T^{s+2m-1}),
    # and zeta(2m) <= zeta(2) < 2.
    wb = bits + 32
    target = Fraction(1, 2 ** (bits + 16))
    T = max(8, bits // 4)
    d, u = _down(wb), _up(wb)
    lo = mpfr(0, wb)
    hi = mpfr(0, wb)
    for n in range(1, T):
        lo = d.add(lo, d.div(1, u.pow(mpfr(n, wb), s)))
        hi = u.add(hi, u.div(1, d.pow(mpfr(n, wb), s)))
    head = Enclosure(lo, hi, wb)
    tail = Fraction(1, (s - 1) * T ** (s - 1)) + Fraction(1, 2 * T**s)
    two_pi_lo = Fraction(6283185307, 10**9)  # < 2 pi
    m = 0
    while True:
        m += 1
        rem = Fraction(4 * _rising(s, 2 * m - 1)) / (two_pi_lo ** (2 * m) * T ** (s + 2 * m - 1))
        if rem < target:
            break
        if m > 4 * bits:
            raise RuntimeError("Euler-Maclaurin remainder did not converge")
    bern = _bernoulli_even(m)
    for j in range(1, m + 1):
        tail += bern[j] / math.factorial(2 * j) * _rising(s, 2 * j - 1) / Fraction(T ** (s + 2 * j - 1))
    total = head + Enclosure(tail - rem, tail + rem, wb)
    return total.with_bits(bits)


def zeta_int(s: int, cfg: PrecisionConfig = DEFAULT_CONFIG) -> Enclosure:
    """Enclosure of the Riemann zeta function at an integer s >= 2."""
    if not isinstance(s, int) or s < 2:
        raise ValueError(f"zeta_int needs an integer s >= 2, got {s!r}")
    return _zeta_cached(s, cfg.precision_bits)


def _dilog_point(x: mpfr, bits: int, up: bool, tol: Fraction) -> mpfr:
    ctx = _ctx(bits, up)
    if x == 0:
        return mpfr(0, bits)
    total = mpfr(0, bits)
    power = mpfr(1, bits)
    # geometric tail x^{T+1} / ((T+1)^2 (1-x)) computed in exact rationals
    xq = Fraction(*x.as_integer_ratio())
    one_minus = 1 - xq
    k = 0
    xp = Fraction(1)
    while True:
        k += 1
        power = ctx.mul(power, x)
        total = ctx.add(total, ctx.div(power, k * k))
        xp *= xq
        if xp.denominator.bit_length() > 4 * bits:
            xp = Fraction(int(xp * 2 ** (2 * bits)) + 1, 2 ** (2 * bits))
        tail = xp * xq / ((k + 1) ** 2 * one_minus)
        if tail < tol:
            break
    if up:
        total = ctx.add(total, _round(tail, bits, True))
    return total


def dilog(x, cfg: PrecisionConfig = DEFAULT_CONFIG) -> Enclosure:
    """Enclosure of Li2(x) = sum x^k / k^2 for an enclosure 0 <= x < 1."""
    if not isinstance(x, Enclosure):
        x = Enclosure.exact(x, cfg.precision_bits)
    if x.lo < 0:
        raise DomainError("dilog is implemented for 0 <= x < 1 only")
    if x.hi >= 1:
        raise DomainError("dilog argument must be < 1")
    b = cfg.precision_bits
    tol = cfg.tail_tolerance
    lo = _dilog_point(mpfr(x.lo, b + 16), b + 16, False, tol)
    hi = _dilog_point(mpfr(x.hi, b + 16), b + 16, True, tol)
    return Enclosure(lo, hi, b)
