"""Brute-force factorization of every monic polynomial of degree <= D over F_q.

Independent ground truth for the counting formulas: it never uses Gauss's
formula or the smooth-count recurrence. Polynomials are factored with a
sieve of Eratosthenes over F_q[x]: each irreducible, taken in order of
increasing degree, marks all of its monic multiples.

Encoding: a monic polynomial of degree n with lower coefficients
c_0..c_{n-1} (field elements 0..q-1) gets id ``offset[n] + sum c_i q^i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

from .exact import FieldOrder, validate_field_order

__all__ = [
    "OracleBudgetError",
    "OracleFactorTable",
    "finite_field_tables",
    "oracle_enumerate",
]

DEFAULT_BUDGET = 4_000_000


class OracleBudgetError(MemoryError):
    """The requested enumeration exceeds the configured polynomial budget."""


def _poly_mul_prime(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return [c % p for c in out]


def _find_modulus(p: int, e: int) -> list[int]:
    """Smallest monic irreducible of degree e over F_p (coefficients low to high)."""
    for lower in cartesian(range(p), repeat=e):
        cand = list(lower) + [1]
        if cand[0] == 0:
            continue
        # irreducible iff no monic divisor of degree <= e/2
        if not any(_divides(list(d) + [1], cand, p) for dd in range(1, e // 2 + 1)
                   for d in cartesian(range(p), repeat=dd)):
            return cand
    raise ArithmeticError(f"no irreducible of degree {e} over F_{p}")


def _divides(d, f, p) -> bool:
    r = list(f)
    inv_lead = pow(d[-1], -1, p)
    while len(r) >= len(d):
        c = r[-1] * inv_lead % p
        shift = len(r) - len(d)
        for i, di in enumerate(d):
            r[shift + i] = (r[shift + i] - c * di) % p
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return not r


def finite_field_tables(q: FieldOrder | int) -> tuple[list[list[int]], list[list[int]]]:
    """(add, mul) tables of F_q, elements 0..q-1 as base-p digit vectors."""
    fo = validate_field_order(q)
    p, e, qq = fo.p, fo.e, fo.q
    if e == 1:
        add = [[(a + b) % p for b in range(p)] for a in range(p)]
        mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        return add, mul
    modulus = _find_modulus(p, e)

    def digits(x):
        return [(x // p**i) % p for i in range(e)]

    def undigits(v):
        return sum(c * p**i for i, c in enumerate(v))

    def reduce(v):
        v = list(v)
        for top in range(len(v) - 1, e - 1, -1):
            c = v[top]
            if c:
                for i in range(e + 1):
                    v[top - e + i] = (v[top - e + i] - c * modulus[i]) % p
        return v[:e]

    add = [[undigits([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(qq)]
           for a in range(qq)]
    mul = [[undigits(reduce(_poly_mul_prime(digits(a), digits(b), p))) for b in range(qq)]
           for a in range(qq)]
    return add, mul


@dataclass
class OracleFactorTable:
    """Factor-degree multiset of every monic polynomial of degree <= max_degree."""

    q: FieldOrder
    max_degree: int
    degrees: list[int] = field(repr=False)  # degree of polynomial id
    records: list[tuple[int, ...]] = field(repr=False)  # sorted factor degrees, with multiplicity
    squarefree: list[bool] = field(repr=False)
    irreducible_ids: list[int] = field(repr=False)

    def __post_init__(self) -> None:
        self._omega = Counter()
        self._star = Counter()
        for deg, rec, sf in zip(self.degrees, self.records, self.squarefree):
            if deg == 0:
                continue
            self._omega[(len(rec), deg)] += 1
            if sf:
                self._star[(len(rec), deg)] += 1

    def pi_prime(self, n: int) -> int:
        """Number of monic irreducibles of degree n."""
        return self._omega[(1, n)]

    def pi_k(self, k: int, n: int) -> int:
        """Monic degree-n polynomials with exactly k irreducible factors."""
        return self._omega[(k, n)]

    def pi_star_k(self, k: int, n: int) -> int:
        """Squarefree monic degree-n polynomials with exactly k irreducible factors."""
        return self._star[(k, n)]

    def psi(self, k: int, n: int, m: int) -> int:
        """Monic degree-n polynomials with k factors, all of degree <= m."""
        return sum(
            1
            for deg, rec in zip(self.degrees, self.records)
            if deg == n and len(rec) == k and (not rec or rec[-1] <= m)
        )

    def psi_table(self, m_max: int | None = None) -> Counter:
        """Counter keyed (k, n, m) for every m <= m_max, built in one pass."""
        m_max = self.max_degree if m_max is None else m_max
        out: Counter = Counter()
        for deg, rec in zip(self.degrees, self.records):
            top = rec[-1] if rec else 0
            for m in range(max(top, 1), m_max + 1):
                out[(len(rec), deg, m)] += 1
        return out

    def erdos_partial_sum(self, k: int, m: int | None = None):
        """sum of 1/(n q^n) over polynomials with k factors (all of degree <= m)."""
        qq = self.q.q
        total = Fraction(0)
        counts: Counter = Counter()
        for deg, rec in zip(self.degrees, self.records):
            if deg and len(rec) == k and (m is None or rec[-1] <= m):
                counts[deg] += 1
        for n, c in counts.items():
            total += Fraction(c, n * qq**n)
        return total


def oracle_enumerate(
    q: FieldOrder | int, max_degree: int, budget: int = DEFAULT_BUDGET
) -> OracleFactorTable:
    """Factor every monic polynomial over F_q of degree <= max_degree.

    Raises ``OracleBudgetError`` if more than ``budget`` polynomials would
    be stored.
    """
    fo = validate_field_order(q)
    qq, D = fo.q, max_degree
    if qq > 9:
        raise ValueError("the oracle supports q <= 9")
    if not 1 <= D <= 15:
        raise ValueError("the oracle supports 1 <= max_degree <= 15")
    total = sum(qq**n for n in range(D + 1))
    if total > budget:
        raise OracleBudgetError(
            f"q={qq}, D={D} needs {total} polynomials, budget is {budget}"
        )
    add, mul = finite_field_tables(fo)
    offset = [0] * (D + 2)
    for n in range(D + 1):
        offset[n + 1] = offset[n] + qq**n

    def coeffs(pid: int, deg: int) -> list[int]:
        code = pid - offset[deg]
        out = []
        for _ in range(deg):
            code, r = divmod(code, qq)
            out.append(r)
        out.append(1)
        return out

    def encode(c: list[int]) -> int:
        deg = len(c) - 1
        code = 0
        for x in reversed(c[:-1]):
            code = code * qq + x
        return offset[deg] + code

    def multiply(f: list[int], g: list[int]) -> list[int]:
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                row = mul[a]
                for j, b in enumerate(g):
                    if b:
                        out[i + j] = add[out[i + j]][row[b]]
        return out

    degrees = [0] * total
    for n in range(D + 1):
        for pid in range(offset[n], offset[n + 1]):
            degrees[pid] = n
    small = [-1] * total  # id of a smallest-degree irreducible factor
    cofactor = [0] * total
    irreducibles: list[int] = []
    polys_by_degree = {
        n: [coeffs(pid, n) for pid in range(offset[n], offset[n + 1])] for n in range(D + 1)
    }
    for d in range(1, D + 1):
        new = [pid for pid in range(offset[d], offset[d + 1]) if small[pid] < 0]
        for pid in new:
            small[pid] = pid
            cofactor[pid] = 0  # the constant polynomial 1
        irreducibles.extend(new)
        for pid in new:
            pc = polys_by_degree[d][pid - offset[d]]
            for e in range(1, D - d + 1):
                base = offset[e]
                for idx, gc in enumerate(polys_by_degree[e]):
                    fid = encode(multiply(pc, gc))
                    if small[fid] < 0:
                        small[fid] = pid
                        cofactor[fid] = base + idx

    records: list[tuple[int, ...]] = [()] * total
    squarefree = [True] * total
    for pid in range(1, total):  # increasing degree, so cofactors come first
        pdeg = degrees[small[pid]]
        g = cofactor[pid]
        records[pid] = tuple(sorted((pdeg,) + records[g]))
        squarefree[pid] = squarefree[g] and (g == 0 or small[g] != small[pid])
    return OracleFactorTable(fo, D, degrees, records, squarefree, irreducibles)
