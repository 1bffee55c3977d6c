"""Verification suites: each returns a list of ``Check`` records.

A suite passes when every check's verdict is ``Verdict.HOLDS``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bounds import (
    Verdict,
    banks_martin_scan,
    fkq_lower_bound,
    fkq_upper_bound,
    irreducible_sum_bounds,
    less_than,
    prime_powers,
    qk_bound,
    universal_bound_check,
    universal_constants,
)
from .counting import composition_sum, irreducible_count, smooth_count
from .enclosure import DEFAULT_CONFIG, Enclosure, PrecisionConfig
from .exact import harmonic, validate_field_order
from .oracle import oracle_enumerate
from .sums import e_gamma, erdos_sum_irreducibles, fkq_range, mertens_coefficient, mertens_product

__all__ = [
    "BANKS_MARTIN_MINIMA",
    "Check",
    "default_degree_bound",
    "overall",
    "suite_banks_martin",
    "suite_bounds",
    "suite_lemma32",
    "suite_mertens",
    "suite_oracle",
    "suite_universal",
]

# first local minimum of k -> F(I_{k,q}) for the fields where the chain breaks
BANKS_MARTIN_MINIMA = {2: 4, 3: 6, 4: 9}


@dataclass
class Check:
    claim: str
    verdict: Verdict
    detail: str = ""

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{self.verdict.value:<9} {self.claim}{tail}"


def overall(checks: list[Check]) -> Verdict:
    if all(c.verdict is Verdict.HOLDS for c in checks):
        return Verdict.HOLDS
    if any(c.verdict is Verdict.FAILS for c in checks):
        return Verdict.FAILS
    return Verdict.UNDECIDED


def _bool(ok: bool) -> Verdict:
    return Verdict.HOLDS if ok else Verdict.FAILS


def default_degree_bound(q: int) -> int:
    """Smoothness cutoff giving at least 19 certified digits for k <= 10."""
    if q == 2:
        return 200
    if q <= 4:
        return 150
    return 110


# ---------------------------------------------------------------------------


def suite_mertens(
    q_max: int = 16, n_max: int = 40, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> list[Check]:
    """1/(e^gamma (n+1)) < prod_{deg p <= n}(1 - 1/|p|) <= 1/(e^gamma n), except (q, n) = (2, 1)."""
    eg = e_gamma(cfg)
    checks = []
    for q in prime_powers(2, q_max):
        for n in range(1, n_max + 1):
            P = mertens_product(q, n, cfg)
            upper = less_than(P, 1 / (eg * n))
            lower = less_than(1 / (eg * (n + 1)), P)
            if (q, n) == (2, 1):
                # the one exception: 1/4 sits below 1/(2 e^gamma)
                checks.append(Check("Mertens lower bound fails only at q=2, n=1",
                                    _bool(lower is Verdict.FAILS), f"product {P}"))
                checks.append(Check("Mertens upper bound q=2 n=1", upper))
                continue
            checks.append(Check(f"Mertens upper bound q={q} n={n}", upper))
            checks.append(Check(f"Mertens lower bound q={q} n={n}", lower))
    return checks


def suite_lemma32(
    n_max: int = 60, bound_n_max: int = 40, q_max: int = 9, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> list[Check]:
    """Exact cancellation and size bounds of the Mertens log-series coefficients c_j."""
    checks = []
    for n in range(1, n_max + 1):
        ok0 = mertens_coefficient(n, 0) == harmonic(n)
        zeros = all(mertens_coefficient(n, j) == 0 for j in range(1, n // 2 + 1))
        checks.append(Check(f"c_0 = H_n and c_j = 0 for 1 <= j <= n/2, n={n}", _bool(ok0 and zeros)))
    for n in range(1, bound_n_max + 1):
        half = harmonic(n) / 2
        ok = all(abs(mertens_coefficient(n, j)) <= half for j in range(1, 3 * n + 1))
        checks.append(Check(f"|c_j| <= H_n/2 for 1 <= j <= 3n, n={n}", _bool(ok)))
    for q in prime_powers(2, q_max):
        for n in range(1, bound_n_max + 1):
            logp = -mertens_product(q, n, cfg).log()
            H = harmonic(n)
            eps = Fraction(1, 2 * (q - 1) * q ** (n // 2))
            lo = less_than(Enclosure.exact((1 - eps) * H, cfg.precision_bits), logp)
            hi = less_than(logp, Enclosure.exact((1 + eps) * H, cfg.precision_bits))
            verdict = overall([Check("", lo), Check("", hi)])
            checks.append(Check(f"|log Mertens product| within (1 +- eps) H_n, q={q} n={n}", verdict))
    return checks


def suite_banks_martin(
    q: int, k_max: int, N: int | None = None, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> tuple[list[Check], object]:
    """Local minimum for q in {2, 3, 4}; strict descent above 1 otherwise."""
    fo = validate_field_order(q)
    N = N or default_degree_bound(fo.q)
    rep = banks_martin_scan(fo, k_max, N, cfg)
    checks = []
    for i, step in enumerate(rep.steps):
        k = i + 1
        verdict = Verdict.UNDECIDED if step == "undecided" else Verdict.HOLDS
        checks.append(Check(f"F(I_{k},{fo.q}) vs F(I_{k + 1},{fo.q}) decided", verdict,
                            f"'{step}'" + ("; raise N or precision bits" if step == "undecided" else "")))
    expected = BANKS_MARTIN_MINIMA.get(fo.q)
    if expected is not None:
        if k_max <= expected:
            checks.append(Check(f"local minimum at k={expected}", Verdict.UNDECIDED,
                                f"kmax must exceed {expected}"))
        else:
            first = rep.minima[0] if rep.minima else None
            v = _bool(first == expected) if first is not None or not rep.undecided else Verdict.UNDECIDED
            val = rep.results[expected - 1].value
            checks.append(Check(f"first local minimum of F(I_k,{fo.q}) at k={expected}", v,
                                f"minima {rep.minima}, value {val}"))
    else:
        checks.append(Check(f"F(I_k,{fo.q}) strictly decreasing for k <= {k_max}", rep.descending,
                            f"failures at k={rep.failures}" if rep.failures else ""))
        for k, v in enumerate(rep.above_one, 1):
            checks.append(Check(f"F(I_{k},{fo.q}) > 1", v))
    return checks, rep


def suite_bounds(
    q_max: int = 16, k_max: int = 10, N: int = 40, cfg: PrecisionConfig = DEFAULT_CONFIG
) -> list[Check]:
    """Closed-form lower and upper bounds bracket the certified values."""
    checks = []
    for q in prime_powers(2, q_max):
        lo1, hi1 = irreducible_sum_bounds(q, cfg)
        f1 = erdos_sum_irreducibles(q, N, cfg)
        checks.append(Check(f"F(I_{q}) within dilogarithm bounds",
                            _bool(lo1.lo <= f1.lo and f1.hi <= hi1.hi)))
        for res in fkq_range(q, k_max, N, cfg):
            k = res.k
            v = res.value
            lower = fkq_lower_bound(q, k, cfg)
            checks.append(Check(f"lower bound <= F(I_{k},{q})", _bool(lower.lo <= v.hi)))
            if k >= 2:
                upper = fkq_upper_bound(q, k, cfg)
                checks.append(Check(f"F(I_{k},{q}) <= upper bound", _bool(v.lo <= upper.hi)))
    for k in range(4, 13):
        r = qk_bound(k, cfg)
        checks.append(Check(f"q_k formula dominates quadratic threshold, k={k}",
                            _bool(r.threshold.hi <= r.bound.lo)))
    return checks


def suite_universal(q_max: int = 19, N: int = 200, cfg: PrecisionConfig = DEFAULT_CONFIG) -> list[Check]:
    """B(q) < e^gamma for prime powers 3 <= q <= q_max, and the three constants."""
    checks = []
    for q in prime_powers(3, q_max):
        B, v = universal_bound_check(q, N, cfg)
        checks.append(Check(f"B({q}) < e^gamma", v, f"B in [{float(B.lo):.6f}, {float(B.hi):.6f}]"))
    consts = universal_constants(cfg)
    for name, digits in (("e_gamma", "1.781072"), ("limit", "1.800153"), ("q2", "1.890536")):
        enc = consts[name]
        ok = Enclosure(Fraction(digits), Fraction(digits) + Fraction(1, 10**6)).contains(enc)
        checks.append(Check(f"constant {name} = {digits}...", _bool(ok), str(enc)[:12]))
    return checks


def suite_oracle(q: int, max_degree: int) -> list[Check]:
    """Exhaustive factorization agrees with the counting formulas."""
    table = oracle_enumerate(q, max_degree)
    D = max_degree
    checks = []
    checks.append(Check(f"oracle pi'(n) equals Gauss count, q={q}, n<={D}",
                        _bool(all(table.pi_prime(n) == irreducible_count(q, n) for n in range(1, D + 1)))))
    checks.append(Check(f"sum_k pi'_k(n) = q^n, n<={D}",
                        _bool(all(sum(table.pi_k(k, n) for k in range(n + 1)) == q**n
                                  for n in range(1, D + 1)))))
    psi = table.psi_table()
    checks.append(Check(f"oracle Psi'_k(n, m) equals smooth_count for all k, n, m <= {D}",
                        _bool(all(psi[(k, n, m)] == smooth_count(q, k, n, m)
                                  for n in range(1, D + 1) for k in range(1, n + 1)
                                  for m in range(1, D + 1)))))
    conv = {(k, n): composition_sum(q, k, n) for n in range(1, D + 1) for k in range(1, n + 1)}
    checks.append(Check("k! pi*_k(n) <= composition sum for all k, n",
                        _bool(all(factorial(k) * table.pi_star_k(k, n) <= c for (k, n), c in conv.items()))))
    checks.append(Check("composition sum <= k! pi'_k(n) for all k, n",
                        _bool(all(c <= factorial(k) * table.pi_k(k, n) for (k, n), c in conv.items()))))
    checks.append(Check("pi*_k(n) <= pi'_k(n)",
                        _bool(all(table.pi_star_k(k, n) <= table.pi_k(k, n) for (k, n) in conv))))
    return checks
