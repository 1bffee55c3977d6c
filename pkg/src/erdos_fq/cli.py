"""Command-line interface: ``erdos-fq {compute,table,verify,cache}``.

Exit codes: 0 success (or every check holds), 1 a claim failed,
2 undecided at the requested precision, 3 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import cache as cache_mod
from .bounds import Verdict
from .enclosure import Enclosure, PrecisionConfig, certified_decimal
from .exact import validate_field_order
from .oracle import OracleBudgetError
from .sums import TABLES, InsufficientPrecisionError, SumResult, fkq_range
from .verify import (
    Check,
    default_degree_bound,
    overall,
    suite_banks_martin,
    suite_bounds,
    suite_lemma32,
    suite_mertens,
    suite_oracle,
    suite_universal,
)

EXIT_OK, EXIT_FAILED, EXIT_UNDECIDED, EXIT_USAGE = 0, 1, 2, 3
BOUND_DIGITS = 40

log = logging.getLogger("erdos_fq")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 by default; 2 means "undecided" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# formatting ----------------------------------------------------------------


def decimal_bound(x: Fraction, digits: int = BOUND_DIGITS, up: bool = False) -> str:
    """x rounded to ``digits`` decimals, toward +inf if ``up`` else toward -inf."""
    scaled = x * 10**digits
    n = -((-scaled.numerator) // scaled.denominator) if up else scaled.numerator // scaled.denominator
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def sci_upper(x: Enclosure, sig: int = 6) -> str:
    """Upper endpoint in scientific notation, rounded up."""
    v = x.hi_fraction()
    if v <= 0:
        return "0"
    exp = len(str(v.numerator)) - len(str(v.denominator))
    while v / Fraction(10) ** exp >= 10:
        exp += 1
    while v / Fraction(10) ** exp < 1:
        exp -= 1
    mant = v / Fraction(10) ** exp * 10 ** (sig - 1)
    m = -((-mant.numerator) // mant.denominator)
    if m >= 10**sig:
        m //= 10
        exp += 1
    ms = str(m)
    return f"{ms[0]}.{ms[1:]}e{exp:+d}"


def cell_record(res: SumResult, digits: int | None) -> dict:
    """Table cell; short of ``digits`` it keeps the certified prefix, "undecided" if empty."""
    shown = res.certified_digits() if digits is None else min(digits, res.certified_digits())
    value = certified_decimal(res.value, shown) if shown > 0 else None
    return {
        "k": res.k,
        "q": res.q.q,
        "N": res.N,
        "value": value or "undecided",
        "digits_short": digits is not None and shown < digits,
        "lo": decimal_bound(res.value.lo_fraction()),
        "hi": decimal_bound(res.value.hi_fraction(), up=True),
        "defect_lo": sci_upper(res.lower_defect),
        "defect_hi": sci_upper(res.upper_defect),
        "certified_digits": res.certified_digits(),
    }


# helpers --------------------------------------------------------------------


def _field(q: int) -> int:
    try:
        return validate_field_order(q).q
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def _cfg(bits: int) -> PrecisionConfig:
    try:
        return PrecisionConfig(bits)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _seed_tables(args, q: int, k_max: int, N: int) -> None:
    """Load the smooth table from the cache directory when one is configured."""
    if args.cache_dir is None and cache_mod.CACHE_ENV not in os.environ:
        return
    directory = cache_mod.cache_dir(args.cache_dir)
    table = cache_mod.load_or_build_smooth(q, k_max, N, directory)
    TABLES.smooth[(q, N)] = table


def _compute_cells(q: int, k_max: int, N: int, bits: int, k_min: int = 1) -> list[SumResult]:
    return fkq_range(q, k_max, N, PrecisionConfig(bits), k_min=k_min)


# commands -------------------------------------------------------------------


def cmd_compute(args) -> int:
    q = _field(args.q)
    if args.k < 1:
        raise UsageError("k must be >= 1")
    N = args.degree_bound or default_degree_bound(q)
    _seed_tables(args, q, args.k, N)
    res = fkq_range(q, args.k, N, _cfg(args.bits), k_min=args.k)[0]
    try:
        text = res.decimal(args.digits)
    except InsufficientPrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    if args.json:
        rec = cell_record(res, args.digits)
        rec["value"] = text
        del rec["digits_short"]
        rec["bits"] = args.bits
        print(json.dumps(rec, indent=1))
    else:
        print(text)
    return EXIT_OK


def cmd_table(args) -> int:
    qs = sorted({_field(int(x)) for x in args.q.split(",")})
    cfg = _cfg(args.bits)
    jobs = []
    for q in qs:
        N = args.degree_bound or default_degree_bound(q)
        jobs.append((q, args.kmax, N, cfg.precision_bits))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_compute_cells, *zip(*jobs)))
    else:
        results = []
        for q, K, N, bits in jobs:
            _seed_tables(args, q, K, N)
            results.append(_compute_cells(q, K, N, bits))
    cells = sorted((r for rs in results for r in rs), key=lambda r: (r.k, r.q.q))
    records = [cell_record(r, args.digits) for r in cells]
    short = any(r.pop("digits_short") for r in records)
    if args.format == "json":
        print(json.dumps(records, indent=1))
    else:
        buf = io.StringIO()
        fields = ["k", "q", "value", "lo", "hi", "defect_lo", "defect_hi"]
        w = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(records)
        sys.stdout.write(buf.getvalue())
    return EXIT_UNDECIDED if short else EXIT_OK


def _report(checks: list[Check], verbose: bool) -> int:
    for c in checks:
        if verbose or c.verdict is not Verdict.HOLDS:
            print(c.line())
    verdict = overall(checks)
    n_hold = sum(c.verdict is Verdict.HOLDS for c in checks)
    print(f"{verdict.value}: {n_hold}/{len(checks)} checks hold")
    return {Verdict.HOLDS: EXIT_OK, Verdict.FAILS: EXIT_FAILED}.get(verdict, EXIT_UNDECIDED)


def cmd_verify(args) -> int:
    cfg = _cfg(args.bits)
    suite = args.suite
    if suite == "mertens":
        checks = suite_mertens(args.qmax or 16, args.nmax or 40, cfg)
    elif suite == "lemma32":
        checks = suite_lemma32(args.nmax or 60, cfg=cfg)
    elif suite == "universal":
        checks = suite_universal(args.qmax or 19, cfg=cfg)
    elif suite == "bounds":
        checks = suite_bounds(args.qmax or 16, args.kmax or 10, args.degree_bound or 40, cfg)
    elif suite == "oracle":
        q = _field(args.q or 2)
        try:
            checks = suite_oracle(q, args.maxdeg or 12)
        except (ValueError, OracleBudgetError) as exc:
            raise UsageError(str(exc)) from exc
    else:  # banks-martin
        q = _field(args.q or 2)
        checks, rep = suite_banks_martin(q, args.kmax or 10, args.degree_bound, cfg)
        for k, v in enumerate(rep.values, 1):
            print(f"k={k:<3} {v}")
        if rep.minima:
            print(f"local minima at k = {', '.join(map(str, rep.minima))}")
    return _report(checks, args.verbose)


def cmd_cache(args) -> int:
    directory = cache_mod.cache_dir(args.cache_dir)
    if args.action == "clear":
        removed = cache_mod.clear_cache(directory, args.kind, args.q)
        print(f"removed {len(removed)} file(s) from {directory}")
        return EXIT_OK
    if args.action == "inspect":
        paths = cache_mod.list_cache(directory)
        if args.kind:
            paths = [p for p in paths if p.name.startswith(args.kind + "-")]
        if args.q:
            paths = [p for p in paths if f"-q{args.q}-" in p.name]
        status = EXIT_OK
        for p in paths:
            try:
                if p.name.startswith("irreducible-"):
                    t = cache_mod.load_irreducible(p)
                    spot = min(12, t.max_degree)
                    ok = t.necklace_defect(spot) == 0
                    print(f"{p.name}: q={t.q} N={t.max_degree} entries={len(t.counts)} "
                          f"necklace n={spot} {'ok' if ok else 'FAILED'}")
                else:
                    t = cache_mod.load_smooth(p)
                    print(f"{p.name}: q={t.q} k_max={t.k_max} m={t.m} invariants ok")
            except cache_mod.CacheCorruptError as exc:
                print(f"{p.name}: corrupt ({exc})")
                status = EXIT_FAILED
        if not paths:
            print(f"no cache files in {directory}")
        return status
    # build
    if args.kind is None or args.q is None:
        raise UsageError("cache build needs a kind and --q")
    q = _field(args.q)
    N = args.degree_bound or default_degree_bound(q)
    if args.kind == "irreducible":
        t = cache_mod.load_or_build_irreducible(q, N, directory)
        path = cache_mod.cache_path(directory, "irreducible", q, N=N)
        print(f"{path}: {len(t.counts)} entries")
    else:
        K = args.kmax or 10
        cache_mod.load_or_build_smooth(q, K, N, directory)
        print(cache_mod.cache_path(directory, "smooth", q, K=K, m=N))
    return EXIT_OK


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="erdos-fq", description="Certified Erdős sums over F_q[x].")
    p.add_argument("--cache-dir", default=None,
                   help=f"count-table cache directory (default: ${cache_mod.CACHE_ENV} or ~/.cache/erdos_fq)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="certified digits of F(I_{k,q})")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--degree-bound", "-N", type=int, default=None)
    c.add_argument("--bits", type=int, default=256)
    c.add_argument("--digits", type=int, default=None)
    c.add_argument("--json", action="store_true", help="print a JSON record with lo/hi and defects")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="grid of F(I_{k,q}) values")
    t.add_argument("--q", default="2,3,4,5,7", help="comma-separated field orders")
    t.add_argument("--kmax", type=int, default=10)
    t.add_argument("--degree-bound", "-N", type=int, default=None)
    t.add_argument("--bits", type=int, default=256)
    t.add_argument("--digits", type=int, default=19)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["mertens", "lemma32", "banks-martin", "bounds", "universal", "oracle"])
    v.add_argument("--q", type=int, default=None)
    v.add_argument("--qmax", type=int, default=None)
    v.add_argument("--kmax", type=int, default=None)
    v.add_argument("--nmax", type=int, default=None)
    v.add_argument("--maxdeg", type=int, default=None)
    v.add_argument("--degree-bound", "-N", type=int, default=None)
    v.add_argument("--bits", type=int, default=256)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("cache", help="build, inspect or clear count-table caches")
    k.add_argument("action", choices=["build", "inspect", "clear"])
    k.add_argument("kind", nargs="?", choices=["irreducible", "smooth"], default=None)
    k.add_argument("--q", type=int, default=None)
    k.add_argument("--degree-bound", "-N", type=int, default=None)
    k.add_argument("--kmax", type=int, default=None)
    k.set_defaults(func=cmd_cache)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
