#!/usr/bin/env python3
"""Certified scan of k -> F(I_{k,q}): where the descending chain breaks, and where it holds.

    python3 scripts/banks_martin_scan.py                 # q = 2, 3, 4 (k <= 12) and q = 5 (k <= 30)
    python3 scripts/banks_martin_scan.py --q 7 --kmax 20 -N 60
"""

import argparse
import sys
import time

from erdos_fq.bounds import Verdict, banks_martin_scan
from erdos_fq.enclosure import PrecisionConfig, certified_decimal
from erdos_fq.verify import default_degree_bound

# (q, k_max, N); N = 60 keeps q = 5 at k <= 30 to well under a minute
DEFAULT_RUNS = [(2, 12, 200), (3, 12, 150), (4, 12, 150), (5, 30, 60)]


def show(q, k_max, N, cfg):
    t0 = time.perf_counter()
    rep = banks_martin_scan(q, k_max, N, cfg)
    dt = time.perf_counter() - t0
    print(f"q={q}  k<={k_max}  N={N}  ({dt:.1f}s)")
    for k, (res, above) in enumerate(zip(rep.results, rep.above_one), 1):
        step = rep.steps[k - 1] if k <= len(rep.steps) else ""
        val = certified_decimal(res.value) or "undecided"
        flag = "" if above is Verdict.HOLDS else f"  (> 1: {above})"
        print(f"  k={k:<3} {val[:24]:<24} {step}{flag}")
    if rep.minima:
        print(f"  local minima at k = {rep.minima}")
    print(f"  strictly decreasing: {rep.descending}")
    return rep


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int)
    ap.add_argument("--kmax", type=int, default=12)
    ap.add_argument("-N", "--degree-bound", type=int)
    ap.add_argument("--bits", type=int, default=256)
    args = ap.parse_args(argv)
    cfg = PrecisionConfig(args.bits)
    if args.q is None:
        runs = DEFAULT_RUNS
    else:
        runs = [(args.q, args.kmax, args.degree_bound or default_degree_bound(args.q))]
    undecided = False
    for q, k_max, N in runs:
        rep = show(q, k_max, N, cfg)
        undecided |= bool(rep.undecided)
    return 2 if undecided else 0


if __name__ == "__main__":
    sys.exit(main())
