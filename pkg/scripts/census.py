#!/usr/bin/env python3
"""Census of UP-algebras and UP-semigroup pairs by order.

Usage:
  python scripts/census.py --max-order 4
  python scripts/census.py --max-order 5 --up-to-iso --out census5.json   # long run
"""

import argparse
import json
import logging
import time

from upsemigroups.core import ClassLabel
from upsemigroups.enumeration import SearchConfig, confirm_rf_ff_singleton, summarize


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-order", type=int, default=4)
    ap.add_argument("--up-to-iso", action="store_true")
    ap.add_argument("--out", help="write the summaries as JSON")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format="%(message)s")

    header = f"{'n':>2} {'UP':>6} {'sgrp':>7} {'pairs':>10} " + " ".join(f"{l.value:>6}" for l in ClassLabel)
    print(header)
    rows = []
    for n in range(1, args.max_order + 1):
        t0 = time.perf_counter()
        s = summarize(SearchConfig(n, args.up_to_iso))
        d = s.to_dict()
        d["seconds"] = round(time.perf_counter() - t0, 3)
        rows.append(d)
        counts = " ".join(f"{s.label_counts[l]:>6}" for l in ClassLabel)
        print(f"{n:>2} {s.count_up_algebras:>6} {s.count_semigroups:>7} {s.count_pairs:>10} {counts}"
              f"   ({d['seconds']} s)")

    if not args.up_to_iso:
        report = confirm_rf_ff_singleton(args.max_order)
        print("rf/ff only at order 1:", "yes" if report.passed else "NO")

    if args.out:
        with open(args.out, "w") as f:
            json.dump(rows, f, indent=2)


if __name__ == "__main__":
    main()
