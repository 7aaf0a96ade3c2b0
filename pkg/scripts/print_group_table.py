#!/usr/bin/env python3
"""Print the per-class exponential data (A, traces, t, u) for a parameter sweep.

Example:
  python3 scripts/print_group_table.py
  python3 scripts/print_group_table.py --alpha 2 --beta -1 --coords 1,0,2
"""

import argparse
import sys

from paralie.cli import format_matrix, table_rows


def parse_coords(token):
    a, b, c = (float(s) for s in token.split(","))
    return a, b, c


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alpha", type=float, default=1.0)
    ap.add_argument("--beta", type=float, default=1.0)
    ap.add_argument("--coords", type=parse_coords, default=(1.0, 1.0, 1.0))
    args = ap.parse_args()

    a, b, c = args.coords
    print(f"alpha={args.alpha:g} beta={args.beta:g}  coords a={a:g} b={b:g} c={c:g}\n")
    for row in table_rows(args.alpha, args.beta, a, b, c):
        print(
            f"{row['class']:<4}  trA = {row['trace']:<10.6g} trA^2 = {row['trace_sq']:<10.6g}"
            f" t = {row['t']:<12.8g} u = {row['u']:<12.8g} [{row['branch']}]"
        )
        print(format_matrix(row["A"], indent="      "))
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
