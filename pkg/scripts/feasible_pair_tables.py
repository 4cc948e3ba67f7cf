#!/usr/bin/env python3
"""Tabulate exact feasible pairs for a forbidden family over a range of n.

Each row of output covers one vertex count: a strip with one character
per edge count ('#' feasible, '.' infeasible), plus the least and
greatest infeasible counts when a gap exists. The scan is exhaustive
over isomorphism classes, so n is capped at 8.

Example, the family that pins a gap around the middle of the range:

    python3 scripts/feasible_pair_tables.py "4;0-1,0-2" "4;0-1,0-2,1-2" --n-max 7
"""

import argparse
import sys

from indfree import FamilySpec, RangeError, feasible_pairs, parse_graph


def strip(table):
    return "".join("#" if ok else "." for ok in table.feasible)


def main():
    parser = argparse.ArgumentParser(
        description="Exact feasibility tables for a forbidden family."
    )
    parser.add_argument(
        "specs", nargs="+",
        help="forbidden graphs: catalog names, edge lists, or graph6",
    )
    parser.add_argument("--n-min", type=int, default=4, help="first vertex count")
    parser.add_argument("--n-max", type=int, default=8, help="last vertex count (cap 8)")
    parser.add_argument(
        "--csv", metavar="FILE",
        help="also write all rows as n,m,feasible CSV",
    )
    args = parser.parse_args()

    if args.n_min > args.n_max:
        raise RangeError("empty order range")
    family = FamilySpec([parse_graph(s) for s in args.specs])
    print("forbidden:", ", ".join(args.specs))

    rows = ["n,m,feasible"]
    for n in range(args.n_min, args.n_max + 1):
        table = feasible_pairs(family, n)
        for m, ok in enumerate(table.feasible):
            rows.append(f"{n},{m},{str(ok).lower()}")
        if table.f is None:
            gap = "no infeasible m"
        else:
            gap = f"f={table.f} F={table.F}"
        print(f"n={n:<2} [{strip(table)}]  {gap}")

    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("\n".join(rows) + "\n")
        print(f"wrote {len(rows) - 1} rows to {args.csv}")


if __name__ == "__main__":
    sys.exit(main())
