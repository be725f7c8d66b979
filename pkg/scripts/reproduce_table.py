"""Recompute the published Graver table and diff it cell by cell.

    python scripts/reproduce_table.py                 # every row, no time limit
    python scripts/reproduce_table.py --rows core --budget 600
"""
from __future__ import annotations

import argparse
import sys

from scrollgraver import table


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", choices=("core", "stretch", "all"), default="all")
    ap.add_argument("--budget", type=float, help="seconds per row; slower rows are SKIPPED")
    args = ap.parse_args(argv)
    rows = {"core": table.CORE_ROWS, "stretch": table.STRETCH_ROWS, "all": None}[args.rows]
    report = table.reproduce_table(rows, budget=args.budget)
    for line in report.lines():
        print(line, flush=True)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
