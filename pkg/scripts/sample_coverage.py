"""How much of the Graver basis do random reduced Gröbner bases cover?

Draws random weight orders, unions the reduced Gröbner bases and reports
the fraction of Graver elements seen.  Coverage is reported, not asserted.

    python scripts/sample_coverage.py --scroll 3,2 --trials 200
"""
from __future__ import annotations

import argparse
import json

from scrollgraver import gb
from scrollgraver.scroll import ScrollSpec, build_config


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scroll", action="append", default=None,
                    help="S-notation, repeatable (default: 2,2 3,2 2,2,2 3,3)")
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    for s in args.scroll or ["2,2", "3,2", "2,2,2", "3,3"]:
        spec = ScrollSpec.from_s_notation(tuple(int(x) for x in s.split(",")))
        rep = gb.universal_sample(build_config(spec), args.trials, args.seed)
        if args.json:
            print(json.dumps({"scroll": str(spec), **rep}))
        else:
            print(f"{spec}: {rep['covered']}/{rep['graver']} Graver elements covered by "
                  f"{args.trials} orders, max GB degree {rep['max_gb_degree']}, "
                  f"outside Graver {rep['outside_graver']}")


if __name__ == "__main__":
    main()
