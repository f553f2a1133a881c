"""Tabulate annihilators of the entire Pell solutions f, g for a grid of (n, h)."""

import argparse
import time

from holonomica.pell import pell_holonomic_witness
from holonomica.poly import parse_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[0, 1, 2, 3])
    ap.add_argument("--h", nargs="+", default=["0", "1", "z", "z^2", "z + z^3"])
    ap.add_argument("--order", type=int, default=120, help="truncation used for the self-check")
    ap.add_argument("--show", action="store_true", help="print the operators, not just their shape")
    args = ap.parse_args()

    print(f"{'n':>3} {'h':>10} {'ord f':>6} {'deg f':>6} {'ord g':>6} {'deg g':>6} {'secs':>6}")
    for h in args.h:
        for n in args.n:
            t = time.perf_counter()
            f, g = pell_holonomic_witness(1, n, parse_poly(h), args.order)
            secs = time.perf_counter() - t
            print(f"{n:>3} {h:>10} {f.order:>6} {f.max_degree:>6} {g.order:>6} {g.max_degree:>6} {secs:>6.2f}")
            if args.show:
                print(f"      f: {f}\n      g: {g}")


if __name__ == "__main__":
    main()
