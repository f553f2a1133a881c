"""Generate and check polynomial Pell solutions over a range of n, reporting timing and size."""

import argparse
import csv
import sys
import time

from holonomica.pell import pell_classify, pell_generate
from holonomica.poly import poly_eval


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=200)
    ap.add_argument("--csv", help="write per-n rows here")
    args = ap.parse_args()

    rows = []
    t0 = time.perf_counter()
    for n in range(-args.max_n, args.max_n + 1):
        t = time.perf_counter()
        w = pell_generate(n)
        bad = w.violations()
        classified = pell_classify(w.x, w.y)
        rows.append({
            "n": n,
            "deg_x": int(w.x.degree),
            "y_at_1": int(poly_eval(w.y, 1)),
            "max_coeff_bits": max(abs(int(c)).bit_length() for _, c in w.x.items()),
            "ok": not bad and classified == (1, n),
            "ms": round((time.perf_counter() - t) * 1e3, 3),
        })
    total = time.perf_counter() - t0
    failures = [r["n"] for r in rows if not r["ok"]]
    print(f"{len(rows)} values of n in {total:.2f}s; failures: {failures or 'none'}")
    print(f"largest coefficient of x_{args.max_n}: {rows[-1]['max_coeff_bits']} bits")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
