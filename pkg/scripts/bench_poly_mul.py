"""Time sparse vs dense (Kronecker) polynomial products across sizes and fill ratios.

The crossover informs DENSE_MIN_TERMS and DENSE_MIN_FILL in holonomica.poly.
"""

import argparse
import random
import timeit
from fractions import Fraction

from holonomica.exact import convolve
from holonomica.poly import Poly


def random_poly(rng, terms, fill, rational):
    span = max(terms, int(terms / fill))
    exps = rng.sample(range(span), terms)
    coef = (lambda: Fraction(rng.randint(-99, 99) or 1, rng.randint(1, 9))) if rational else (lambda: rng.randint(-99, 99) or 1)
    return Poly({e: coef() for e in exps})


def sparse_mul(a, b):
    return a._mul_sparse_int(b)


def dense_mul(a, b):
    return convolve(a.dense(), b.dense())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--terms", type=int, nargs="+", default=[4, 8, 16, 32, 64, 128])
    ap.add_argument("--fill", type=float, nargs="+", default=[0.05, 0.25, 0.5, 1.0])
    ap.add_argument("--rational", action="store_true", help="non-integral coefficients")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'terms':>6} {'fill':>5} {'sparse_us':>10} {'dense_us':>10}  winner")
    for n in args.terms:
        for fill in args.fill:
            a = random_poly(rng, n, fill, args.rational)
            b = random_poly(rng, n, fill, args.rational)
            reps = max(3, 2000 // n)
            ts = min(timeit.repeat(lambda: sparse_mul(a, b), number=reps, repeat=3)) / reps * 1e6
            td = min(timeit.repeat(lambda: dense_mul(a, b), number=reps, repeat=3)) / reps * 1e6
            print(f"{n:>6} {fill:>5.2f} {ts:>10.1f} {td:>10.1f}  {'dense' if td < ts else 'sparse'}")


if __name__ == "__main__":
    main()
