"""Fraction-free elimination over Q[z] for kernel vectors over Q(z)."""

from __future__ import annotations

from .poly import Poly
from .ratfunc import RatFunc

__all__ = ["bareiss_echelon", "first_dependence"]


def _poly_lcm(polys):
    out = Poly.const(1)
    for p in polys:
        if p.degree > 0:
            out = (out * p).exact_div(out.gcd(p))
    return out


def bareiss_echelon(rows):
    """Fraction-free row echelon form of a polynomial matrix.

    Returns ``(matrix, pivot_columns)``; every division performed is exact.
    """
    A = [list(r) for r in rows]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    prev = Poly.const(1)
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        p = next((i for i in range(row, nrows) if A[i][col]), None)
        if p is None:
            continue
        A[row], A[p] = A[p], A[row]
        piv = A[row][col]
        for i in range(row + 1, nrows):
            a_ic = A[i][col]
            for j in range(col + 1, ncols):
                val = piv * A[i][j] - a_ic * A[row][j]
                A[i][j] = val if prev == 1 else val.exact_div(prev)
            A[i][col] = Poly()
        prev = piv
        pivots.append(col)
        row += 1
    return A, pivots


def first_dependence(vectors):
    """Kernel coefficients for the first vector lying in the span of its predecessors.

    ``vectors`` are equal-length sequences of :class:`RatFunc`.  Returns
    polynomials ``c_0..c_m`` (``c_m != 0``, no common factor) with
    ``sum c_j v_j == 0`` where ``v_m`` is the first dependent vector, or
    ``None`` if the vectors are independent.
    """
    if not vectors:
        return None
    scales = [_poly_lcm([x.den for x in v]) for v in vectors]
    cols = [[(x * s).num for x in v] for v, s in zip(vectors, scales)]
    nrows = len(cols[0])
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]
    A, pivots = bareiss_echelon(rows)
    free = next((c for c in range(len(cols)) if c not in pivots), None)
    if free is None:
        return None
    x = {free: RatFunc.from_poly(Poly.const(1))}
    prow = [(r, c) for r, c in enumerate(pivots) if c < free]
    for r, c in reversed(prow):
        acc = RatFunc.from_poly(A[r][free])
        for r2, c2 in prow:
            if c < c2:
                acc = acc + RatFunc.from_poly(A[r][c2]) * x[c2]
        x[c] = -acc / RatFunc.from_poly(A[r][c])
    # coefficients for the original (unscaled) vectors
    coeffs = []
    for j in range(free + 1):
        xj = x.get(j, RatFunc.from_poly(Poly()))
        coeffs.append(xj * RatFunc.from_poly(scales[j]))
    den = _poly_lcm([c.den for c in coeffs])
    polys = [(c * RatFunc.from_poly(den)).num for c in coeffs]
    g = Poly()
    for p in polys:
        g = g.gcd(p)
    return [p.exact_div(g) for p in polys]
