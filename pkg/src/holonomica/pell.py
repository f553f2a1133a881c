"""Solutions of the functional Pell equation ``X^2 - (z^2 - 1) Y^2 = 1``.

Polynomial solutions are ``(eps*x_n, y_n)`` with ``x_n + w y_n = (z + w)^n``.
Entire solutions of finite order are ``eps (z + w)^n exp(w h)`` with ``h`` a
polynomial; near ``z = 0`` they are realized by substituting the branch
``W`` of ``w`` with ``W(0) = i`` and its negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalConsistencyError, NotASolution, TruncationTooShort
from .exact import PhaseLaurent, convolve_int, gauss, phase
from .holonomic import DModule, OdeAnnihilator, dmodule_annihilator, ode_series_check
from .poly import Poly, Z, poly_eval
from .quad import DISC, QuadElem, fundamental_unit, quad_pow
from .ratfunc import RatFunc
from .series import TruncSeries, mul_coeff_lists, series_exp, series_of_quad, series_W

__all__ = [
    "PellWitness",
    "EntirePellData",
    "pell_generate",
    "pell_verify_poly",
    "pell_classify",
    "pell_general_solution",
    "pell_holonomic_witness",
    "pell_dmodule",
]

MIN_ORDER = 8


@dataclass(frozen=True)
class PellWitness:
    epsilon: int
    n: int
    x: Poly
    y: Poly

    def violations(self):
        """Names of the witness invariants that fail (empty when sound)."""
        bad = []
        if not pell_verify_poly(self.x, self.y):
            bad.append("pell")
        if not (self.x.has_integer_coeffs() and self.y.has_integer_coeffs()):
            bad.append("integrality")
        if poly_eval(self.y, 1) != self.n:
            bad.append("eval")
        if self.x.degree != abs(self.n):
            bad.append("degree")
        return bad


@dataclass(frozen=True)
class EntirePellData:
    """Truncated ``f, g`` with ``f + W g = eps (z + W)^n exp(W h)``.

    When ``h(0) != 0`` the coefficients involve ``q = exp(i*theta)`` with
    ``theta = h(0)``; they are then :class:`~holonomica.exact.PhaseLaurent`.
    """

    epsilon: int
    n: int
    h: Poly
    T: int
    f: TruncSeries
    g: TruncSeries
    theta: Fraction = Fraction(0)

    def identity_residual(self) -> TruncSeries:
        """``f^2 - (z^2 - 1) g^2 - 1`` to order ``T``."""
        f2 = TruncSeries._raw(mul_coeff_lists(self.f.coeffs, self.f.coeffs, self.T), self.T)
        g2 = TruncSeries._raw(mul_coeff_lists(self.g.coeffs, self.g.coeffs, self.T), self.T)
        return f2 - g2.mul_poly(DISC) - 1


def pell_generate(n: int) -> PellWitness:
    u = quad_pow(fundamental_unit(), n)
    return PellWitness(1, n, u.x, u.y)


def pell_verify_poly(f: Poly, g: Poly) -> bool:
    if f.has_integer_coeffs() and g.has_integer_coeffs():
        x = [int(c) for c in f.dense()]
        y2 = convolve_int(*([int(c) for c in g.dense()],) * 2)
        x2 = convolve_int(x, x)
        r = x2 + [0] * max(0, len(y2) + 2 - len(x2))
        for i, c in enumerate(y2):
            # subtract (z^2 - 1) * g^2
            r[i + 2] -= c
            r[i] += c
        return (r[0] if r else 0) == 1 and not any(r[1:])
    return f * f - DISC * (g * g) == 1


def pell_classify(f: Poly, g: Poly):
    """Return ``(epsilon, n)`` with ``(f, g) == (epsilon*x_n, y_n)``."""
    if not pell_verify_poly(f, g):
        raise NotASolution("(f, g) does not satisfy X^2 - (z^2-1) Y^2 = 1")
    if not g:
        # f^2 = 1 forces f = +-1
        return int(f.coeff(0)), 0
    d = int(f.degree)
    n = poly_eval(g, 1)
    if n not in (d, -d):
        raise NotASolution(f"y(1) = {n} is not +-deg f = +-{d}")
    n = int(n)
    ref = pell_generate(n)
    ratio = f.lc / ref.x.lc
    if ratio not in (1, -1) or f != ref.x.scale(ratio) or g != ref.y:
        raise NotASolution("(f, g) is not of the form (eps*x_n, y_n)")
    return int(ratio), n


def _phase_combine(theta, plus, minus, T):
    if theta == 0:
        return [plus[i] + minus[i] for i in range(T)]
    return [phase(theta, {1: plus[i], -1: minus[i]}) for i in range(T)]


def pell_general_solution(epsilon: int, n: int, h: Poly, T: int) -> EntirePellData:
    """Truncated entire solution ``f + W g = eps (z + W)^n exp(W h)``."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    if T < MIN_ORDER:
        raise TruncationTooShort(f"T={T} < {MIN_ORDER} leaves no room to certify the identity")
    if not h.is_rational():
        raise ValueError("h must have rational coefficients")
    unit = quad_pow(fundamental_unit(), n)
    wh = QuadElem(RatFunc.from_poly(Poly()), RatFunc.from_poly(h))
    theta = Fraction(h.coeff(0))
    halves = []
    for branch in (1, -1):
        s = series_of_quad(wh, branch, T)
        # exp(W h) = exp(branch*i*theta) * exp(W h - branch*i*theta)
        s = s - gauss(0, branch * theta)
        prod = series_of_quad(unit, branch, T) * series_exp(s)
        halves.append(prod.scale(Fraction(epsilon, 2)))
    plus, minus = halves
    f = TruncSeries(_phase_combine(theta, plus.coeffs, minus.coeffs, T), T)
    diff = _phase_combine(theta, plus.coeffs, (-minus).coeffs, T)
    winv = series_W(T).inverse()
    g = TruncSeries._raw(mul_coeff_lists(diff, winv.coeffs, T), T)
    data = EntirePellData(epsilon, n, h, T, f, g, theta)
    if not data.identity_residual().is_zero():
        raise InternalConsistencyError(f"Pell identity fails for eps={epsilon}, n={n}, h={h}")
    return data


def pell_dmodule(n: int, h: Poly) -> DModule:
    """Rank-2 module with basis ``E, wE`` for ``E = (z + w)^n exp(w h)``.

    ``E' = c w E`` with ``c = (n + z h)/(z^2 - 1) + h'``, hence
    ``(wE)' = (z^2 - 1) c E + z/(z^2 - 1) wE``.  Its element is ``E``.
    """
    disc = RatFunc.from_poly(DISC)
    c = RatFunc(Poly.const(n) + Z * h, DISC) + RatFunc.from_poly(h.derivative())
    M = ((RatFunc.from_poly(Poly()), c), (disc * c, RatFunc(Z, DISC)))
    return DModule(M, (RatFunc.from_poly(Poly.const(1)), RatFunc.from_poly(Poly())))


def pell_holonomic_witness(epsilon: int, n: int, h: Poly, T: int = 120):
    """Annihilators of ``f`` and ``g`` for the entire solution with data ``(eps, n, h)``.

    The module annihilators have coefficients in Q(z), which is fixed by
    ``w -> -w``; so the annihilator of ``E`` also kills its conjugate, and
    hence ``f = eps (E + conj E)/2``.  Likewise for ``E/w`` and
    ``g = eps (E - conj E)/(2w)``.  Both are checked against the
    truncated solution before being returned.
    """
    m = pell_dmodule(n, h)
    ode_f = dmodule_annihilator(m)
    ode_g = dmodule_annihilator(m.with_element((RatFunc.from_poly(Poly()), RatFunc(Poly.const(1), DISC))))
    data = pell_general_solution(epsilon, n, h, T)
    for name, ode, s in (("f", ode_f, data.f), ("g", ode_g, data.g)):
        if not ode_series_check(ode, s):
            raise InternalConsistencyError(f"annihilator of {name} fails the series check (n={n}, h={h})")
    return ode_f, ode_g
