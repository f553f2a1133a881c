"""Arithmetic in K[w]/(w^2 - (z^2 - 1)) for K = Q[z] or Q(z).

An element ``a + b*w`` carries a mode tag: ``"poly"`` when both components
are polynomials, ``"ratfunc"`` otherwise.  The fundamental unit ``z + w``
has norm 1, so its powers give the polynomial Pell solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvertible, RingTagError
from .exact import convolve_int
from .poly import Poly, Z
from .ratfunc import RatFunc

__all__ = [
    "QuadElem",
    "DISC",
    "quad_mul",
    "quad_pow",
    "quad_conj",
    "quad_derivative",
    "quad_norm",
    "fundamental_unit",
    "w_elem",
]

POLY = "poly"
RATFUNC = "ratfunc"

#: w**2
DISC = Z * Z - 1
_DISC_RF = RatFunc.from_poly(DISC)


def _rf(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc._lift(x)


@dataclass(frozen=True)
class QuadElem:
    a: RatFunc
    b: RatFunc
    mode: str = POLY

    def __post_init__(self):
        object.__setattr__(self, "a", _rf(self.a))
        object.__setattr__(self, "b", _rf(self.b))
        if self.mode not in (POLY, RATFUNC):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == POLY and not (self.a.is_poly() and self.b.is_poly()):
            raise ValueError("polynomial-mode element with a non-polynomial component")

    @classmethod
    def make(cls, a, b) -> "QuadElem":
        """Pick the narrowest mode that holds ``a`` and ``b``."""
        a, b = _rf(a), _rf(b)
        return cls(a, b, POLY if a.is_poly() and b.is_poly() else RATFUNC)

    def promote(self) -> "QuadElem":
        return self if self.mode == RATFUNC else QuadElem(self.a, self.b, RATFUNC)

    @property
    def x(self) -> Poly:
        """Component of 1 as a polynomial (poly mode only)."""
        return self._poly(self.a)

    @property
    def y(self) -> Poly:
        """Component of w as a polynomial (poly mode only)."""
        return self._poly(self.b)

    @staticmethod
    def _poly(r: RatFunc) -> Poly:
        if not r.is_poly():
            raise ValueError(f"{r} is not a polynomial")
        return r.num

    def _check(self, other: "QuadElem"):
        if not isinstance(other, QuadElem):
            raise TypeError("expected a QuadElem")
        if other.mode != self.mode:
            raise RingTagError(f"ring-tag mismatch: {self.mode} vs {other.mode}")

    def __add__(self, other):
        self._check(other)
        return QuadElem(self.a + other.a, self.b + other.b, self.mode)

    def __sub__(self, other):
        self._check(other)
        return QuadElem(self.a - other.a, self.b - other.b, self.mode)

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.mode)

    def __mul__(self, other):
        return quad_mul(self, other)

    def __pow__(self, n):
        return quad_pow(self, n)

    def scale(self, c) -> "QuadElem":
        c = _rf(c)
        mode = self.mode if c.is_poly() else RATFUNC
        return QuadElem(self.a * c, self.b * c, mode)

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def __str__(self):
        return f"({self.a}) + ({self.b})*w"


def quad_mul(u: QuadElem, v: QuadElem) -> QuadElem:
    u._check(v)
    a = u.a * v.a + u.b * v.b * _DISC_RF
    b = u.a * v.b + u.b * v.a
    return QuadElem(a, b, u.mode)


def quad_conj(u: QuadElem) -> QuadElem:
    return QuadElem(u.a, -u.b, u.mode)


def quad_norm(u: QuadElem) -> RatFunc:
    """``a^2 - (z^2 - 1) b^2``."""
    return u.a * u.a - u.b * u.b * _DISC_RF


def _inverse(u: QuadElem) -> QuadElem:
    nrm = quad_norm(u)
    if not nrm:
        raise NotInvertible(f"{u} has zero norm")
    if u.mode == POLY and not (nrm.is_poly() and nrm.num.is_constant()):
        raise NotInvertible(f"{u} is not a unit of the polynomial ring (norm {nrm})")
    c = quad_conj(u)
    inv = nrm.inverse()
    return QuadElem(c.a * inv, c.b * inv, u.mode)


def _int_lists(u: QuadElem):
    if u.mode != POLY or not (u.x.has_integer_coeffs() and u.y.has_integer_coeffs()):
        return None
    return [int(c) for c in u.x.dense()], [int(c) for c in u.y.dense()]


def _add_lists(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _int_mul(u, v):
    (a1, b1), (a2, b2) = u, v
    bb = convolve_int(b1, b2)
    # (z^2 - 1) * bb
    disc_bb = _add_lists([0, 0] + bb, [-c for c in bb]) if bb else []
    return _add_lists(convolve_int(a1, a2), disc_bb), _add_lists(convolve_int(a1, b2), convolve_int(a2, b1))


def _int_pow(base, n):
    result = ([1], [])
    while n:
        if n & 1:
            result = _int_mul(result, base)
        n >>= 1
        if n:
            base = _int_mul(base, base)
    a, b = (Poly._raw({e: Fraction(c) for e, c in enumerate(lst) if c}) for lst in result)
    return QuadElem(RatFunc.from_poly(a), RatFunc.from_poly(b), POLY)


def quad_pow(u: QuadElem, n: int) -> QuadElem:
    """Binary exponentiation; negative exponents go through conjugate / norm.

    Integral polynomial-mode elements are powered on plain integer
    coefficient lists, which is several times faster than going through
    :class:`Poly`.
    """
    if n < 0:
        u = _inverse(u)
        n = -n
    lists = _int_lists(u)
    if lists is not None:
        return _int_pow(lists, n)
    result = QuadElem(RatFunc.from_poly(Poly.const(1)), RatFunc.from_poly(Poly()), u.mode)
    base = u
    while n:
        if n & 1:
            result = quad_mul(result, base)
        n >>= 1
        if n:
            base = quad_mul(base, base)
    return result


def quad_derivative(u: QuadElem) -> QuadElem:
    """``(a + b w)' = a' + (b' + b z/(z^2-1)) w``; always rational-function mode."""
    dw = RatFunc(Z, DISC)
    return QuadElem(u.a.derivative(), u.b.derivative() + u.b * dw, RATFUNC)


def w_elem(mode: str = POLY) -> QuadElem:
    return QuadElem(RatFunc.from_poly(Poly()), RatFunc.from_poly(Poly.const(1)), mode)


def fundamental_unit(mode: str = POLY) -> QuadElem:
    """``z + w``."""
    return QuadElem(RatFunc.from_poly(Z), RatFunc.from_poly(Poly.const(1)), mode)
