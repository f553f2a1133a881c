"""Truncated power series over Q(i), plus the ``q = exp(i*theta)`` phase ring.

A :class:`TruncSeries` with order ``T`` stores ``a_0 .. a_{T-1}``; nothing
beyond ``T`` is known.  Binary operations on series of different orders
truncate to the smaller one.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import PreconditionError
from .exact import GaussRat, I, PhaseLaurent, coerce, convolve, gauss, is_rational, phase
from .poly import Poly
from .quad import QuadElem
from .ratfunc import RatFunc

__all__ = [
    "TruncSeries",
    "series_arith",
    "series_exp",
    "series_W",
    "series_of_quad",
]

_ZERO = Fraction(0)


class TruncSeries:
    __slots__ = ("coeffs", "T")

    def __init__(self, coeffs, T=None):
        coeffs = [coerce(c) for c in coeffs]
        if T is None:
            T = len(coeffs)
        if T < 0:
            raise ValueError("negative truncation order")
        if len(coeffs) < T:
            coeffs.extend([_ZERO] * (T - len(coeffs)))
        self.coeffs = tuple(coeffs[:T])
        self.T = T

    @classmethod
    def _raw(cls, coeffs, T):
        s = cls.__new__(cls)
        s.coeffs = tuple(coeffs)
        s.T = T
        return s

    @classmethod
    def zero(cls, T):
        return cls._raw([_ZERO] * T, T)

    @classmethod
    def one(cls, T):
        return cls.from_poly(Poly.const(1), T)

    @classmethod
    def from_poly(cls, p: Poly, T: int) -> "TruncSeries":
        return cls._raw(p.dense(max(T, 0)), T)

    @classmethod
    def from_ratfunc(cls, r: RatFunc, T: int) -> "TruncSeries":
        den = r.den
        d0 = den.coeff(0)
        if d0 == 0:
            raise PreconditionError(f"{r} has a pole at z=0")
        num = r.num.dense(T)
        if den.degree == 0:
            return cls._raw([coerce(c / d0) for c in num], T)
        inv0 = 1 / d0
        tail = [(e, c) for e, c in den.items() if e > 0]
        out = []
        for n in range(T):
            acc = num[n]
            for e, c in tail:
                if e > n:
                    break
                acc = acc - c * out[n - e]
            out.append(coerce(acc * inv0))
        return cls._raw(out, T)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.T

    def truncate(self, T: int) -> "TruncSeries":
        if T > self.T:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries._raw(self.coeffs[:T], T)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def _align(self, other):
        if isinstance(other, TruncSeries):
            T = min(self.T, other.T)
            return T, other.coeffs[:T]
        if isinstance(other, Poly):
            return self.T, other.dense(self.T)
        if isinstance(other, (int, Fraction, GaussRat, PhaseLaurent)):
            return self.T, [other] + [_ZERO] * (self.T - 1) if self.T else []
        return None, None

    def __add__(self, other):
        T, oc = self._align(other)
        if T is None:
            return NotImplemented
        return TruncSeries._raw([coerce(a + b) for a, b in zip(self.coeffs[:T], oc)], T)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw([-a for a in self.coeffs], self.T)

    def __sub__(self, other):
        T, oc = self._align(other)
        if T is None:
            return NotImplemented
        return TruncSeries._raw([coerce(a - b) for a, b in zip(self.coeffs[:T], oc)], T)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncSeries":
        return TruncSeries._raw([coerce(a * c) for a in self.coeffs], self.T)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat, PhaseLaurent)):
            return self.scale(other)
        if isinstance(other, Poly):
            return self.mul_poly(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        T = min(self.T, other.T)
        return TruncSeries._raw(mul_coeff_lists(self.coeffs[:T], other.coeffs[:T], T), T)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(1 / coerce(other))
        return NotImplemented

    def mul_poly(self, p: Poly) -> "TruncSeries":
        """Product with a (typically sparse, low degree) polynomial."""
        out = [_ZERO] * self.T
        for e, c in p.items():
            if e >= self.T:
                break
            for n in range(e, self.T):
                a = self.coeffs[n - e]
                if a != 0:
                    out[n] = out[n] + c * a
        return TruncSeries._raw([coerce(x) for x in out], self.T)

    def derivative(self) -> "TruncSeries":
        """Exact to order ``T - 1``."""
        return TruncSeries._raw([coerce(self.coeffs[n] * n) for n in range(1, self.T)], max(self.T - 1, 0))

    def nth_derivative(self, k: int) -> "TruncSeries":
        """``k``-th derivative via falling factorials; exact to order ``T - k``."""
        if k == 0:
            return self
        out = []
        for m in range(self.T - k):
            ff = 1
            for j in range(m + 1, m + k + 1):
                ff *= j
            out.append(coerce(self.coeffs[m + k] * ff))
        return TruncSeries._raw(out, max(self.T - k, 0))

    def inverse(self) -> "TruncSeries":
        a = self.coeffs
        if not a or a[0] == 0:
            raise PreconditionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        nz = [(k, a[k]) for k in range(1, self.T) if a[k] != 0]
        out = [coerce(inv0)]
        for n in range(1, self.T):
            acc = _ZERO
            for k, c in nz:
                if k > n:
                    break
                acc = acc + c * out[n - k]
            out.append(coerce(-acc * inv0))
        return TruncSeries._raw(out, self.T)

    def exp(self) -> "TruncSeries":
        return series_exp(self)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.T == other.T and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.T, self.coeffs))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if self.T > 6 else ""
        return f"TruncSeries([{shown}{more}], T={self.T})"


# --- coefficient-list products ------------------------------------------------

def _decompose(values):
    """Split a coefficient list into rational lists keyed by (q-power, re/im)."""
    theta = None
    parts = {}
    n = len(values)
    for idx, c in enumerate(values):
        if isinstance(c, PhaseLaurent):
            if theta is None:
                theta = c.theta
            elif theta != c.theta:
                raise ValueError("cannot mix phases with different theta")
            items = c.terms.items()
        else:
            items = ((0, c),) if c != 0 else ()
        for k, v in items:
            if isinstance(v, GaussRat):
                comps = ((0, v.re), (1, v.im))
            else:
                comps = ((0, v),)
            for part, x in comps:
                if x:
                    parts.setdefault((k, part), [_ZERO] * n)[idx] = x
    return theta, parts


def mul_coeff_lists(a, b, T):
    if all(is_rational(x) for x in a) and all(is_rational(x) for x in b):
        return convolve(list(a), list(b), T)
    ta, pa = _decompose(a)
    tb, pb = _decompose(b)
    if ta is not None and tb is not None and ta != tb:
        raise ValueError("cannot mix phases with different theta")
    theta = ta if ta is not None else tb
    acc = {}
    for (ka, ra), la in pa.items():
        for (kb, rb), lb in pb.items():
            prod = convolve(la, lb, T)
            part = ra + rb
            sign = -1 if part == 2 else 1
            key = (ka + kb, part % 2)
            cur = acc.get(key)
            if cur is None:
                acc[key] = [x * sign for x in prod] if sign < 0 else prod
            else:
                for i, x in enumerate(prod):
                    if x:
                        cur[i] = cur[i] + sign * x
    out = []
    for i in range(T):
        by_k = {}
        for (k, part), lst in acc.items():
            x = lst[i]
            if x:
                re, im = by_k.get(k, (_ZERO, _ZERO))
                by_k[k] = (re + x, im) if part == 0 else (re, im + x)
        terms = {k: gauss(re, im) for k, (re, im) in by_k.items()}
        out.append(phase(theta, terms) if theta is not None else coerce(terms.get(0, _ZERO)))
    return out


# --- operation-level API ----------------------------------------------------------

def series_arith(s: TruncSeries, t: TruncSeries, op: str) -> TruncSeries:
    if op == "add":
        return s + t
    if op == "sub":
        return s - t
    if op == "mul":
        return s * t
    raise ValueError(f"unknown series operation {op!r}")


def series_exp(s: TruncSeries) -> TruncSeries:
    """``exp(s)`` for ``s(0) == 0`` from ``E' = s' E``.

    With ``s_k = S_k / D`` the scaled values ``e_n = n! D^n E_n`` satisfy
    ``e_n = sum_k k S_k D^(k-1) (n-1)!/(n-k)! e_{n-k}``, all in Gaussian
    integers.
    """
    T = s.T
    if T == 0:
        return TruncSeries._raw([], 0)
    if s.coeffs[0] != 0:
        raise PreconditionError("series_exp needs a zero constant term")
    if any(isinstance(c, PhaseLaurent) for c in s.coeffs):
        raise PreconditionError("series_exp argument must lie in Q(i)[[z]]")
    re = [Fraction(c.re) if isinstance(c, GaussRat) else Fraction(c) for c in s.coeffs]
    im = [Fraction(c.im) if isinstance(c, GaussRat) else _ZERO for c in s.coeffs]
    D = lcm(*(x.denominator for x in re + im))
    Sr = [int(x * D) for x in re]
    Si = [int(x * D) for x in im]
    nz = [k for k in range(1, T) if Sr[k] or Si[k]]
    Dpow = [1]
    for _ in range(T):
        Dpow.append(Dpow[-1] * D)
    er, ei = [1], [0]
    for n in range(1, T):
        accr = acci = 0
        ff = 1  # (n-1)!/(n-k)!
        prev_k = 1
        for k in nz:
            if k > n:
                break
            for j in range(prev_k, k):
                ff *= n - j
            prev_k = k
            w = k * Dpow[k - 1] * ff
            ar, ai = Sr[k] * w, Si[k] * w
            br, bi = er[n - k], ei[n - k]
            accr += ar * br - ai * bi
            acci += ar * bi + ai * br
        er.append(accr)
        ei.append(acci)
    out = []
    fact = 1
    for n in range(T):
        if n:
            fact *= n
        scale = fact * Dpow[n]
        out.append(gauss(Fraction(er[n], scale), Fraction(ei[n], scale)))
    return TruncSeries._raw(out, T)


def series_W(T: int) -> TruncSeries:
    """Branch of sqrt(z^2 - 1) with value ``i`` at 0, i.e. ``i*sqrt(1 - z^2)``."""
    if T < 1:
        raise PreconditionError("series_W needs T >= 1")
    out = [_ZERO] * T
    c = Fraction(1)
    m = 0
    while 2 * m < T:
        out[2 * m] = gauss(0, c)
        # binom(1/2, m+1) (-1)^(m+1) from binom(1/2, m) (-1)^m
        c = c * (Fraction(1, 2) - m) / (m + 1) * -1
        m += 1
    return TruncSeries._raw(out, T)


def series_of_quad(u: QuadElem, branch: int, T: int) -> TruncSeries:
    """Realize ``a + b*w`` near 0 with ``w`` replaced by ``branch * W``."""
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    a = TruncSeries.from_ratfunc(u.a, T)
    if not u.b:
        return a
    b = TruncSeries.from_ratfunc(u.b, T)
    W = series_W(T)
    return a + (b * W).scale(branch)
