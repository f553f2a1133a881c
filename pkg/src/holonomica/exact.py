"""Exact scalar types and coefficient plumbing.

Scalars are :class:`fractions.Fraction` by default.  :class:`GaussRat`
represents elements of Q(i) and is only produced where a computation
genuinely leaves Q; results with zero imaginary part are demoted back to
``Fraction``.  :class:`PhaseLaurent` adjoins the transcendental constant
``q = exp(i*theta)`` (theta rational) as a Laurent variable, which is what
truncated exponentials ``exp(W*h)`` with ``h(0) != 0`` need.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

from .errors import ParseError

__all__ = [
    "GaussRat",
    "I",
    "PhaseLaurent",
    "coerce",
    "gauss",
    "format_coeff",
    "parse_coeff",
    "is_rational",
    "convolve",
    "convolve_int",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class GaussRat:
    """Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    def _pair(self, other):
        if isinstance(other, GaussRat):
            return other.re, other.im
        if isinstance(other, (int, Fraction)):
            return other, 0
        return None

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return gauss(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return gauss(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return gauss(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        if d == 0:
            return gauss(a * c, b * c)
        return gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        c, d = p
        if d == 0:
            if c == 0:
                raise ZeroDivisionError("GaussRat division by zero")
            return gauss(self.re / c, self.im / c)
        n = c * c + d * d
        return gauss((self.re * c + self.im * d) / n, (self.im * c - self.re * d) / n)

    def __rtruediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return GaussRat(*p) / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        result, base = Fraction(1), self
        while k:
            if k & 1:
                result = base * result
            k >>= 1
            if k:
                base = base * base
        return result

    def __pos__(self):
        return self

    def conjugate(self):
        return gauss(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRat({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_coeff(self)


I = GaussRat(0, 1)


def gauss(re, im=0):
    """Build an element of Q(i), demoting to ``Fraction`` when ``im == 0``."""
    if im == 0:
        return _frac(re)
    return GaussRat(re, im)


def coerce(c):
    """Canonical scalar: int -> Fraction, real GaussRat -> Fraction."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, GaussRat):
        return c.re if c.im == 0 else c
    if isinstance(c, PhaseLaurent):
        return c
    if isinstance(c, str):
        return parse_coeff(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def is_rational(c) -> bool:
    return isinstance(c, (int, Fraction))


class PhaseLaurent:
    """Laurent polynomial ``sum c_k q^k`` in ``q = exp(i*theta)``.

    ``theta`` is a nonzero rational, so ``q`` is transcendental over Q(i)
    and the powers of ``q`` are linearly independent; an expression is zero
    exactly when every coefficient is.
    """

    __slots__ = ("theta", "terms")

    def __init__(self, theta, terms):
        self.theta = _frac(theta)
        self.terms = {int(k): coerce(v) for k, v in terms.items() if v != 0}

    def _other_terms(self, other):
        if isinstance(other, PhaseLaurent):
            if other.theta != self.theta:
                raise ValueError("cannot mix phases with different theta")
            return other.terms
        if isinstance(other, (int, Fraction, GaussRat)):
            return {0: other} if other != 0 else {}
        return None

    def _make(self, terms):
        return phase(self.theta, terms)

    def __add__(self, other):
        t = self._other_terms(other)
        if t is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in t.items():
            out[k] = out.get(k, 0) + v
        return self._make(out)

    __radd__ = __add__

    def __neg__(self):
        return PhaseLaurent(self.theta, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        t = self._other_terms(other)
        if t is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in t.items():
            out[k] = out.get(k, 0) - v
        return self._make(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        t = self._other_terms(other)
        if t is None:
            return NotImplemented
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in t.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return self._make(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            if other == 0:
                raise ZeroDivisionError("PhaseLaurent division by zero")
            inv = 1 / Fraction(other) if not isinstance(other, GaussRat) else 1 / other
            return self._make({k: v * inv for k, v in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        t = self._other_terms(other)
        if t is None:
            return NotImplemented
        return self.terms == {k: coerce(v) for k, v in t.items()}

    def __hash__(self):
        return hash((self.theta, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"PhaseLaurent({self.theta!s}, {self.terms!r})"

    def __str__(self):
        return format_coeff(self)


def phase(theta, terms):
    """Build a :class:`PhaseLaurent`, demoting to a scalar if only ``q^0`` remains."""
    clean = {k: v for k, v in terms.items() if v != 0}
    if not clean:
        return Fraction(0)
    if set(clean) == {0}:
        return coerce(clean[0])
    return PhaseLaurent(theta, clean)


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_coeff(c) -> str:
    """Canonical text: ``"p/q"``, ``"a/b+c/d*i"``, or ``"(c)*q^k + ..."``."""
    if isinstance(c, int):
        return str(c)
    if isinstance(c, Fraction):
        return _fmt_frac(c)
    if isinstance(c, GaussRat):
        sign = "-" if c.im < 0 else "+"
        return f"{_fmt_frac(c.re)}{sign}{_fmt_frac(abs(c.im))}*i"
    if isinstance(c, PhaseLaurent):
        return " + ".join(f"({format_coeff(c.terms[k])})*q^{k}" for k in sorted(c.terms, reverse=True))
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_FULL = re.compile(rf"^({_RAT})([+-]\d+(?:/\d+)?)\*i$")
_GAUSS_IM = re.compile(rf"^({_RAT})\*i$")
_PHASE_TERM = re.compile(r"^\((.*)\)\*q\^([+-]?\d+)$")


def parse_coeff(text: str, theta=None):
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty coefficient")
    if "q^" in s:
        if theta is None:
            raise ParseError("phase coefficient needs theta")
        terms = {}
        depth = 0
        start = 0
        pieces = []
        for pos, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "+" and depth == 0 and pos > start:
                pieces.append(s[start:pos])
                start = pos + 1
        pieces.append(s[start:])
        for piece in pieces:
            m = _PHASE_TERM.match(piece)
            if not m:
                raise ParseError(f"bad phase term {piece!r}")
            terms[int(m.group(2))] = parse_coeff(m.group(1))
        return phase(theta, terms)
    try:
        m = _GAUSS_FULL.match(s)
        if m:
            return gauss(Fraction(m.group(1)), Fraction(m.group(2)))
        m = _GAUSS_IM.match(s)
        if m:
            return gauss(0, Fraction(m.group(1)))
        if s in ("i", "+i"):
            return I
        if s == "-i":
            return -I
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad coefficient {text!r}") from exc


# --- convolution -----------------------------------------------------------

_NAIVE_CUTOFF = 12


def _pack(values, nbytes):
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in values)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def convolve_int(a, b):
    """Full product of two integer coefficient lists via Kronecker substitution."""
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if min(len(a), len(b)) < _NAIVE_CUTOFF:
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    ma = max(map(abs, a))
    mb = max(map(abs, b))
    if ma == 0 or mb == 0:
        return [0] * n
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    half = 1 << (8 * nbytes - 1)
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    raw = (prod + bias).to_bytes(nbytes * n, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half for i in range(n)]


def _to_ints(values):
    den = lcm(*(v.denominator for v in values)) if values else 1
    return [v.numerator * (den // v.denominator) for v in values], den


def convolve(a, b, n=None):
    """Product of two rational coefficient lists, truncated to ``n`` terms."""
    if n is not None:
        a = a[:n]
        b = b[:n]
    if not a or not b:
        return [Fraction(0)] * (0 if n is None else n)
    ia, da = _to_ints([_frac(x) for x in a])
    ib, db = _to_ints([_frac(x) for x in b])
    prod = convolve_int(ia, ib)
    den = da * db
    zero = Fraction(0)
    if den == 1:
        out = [Fraction(c) if c else zero for c in prod]
    else:
        out = [Fraction(c, den) if c else zero for c in prod]
    if n is not None:
        out = out[:n] + [Fraction(0)] * max(0, n - len(out))
    return out


def int_content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
