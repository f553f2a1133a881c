"""Exact univariate polynomials over Q or Q(i).

Storage is a sparse exponent -> coefficient map; products of dense
rational polynomials switch to an integer Kronecker-substitution kernel
(see :data:`DENSE_MIN_TERMS`).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from math import lcm

from .errors import ParseError, PreconditionError
from .exact import (
    GaussRat,
    coerce,
    convolve,
    format_coeff,
    int_content,
    is_rational,
    parse_coeff,
)

__all__ = [
    "Poly",
    "Z",
    "ZERO_DEGREE",
    "poly_arith",
    "poly_eval",
    "integer_roots",
    "parse_poly",
]

#: Degree of the zero polynomial.  Compares below every exponent and is
#: absorbing under addition, so ``deg(a*b) == deg(a) + deg(b)`` always holds.
ZERO_DEGREE = -math.inf

#: Dense products are used once both factors have at least this many terms
#: and fill at least a quarter of their degree range; measured with
#: ``scripts/bench_poly_mul.py``.
DENSE_MIN_TERMS = 16
DENSE_MIN_FILL = 0.25

_FZERO = Fraction(0)


class Poly:
    """Immutable univariate polynomial ``sum c_e * z**e``."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else enumerate(terms)
            for e, c in items:
                if not isinstance(e, int) or e < 0:
                    raise ValueError(f"exponent must be a nonnegative int, got {e!r}")
                c = coerce(c)
                if c != 0:
                    t[e] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    @classmethod
    def from_dense(cls, coeffs):
        return cls(dict(enumerate(coeffs)))

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self):
        return max(self._t) if self._t else ZERO_DEGREE

    @property
    def lc(self):
        return self._t[max(self._t)] if self._t else Fraction(0)

    @property
    def nterms(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def coeff(self, e: int):
        return self._t.get(e, Fraction(0))

    def items(self):
        """``(exponent, coefficient)`` pairs in increasing exponent order."""
        return sorted(self._t.items())

    def support(self):
        return sorted(self._t)

    def dense(self, length=None):
        n = (self.degree + 1 if self._t else 0) if length is None else length
        get = self._t.get
        return [get(e, _FZERO) for e in range(n)]

    def is_rational(self) -> bool:
        return all(is_rational(c) for c in self._t.values())

    def has_integer_coeffs(self) -> bool:
        return all(is_rational(c) and c.denominator == 1 for c in self._t.values())

    def is_constant(self) -> bool:
        return not self._t or set(self._t) == {0}

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, GaussRat)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for e, c in o._t.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = coerce(s)
            else:
                t.pop(e, None)
        return Poly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c):
        c = coerce(c)
        if c == 0:
            return Poly._raw({})
        return Poly._raw({e: coerce(v * c) for e, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._t or not other._t:
            return Poly._raw({})
        if self._use_dense(other):
            return Poly._raw({e: c for e, c in enumerate(convolve(self.dense(), other.dense())) if c})
        if self.is_rational() and other.is_rational():
            return self._mul_sparse_int(other)
        t = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return Poly({e: c for e, c in t.items()})

    def _int_form(self):
        den = lcm(*(c.denominator for c in self._t.values()))
        return {e: c.numerator * (den // c.denominator) for e, c in self._t.items()}, den

    def _mul_sparse_int(self, other):
        # clearing denominators first keeps the inner loop on machine-friendly ints
        a, da = self._int_form()
        b, db = other._int_form()
        t = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        den = da * db
        return Poly._raw({e: Fraction(c, den) for e, c in t.items() if c})

    __rmul__ = __mul__

    def _use_dense(self, other) -> bool:
        a, b = len(self._t), len(other._t)
        if min(a, b) < DENSE_MIN_TERMS:
            return False
        if a < DENSE_MIN_FILL * (self.degree + 1) or b < DENSE_MIN_FILL * (other.degree + 1):
            return False
        return self.is_rational() and other.is_rational()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other: "Poly"):
        """Return ``(q, r)`` with ``self == q*other + r`` and ``deg r < deg other``."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        db = other.degree
        if self.degree < db:
            return Poly._raw({}), self
        r = self.dense()
        b = other.dense()
        inv = 1 / other.lc
        q = [Fraction(0)] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c == 0:
                continue
            t = c * inv
            q[i - db] = t
            for j in range(db + 1):
                if b[j] != 0:
                    r[i - db + j] -= t * b[j]
        return Poly.from_dense(q), Poly.from_dense(r[:db])

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        if not self._t:
            return self
        return self.scale(1 / self.lc)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd; ``gcd(0, 0) == 0``."""
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1].monic()
        return a.monic()

    def derivative(self) -> "Poly":
        return Poly._raw({e - 1: coerce(c * e) for e, c in self._t.items() if e})

    def __call__(self, x):
        return poly_eval(self, x)

    def compose(self, other: "Poly") -> "Poly":
        """Substitution ``self(other(z))`` by Horner's rule."""
        out = Poly._raw({})
        for c in reversed(self.dense()):
            out = out * other + c
        return out

    def shift(self, s) -> "Poly":
        """``p(z + s)``."""
        return self.compose(Poly({0: s, 1: 1}))

    def primitive(self):
        """Return ``(c, p)`` with ``self == c*p`` and ``p`` having coprime integer coefficients.

        For Gaussian coefficients the real and imaginary parts are made
        integral and coprime jointly.
        """
        if not self._t:
            return Fraction(1), self
        parts = []
        for c in self._t.values():
            if isinstance(c, GaussRat):
                parts.extend((c.re, c.im))
            else:
                parts.append(c)
        den = lcm(*(Fraction(x).denominator for x in parts))
        num = int_content(int(Fraction(x) * den) for x in parts)
        scale = Fraction(den, num)
        return 1 / scale, self.scale(scale)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var: str = "z") -> str:
        if not self._t:
            return "0"
        out = ""
        for e, c in self.items():
            neg = is_rational(c) and c < 0
            mag = -c if neg else c
            cs = format_coeff(mag)
            if isinstance(c, GaussRat):
                cs = f"({cs})"
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            if not mono:
                term = cs
            elif mag == 1:
                term = mono
            else:
                term = f"{cs}*{mono}"
            if not out:
                out = f"-{term}" if neg else term
            else:
                out += f" - {term}" if neg else f" + {term}"
        return out


Z = Poly({1: 1})


# --- operation-level API ----------------------------------------------------

def poly_arith(a: Poly, b: Poly, op: str):
    """Dispatch ``add``, ``sub``, ``mul``, ``divrem`` or ``gcd``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        return a.divmod(b)
    if op == "gcd":
        return a.gcd(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(p: Poly, point):
    """Exact evaluation at a rational or Gaussian-rational point."""
    point = coerce(point)
    if not p._t:
        return Fraction(0)
    items = p.items()
    # Horner over the exponent gaps keeps sparse inputs cheap
    acc = Fraction(0)
    prev = items[-1][0]
    for e, c in reversed(items):
        acc = acc * point ** (prev - e) + c
        prev = e
    return coerce(acc * point ** prev)


def integer_roots(p: Poly):
    """Sorted integer roots of a nonzero rational polynomial."""
    if not p:
        raise PreconditionError("integer_roots of the zero polynomial")
    if not p.is_rational():
        raise PreconditionError("integer_roots needs rational coefficients")
    _, q = p.primitive()
    low = min(q._t)
    roots = {0} if low > 0 else set()
    q = Poly._raw({e - low: c for e, c in q._t.items()})
    if q.degree == 0:
        return sorted(roots)
    c0 = abs(int(q.coeff(0)))
    for d in _divisors(c0):
        for cand in (d, -d):
            if poly_eval(q, cand) == 0:
                roots.add(cand)
    return sorted(roots)


def _divisors(n: int):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# --- text parser ------------------------------------------------------------

_TERM = re.compile(
    r"""^(?:(?P<coef>\([^()]*\)|[0-9/]+|i)(?:\*(?P<c2>i))?)?
        (?:\*?(?P<var>[a-hj-pr-z])(?:\^(?P<exp>\d+))?)?$""",
    re.X,
)


def _split_terms(s: str):
    terms, depth, start = [], 0, 0
    for pos, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and pos > start and s[pos - 1] not in "^*/":
            terms.append(s[start:pos])
            start = pos
    terms.append(s[start:])
    return [t for t in terms if t]


def parse_poly(text: str, var: str | None = None) -> Poly:
    """Parse ``"c0 + c1*z + c5*z^5"``; Gaussian coefficients go in parentheses.

    Any single lowercase letter other than ``i`` and ``q`` is accepted as
    the variable, but only one variable may appear.
    """
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    out = {}
    seen_var = var
    for raw in _split_terms(s):
        sign = 1
        body = raw
        while body and body[0] in "+-":
            if body[0] == "-":
                sign = -sign
            body = body[1:]
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        m = _TERM.match(body)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ParseError(f"cannot parse term {raw!r} in {text!r}")
        coef_txt = m.group("coef")
        if coef_txt is None:
            c = Fraction(1)
        else:
            inner = coef_txt[1:-1] if coef_txt.startswith("(") else coef_txt
            c = parse_coeff(inner)
        if m.group("c2"):
            c = c * GaussRat(0, 1)
        v = m.group("var")
        e = 0
        if v is not None:
            if seen_var is None:
                seen_var = v
            elif v != seen_var:
                raise ParseError(f"mixed variables {seen_var!r} and {v!r}")
            e = int(m.group("exp")) if m.group("exp") else 1
        out[e] = out.get(e, 0) + sign * c
    return Poly(out)
