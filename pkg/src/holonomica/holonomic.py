r"""Holonomic functions and P-recursive sequences.

An :class:`OdeAnnihilator` stores ``P_0, ..., P_k`` for

.. math:: P_k F^{(k)} + \dots + P_1 F' + P_0 F = 0,

and a :class:`Recurrence` stores ``p_0(n), ..., p_k(n)`` for

.. math:: p_k(n) a_{n+k} + \dots + p_0(n) a_n = 0 \quad (n \ge 0).

Closure under sum and product, and annihilators of algebraic-exponential
expressions, all go through one engine: a :class:`DModule` is a finite
Q(z)-basis closed under d/dz, and :func:`dmodule_annihilator` finds the
first Q(z)-linear dependence among an element and its derivatives.

Examples
--------
>>> from holonomica.poly import parse_poly
>>> exp_ode = OdeAnnihilator.from_polys([parse_poly("-1"), parse_poly("1")])
>>> print(ode_to_recurrence(exp_ode))
(1 + n)*a[n+1] - a[n] = 0
>>> print(annihilator_mul(exp_ode, exp_ode))
F' - 2*F = 0
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm

from .errors import Inconsistent, PreconditionError, TruncationTooShort, Undetermined
from .exact import GaussRat, coerce, is_rational
from .linalg import first_dependence
from .poly import Poly, Z, integer_roots
from .quad import DISC
from .ratfunc import RatFunc
from .series import TruncSeries

__all__ = [
    "OdeAnnihilator",
    "Recurrence",
    "DModule",
    "ode_to_recurrence",
    "recurrence_to_ode",
    "annihilator_add",
    "annihilator_mul",
    "dmodule_annihilator",
    "recurrence_unroll",
    "ode_series_check",
    "polynomial_annihilator",
    "initial_terms",
]

N = Z  # the index variable of recurrences is just another indeterminate


def _negate_for_sign(lc) -> bool:
    if isinstance(lc, GaussRat):
        return lc.re < 0 or (lc.re == 0 and lc.im < 0)
    return lc < 0


def normalize_coeffs(polys, strip_common_factor=True):
    """Make a coefficient list primitive and sign-normalized.

    With ``strip_common_factor`` the polynomial gcd of all entries is
    divided out as well; that preserves the power-series solutions of an
    ODE but would change the solution set of a recurrence, so recurrences
    only get the scalar normalization.
    """
    polys = list(polys)
    if strip_common_factor:
        g = Poly()
        for p in polys:
            g = g.gcd(p)
        if g.degree > 0:
            polys = [p.exact_div(g) for p in polys]
    parts = []
    for p in polys:
        for _, c in p.items():
            parts.extend((c.re, c.im) if isinstance(c, GaussRat) else (c,))
    if not parts:
        raise ValueError("all coefficients vanish")
    den = lcm(*(Fraction(x).denominator for x in parts))
    num = 0
    for x in parts:
        num = gcd(num, int(Fraction(x) * den))
    scale = Fraction(den, num)
    lc = next(p for p in reversed(polys) if p).lc
    if isinstance(lc, GaussRat) and lc.re == 0:
        # rotate a purely imaginary leading coefficient onto the real axis
        scale = scale * GaussRat(0, -1)
        lc = lc * GaussRat(0, -1)
    if _negate_for_sign(lc):
        scale = -scale
    return [p.scale(scale) for p in polys]


def _trim(polys):
    polys = list(polys)
    while polys and not polys[-1]:
        polys.pop()
    return polys


@dataclass(frozen=True)
class OdeAnnihilator:
    """``sum P[i] * F^(i) = 0``.

    ``zero=True`` marks the conventional annihilator of the zero function:
    it carries ``F' = 0`` as its equation (so the leading coefficient is
    never 0), but closure operations and the series check treat it as
    annihilating exactly 0.
    """

    P: tuple
    zero: bool = False

    def __post_init__(self):
        P = tuple(p if isinstance(p, Poly) else Poly.const(p) for p in self.P)
        if not P or not P[-1]:
            raise ValueError("leading ODE coefficient must be nonzero")
        object.__setattr__(self, "P", P)

    @classmethod
    def from_polys(cls, polys) -> "OdeAnnihilator":
        polys = _trim(polys)
        if not polys:
            raise ValueError("zero operator")
        return cls(tuple(normalize_coeffs(polys)))

    @classmethod
    def zero_function(cls) -> "OdeAnnihilator":
        return cls((Poly(), Poly.const(1)), zero=True)

    @property
    def order(self) -> int:
        return len(self.P) - 1

    @property
    def max_degree(self) -> int:
        return max(int(p.degree) for p in self.P if p)

    def normalized(self) -> "OdeAnnihilator":
        if self.zero:
            return self
        return OdeAnnihilator.from_polys(self.P)

    def apply(self, s: TruncSeries) -> TruncSeries:
        """``sum P_i s^(i)``, exact to order ``T - k``."""
        k = self.order
        T = s.T - k
        if T <= 0:
            raise TruncationTooShort("series shorter than the ODE order")
        acc = TruncSeries.zero(T)
        for i, p in enumerate(self.P):
            if p:
                acc = acc + s.nth_derivative(i).truncate(T).mul_poly(p)
        return acc

    def __str__(self):
        terms = []
        for i in range(self.order, -1, -1):
            p = self.P[i]
            if not p:
                continue
            f = "F" + ("'" * i if i <= 3 else f"^({i})")
            ptxt = str(p)
            neg = False
            if p.nterms == 1 and is_rational(p.lc) and p.lc < 0:
                neg, ptxt = True, str(-p)
            if ptxt == "1":
                body = f
            elif p.nterms == 1:
                body = f"{ptxt}*{f}"
            else:
                body = f"({ptxt})*{f}"
            if not terms:
                terms.append(f"-{body}" if neg else body)
            else:
                terms.append(f" - {body}" if neg else f" + {body}")
        return "".join(terms) + " = 0"


@dataclass(frozen=True)
class Recurrence:
    """``sum p[j](n) * a[n+j] = 0`` for every ``n >= 0``, with ``a[m] = 0`` for ``m < 0``.

    ``boundary`` lists extra linear constraints ``sum c * a[idx] = 0`` that
    came from low indices before the index shift in :func:`ode_to_recurrence`;
    each entry is a tuple of ``(index, coefficient)`` pairs.
    """

    p: tuple
    boundary: tuple = field(default=())

    CONVENTION = "holds for all n >= 0 with a[m] = 0 for m < 0"

    def __post_init__(self):
        p = tuple(q if isinstance(q, Poly) else Poly.const(q) for q in self.p)
        if len(p) < 2 or not p[-1]:
            raise ValueError("recurrence needs order >= 1 and nonzero leading coefficient")
        object.__setattr__(self, "p", p)

    @classmethod
    def from_polys(cls, polys, boundary=()) -> "Recurrence":
        polys = _trim(polys)
        if len(polys) < 2:
            raise ValueError("recurrence needs order >= 1")
        return cls(tuple(normalize_coeffs(polys, strip_common_factor=False)), tuple(boundary))

    @property
    def order(self) -> int:
        return len(self.p) - 1

    def normalized(self) -> "Recurrence":
        return Recurrence.from_polys(self.p, self.boundary)

    def leading_roots(self):
        """Nonnegative integer ``n`` where ``p_k(n) = 0``."""
        return [r for r in integer_roots(self.p[-1]) if r >= 0]

    def __str__(self):
        parts = []
        for j in range(self.order, -1, -1):
            q = self.p[j]
            if not q:
                continue
            a = "a[n]" if j == 0 else f"a[n+{j}]"
            txt = q.to_text("n")
            neg = False
            if q.nterms == 1 and is_rational(q.lc) and q.lc < 0:
                neg, txt = True, (-q).to_text("n")
            body = a if txt == "1" else (f"{txt}*{a}" if q.nterms == 1 else f"({txt})*{a}")
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts) + " = 0"


# --- conversions ----------------------------------------------------------------

def _falling(x: Poly, i: int) -> Poly:
    """``x (x-1) ... (x-i+1)`` for a polynomial ``x``."""
    out = Poly.const(1)
    for t in range(i):
        out = out * (x - t)
    return out


def _falling_int(x: int, i: int) -> int:
    out = 1
    for t in range(i):
        out *= x - t
    return out


def ode_to_recurrence(ode: OdeAnnihilator) -> Recurrence:
    """Coefficient extraction ``z^j F^(i) -> ff(n-j+i, i) a[n-j+i]``, shifted to offsets >= 0."""
    cij = [(i, j, c) for i, p in enumerate(ode.P) for j, c in p.items()]
    s = max(0, max(j - i for i, j, _ in cij))
    p = {}
    for i, j, c in cij:
        o = s + i - j
        p[o] = p.get(o, Poly()) + _falling(N + o, i).scale(c)
    k = max(o for o, q in p.items() if q)
    polys = [p.get(o, Poly()) for o in range(k + 1)]
    boundary = []
    for n in range(s):
        rel = {}
        for i, j, c in cij:
            idx = n - j + i
            if idx < 0:
                continue
            v = coerce(c * _falling_int(idx, i))
            if v:
                rel[idx] = coerce(rel.get(idx, 0) + v)
        rel = {idx: v for idx, v in rel.items() if v}
        if rel:
            boundary.append(tuple(sorted(rel.items())))
    if k == 0:
        # q(n) a_n = 0 has order 0; restate it as q(n+1) a_{n+1} = 0 plus the n = 0 instance
        q = polys[0]
        if q(0) != 0:
            boundary.insert(0, ((0, coerce(q(0))),))
        polys = [Poly(), q.shift(1)]
    return Recurrence.from_polys(polys, boundary)


def _falling_basis(q: Poly):
    """Coefficients ``b_s`` with ``q(m) = sum_s b_s m^(falling s)``."""
    if not q:
        return []
    d = int(q.degree)
    vals = [q(m) for m in range(d + 1)]
    out = []
    fact = 1
    for s in range(d + 1):
        if s:
            fact *= s
        out.append(coerce(vals[0] / fact))
        vals = [vals[t + 1] - vals[t] for t in range(len(vals) - 1)]
    return out


def _compose_dpow(t: int, ops):
    """Coefficients of ``D^t o sum_s ops[s] D^s``."""
    out = [Poly() for _ in range(len(ops) + t)]
    for s, c in enumerate(ops):
        deriv = c
        for u in range(t + 1):
            if not deriv:
                break
            out[s + t - u] = out[s + t - u] + deriv.scale(comb(t, u))
            deriv = deriv.derivative()
    return out


def recurrence_to_ode(rec: Recurrence) -> OdeAnnihilator:
    r"""ODE for every series whose coefficients satisfy ``rec``.

    With ``q_j(m) = p_j(m - j)`` and Euler's operator ``theta = z d/dz``,
    ``sum_j z^(k-j) q_j(theta) F`` equals a polynomial of degree < k built
    from the initial terms; when that polynomial can be nonzero it is
    removed by enough extra derivatives.
    """
    k = rec.order
    qs = [pj.shift(-j) for j, pj in enumerate(rec.p)]
    ops = {}
    for j, qj in enumerate(qs):
        for s, b in enumerate(_falling_basis(qj)):
            if b:
                ops[s] = ops.get(s, Poly()) + Poly.monomial(b, k - j + s)
    order = max(ops)
    L = [ops.get(s, Poly()) for s in range(order + 1)]
    rdeg = -1
    for m in range(k):
        r = Poly()
        for j in range(m + 1, k + 1):
            v = qs[j](m)
            if v:
                r = r + Poly.monomial(v, k - j + m)
        if r:
            rdeg = max(rdeg, int(r.degree))
    if rdeg >= 0:
        L = _compose_dpow(rdeg + 1, L)
    return OdeAnnihilator.from_polys(L)


# --- derivation modules -----------------------------------------------------------------

def _rf(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc._lift(x)


_RF0 = RatFunc.from_poly(Poly())
_RF1 = RatFunc.from_poly(Poly.const(1))


@dataclass(frozen=True)
class DModule:
    """Finite Q(z)-basis ``b_0..b_{r-1}`` with ``d/dz b_i = sum_j matrix[i][j] b_j``.

    ``element`` holds the coordinates of the function of interest.
    """

    matrix: tuple
    element: tuple

    def __post_init__(self):
        M = tuple(tuple(_rf(x) for x in row) for row in self.matrix)
        v = tuple(_rf(x) for x in self.element)
        r = len(M)
        if r < 1 or any(len(row) != r for row in M) or len(v) != r:
            raise ValueError("derivation matrix must be square and match the element")
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "element", v)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def derive(self, vec):
        """Coordinates of the derivative of ``sum vec[i] b_i``."""
        r = self.rank
        out = [v.derivative() for v in vec]
        for i, vi in enumerate(vec):
            if not vi:
                continue
            row = self.matrix[i]
            for j in range(r):
                if row[j]:
                    out[j] = out[j] + vi * row[j]
        return out

    def with_element(self, vec) -> "DModule":
        return DModule(self.matrix, tuple(vec))

    @classmethod
    def companion(cls, ode: OdeAnnihilator) -> "DModule":
        """Basis ``F, F', ..., F^(k-1)`` of a solution of ``ode``; element ``F``."""
        k = ode.order
        lead = RatFunc.from_poly(ode.P[-1])
        M = [[_RF0] * k for _ in range(k)]
        for i in range(k - 1):
            M[i][i + 1] = _RF1
        for j in range(k):
            M[k - 1][j] = -(RatFunc.from_poly(ode.P[j]) / lead)
        return cls(tuple(map(tuple, M)), tuple([_RF1] + [_RF0] * (k - 1)))

    @classmethod
    def quadratic(cls, a=0, b=1) -> "DModule":
        """Basis ``1, w`` with ``w' = z w / (z^2 - 1)``; element ``a + b w``."""
        M = ((_RF0, _RF0), (_RF0, RatFunc(Z, DISC)))
        return cls(M, (_rf(a), _rf(b)))

    def direct_sum(self, other: "DModule") -> "DModule":
        r, s = self.rank, other.rank
        M = [[_RF0] * (r + s) for _ in range(r + s)]
        for i in range(r):
            for j in range(r):
                M[i][j] = self.matrix[i][j]
        for i in range(s):
            for j in range(s):
                M[r + i][r + j] = other.matrix[i][j]
        return DModule(tuple(map(tuple, M)), self.element + other.element)

    def tensor(self, other: "DModule") -> "DModule":
        r, s = self.rank, other.rank
        n = r * s
        M = [[_RF0] * n for _ in range(n)]
        for i in range(r):
            for j in range(s):
                row = M[i * s + j]
                for i2 in range(r):
                    if self.matrix[i][i2]:
                        row[i2 * s + j] = row[i2 * s + j] + self.matrix[i][i2]
                for j2 in range(s):
                    if other.matrix[j][j2]:
                        row[i * s + j2] = row[i * s + j2] + other.matrix[j][j2]
        v = tuple(a * b for a in self.element for b in other.element)
        return DModule(tuple(map(tuple, M)), v)


def dmodule_annihilator(m: DModule) -> OdeAnnihilator:
    """First Q(z)-linear dependence among the element and its derivatives."""
    vec = list(m.element)
    if not any(vec):
        return OdeAnnihilator.zero_function()
    vectors = [vec]
    for _ in range(m.rank):
        vectors.append(m.derive(vectors[-1]))
        dep = first_dependence(vectors)
        if dep is not None:
            return OdeAnnihilator.from_polys(dep)
    raise AssertionError("no dependence within the module rank")  # pragma: no cover


def polynomial_annihilator(p: Poly) -> OdeAnnihilator:
    """Annihilator of a polynomial through the rank-one module spanned by 1."""
    return dmodule_annihilator(DModule(((_RF0,),), (RatFunc.from_poly(p),)))


def annihilator_add(f_ode: OdeAnnihilator, g_ode: OdeAnnihilator) -> OdeAnnihilator:
    if f_ode.zero:
        return g_ode.normalized()
    if g_ode.zero:
        return f_ode.normalized()
    m = DModule.companion(f_ode).direct_sum(DModule.companion(g_ode))
    return dmodule_annihilator(m)


def annihilator_mul(f_ode: OdeAnnihilator, g_ode: OdeAnnihilator) -> OdeAnnihilator:
    if f_ode.zero or g_ode.zero:
        return OdeAnnihilator.zero_function()
    m = DModule.companion(f_ode).tensor(DModule.companion(g_ode))
    return dmodule_annihilator(m)


# --- sequences and series -------------------------------------------------------------

def recurrence_unroll(rec: Recurrence, initial, N: int, supplied=None):
    """Forward-solve ``rec`` for ``a_0..a_N``.

    ``initial`` gives ``a_0, a_1, ...`` (at least ``order`` terms);
    ``supplied`` maps further indices to values, needed wherever the
    leading coefficient vanishes.  Every relation whose terms are all
    known is checked.
    """
    k = rec.order
    known = {i: coerce(v) for i, v in enumerate(initial)}
    for idx, v in (supplied or {}).items():
        known[int(idx)] = coerce(v)
    if any(i not in known for i in range(k)):
        raise PreconditionError(f"need the first {k} terms to unroll an order-{k} recurrence")
    last = max(N, max(known))
    for n in range(0, last - k + 1):
        t = n + k
        low = Fraction(0)
        for j in range(k):
            pj = rec.p[j]
            if pj:
                low = low + pj(n) * known[n + j]
        lead = rec.p[k](n)
        if t in known:
            if coerce(low + lead * known[t]) != 0:
                raise Inconsistent(n, t)
        elif lead == 0:
            if coerce(low) != 0:
                raise Inconsistent(n, t)
            raise Undetermined(t)
        else:
            known[t] = coerce(-low / lead)
    for rel in rec.boundary:
        if all(i in known for i, _ in rel) and coerce(sum((c * known[i] for i, c in rel), Fraction(0))) != 0:
            raise Inconsistent(-1, max(i for i, _ in rel))
    return [known[i] for i in range(N + 1)]


def initial_terms(rec: Recurrence, coeffs):
    """Prefix of ``coeffs`` long enough to unroll ``rec`` without gaps."""
    k = rec.order
    roots = rec.leading_roots()
    need = max(k, (max(roots) + k + 1) if roots else 0)
    coeffs = list(coeffs)
    return coeffs[:need] + [Fraction(0)] * max(0, need - len(coeffs))


def ode_series_check(ode: OdeAnnihilator, s: TruncSeries) -> bool:
    """Do all computable coefficients of ``ode(s)`` vanish?

    Coefficients of ``z^0 .. z^(T-k-maxdeg-1)`` are checked.
    """
    if ode.zero:
        return s.is_zero()
    k, d = ode.order, ode.max_degree
    window = s.T - k - d
    if window <= 0:
        raise TruncationTooShort(f"T={s.T} does not exceed order {k} + degree {d}")
    out = ode.apply(s)
    return all(c == 0 for c in out.coeffs[:window])
