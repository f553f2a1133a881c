"""Coefficient supports, the counting function N_f(x), and polynomiality certificates.

Everything here works on finite data.  A support profile observed up to a
horizon says nothing about coefficients past it, and a missing
polynomiality certificate is not evidence of transcendence.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError
from .holonomic import Recurrence, recurrence_unroll
from .poly import Poly
from .series import TruncSeries

__all__ = [
    "SupportProfile",
    "PolynomialityCertificate",
    "gap_count",
    "support_combine",
    "lacunarity_evidence",
    "polynomiality_certificate",
    "self_power_support",
    "certificate_bound",
]

POLYNOMIAL = "POLYNOMIAL"
NO_CERTIFICATE = "NO_CERTIFICATE"


@dataclass(frozen=True)
class SupportProfile:
    """Sorted exponents with nonzero coefficient, known up to ``horizon``.

    ``horizon=None`` means the support is complete (a polynomial).
    """

    exponents: tuple
    horizon: int | None = None

    def __post_init__(self):
        ex = tuple(int(e) for e in self.exponents)
        if any(b <= a for a, b in zip(ex, ex[1:])) or (ex and ex[0] < 0):
            raise ValueError("exponents must be strictly increasing and nonnegative")
        if self.horizon is not None and ex and ex[-1] > self.horizon:
            raise ValueError("exponent beyond horizon")
        object.__setattr__(self, "exponents", ex)

    @classmethod
    def of_poly(cls, p: Poly) -> "SupportProfile":
        return cls(tuple(p.support()), None)

    @classmethod
    def of_series(cls, s: TruncSeries) -> "SupportProfile":
        return cls(tuple(i for i, c in enumerate(s.coeffs) if c != 0), s.T - 1)

    @property
    def limit(self):
        return float("inf") if self.horizon is None else self.horizon

    def __len__(self):
        return len(self.exponents)


def self_power_support(horizon: int) -> SupportProfile:
    """Support ``{n^n : n >= 1}`` of ``sum z^(n^n) / (n^n)!`` up to ``horizon``."""
    out = []
    n = 1
    while n ** n <= horizon:
        out.append(n ** n)
        n += 1
    return SupportProfile(tuple(out), horizon)


def gap_count(p: SupportProfile, x: int) -> int:
    """``N_f(x)``: number of support elements ``<= x``."""
    if x > p.limit:
        raise PreconditionError(f"x={x} lies beyond the horizon {p.horizon}")
    return bisect.bisect_right(p.exponents, x)


@dataclass(frozen=True)
class InequalityCheck:
    x: int
    n_result: int
    n_f: int
    n_g: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.n_result <= self.bound


@dataclass(frozen=True)
class CombineResult:
    op: str
    bound: SupportProfile
    checks: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def support_combine(p: SupportProfile, q: SupportProfile, op: str, xs=None, actual: SupportProfile | None = None):
    """Upper-bound support of ``f+g`` (union) or ``f*g`` (sumset), with an inequality report.

    The report compares ``N`` of ``actual`` (if given, e.g. the true support
    of the sum after cancellation) or else of the bound itself against
    ``N_f + N_g`` resp. ``N_f * N_g`` at each ``x`` in ``xs``.
    """
    if op not in ("add", "mul"):
        raise ValueError(f"unknown op {op!r}")
    hs = [h for h in (p.horizon, q.horizon) if h is not None]
    horizon = min(hs) if hs else None
    lim = float("inf") if horizon is None else horizon
    if op == "add":
        ex = sorted(set(e for e in p.exponents + q.exponents if e <= lim))
    else:
        ex = sorted({a + b for a in p.exponents for b in q.exponents if a + b <= lim})
    bound = SupportProfile(tuple(ex), horizon)
    target = actual if actual is not None else bound
    if xs is None:
        xs = sorted(set(ex) | ({horizon} if horizon is not None else set()))
    checks = []
    for x in xs:
        nf, ng = gap_count(p, x), gap_count(q, x)
        b = nf + ng if op == "add" else nf * ng
        checks.append(InequalityCheck(x, gap_count(target, x), nf, ng, b))
    return CombineResult(op, bound, tuple(checks))


@dataclass(frozen=True)
class EvidenceRow:
    x: int
    count: int
    scale: float
    ratio: float

    @property
    def exceeds_one(self) -> bool:
        return self.ratio > 1


@dataclass(frozen=True)
class EvidenceReport:
    eps: Fraction
    rows: tuple
    label: str = "finite-horizon evidence, not a proof"

    @property
    def monotone(self) -> bool:
        return all(a.count <= b.count for a, b in zip(self.rows, self.rows[1:]))


def lacunarity_evidence(p: SupportProfile, eps, xs) -> EvidenceReport:
    """Tabulate ``N_f(x)`` against ``x^eps`` on a grid (floating ratio, for reading only)."""
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    rows = []
    for x in sorted(xs):
        n = gap_count(p, x)
        scale = float(x) ** float(eps) if x > 0 else 0.0
        if scale:
            ratio = n / scale
        else:
            ratio = float("inf") if n else 0.0
        rows.append(EvidenceRow(x, n, scale, ratio))
    return EvidenceReport(eps, tuple(rows))


@dataclass(frozen=True)
class PolynomialityCertificate:
    verdict: str
    horizon: int
    bound: int
    degree: int | None = None
    window_start: int | None = None

    @property
    def is_polynomial(self) -> bool:
        return self.verdict == POLYNOMIAL


def certificate_bound(rec: Recurrence) -> int:
    """Index past which the leading coefficient of ``rec`` has no root."""
    roots = rec.leading_roots()
    top = roots[-1] if roots else -1
    return 1 + max(rec.order, 1 + top)


def polynomiality_certificate(rec: Recurrence, initial, horizon: int = 500, supplied=None):
    """Decide eventual vanishing from ``horizon`` unrolled terms.

    A window of ``order`` consecutive zeros starting at ``m >= B`` forces
    every later term to vanish, because ``p_k(n) != 0`` for ``n >= B``.
    """
    k = rec.order
    B = certificate_bound(rec)
    a = recurrence_unroll(rec, initial, horizon, supplied)
    run = 0
    for j, v in enumerate(a):
        run = run + 1 if v == 0 else 0
        m = j - k + 1
        if run >= k and m >= B:
            nz = [i for i in range(m) if a[i] != 0]
            return PolynomialityCertificate(POLYNOMIAL, horizon, B, nz[-1] if nz else None, m)
    return PolynomialityCertificate(NO_CERTIFICATE, horizon, B)
