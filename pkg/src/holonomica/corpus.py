"""A small fixed corpus of holonomic functions with independent reference series.

The reference series are computed from closed forms or elementary
coefficient formulas, never from the annihilator itself, so they can serve
as oracles for the conversion and closure machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .holonomic import OdeAnnihilator, initial_terms, ode_to_recurrence, polynomial_annihilator, recurrence_unroll
from .pell import pell_generate
from .poly import Poly
from .quad import DISC
from .ratfunc import RatFunc
from .series import TruncSeries, series_exp, series_W

__all__ = ["CorpusEntry", "corpus", "corpus_entry"]

_Z = Poly({1: 1})


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    ode: OdeAnnihilator
    reference: Callable[[int], TruncSeries]

    def series(self, T: int) -> TruncSeries:
        return self.reference(T)

    def initial(self, n: int = 16):
        """Leading coefficients, enough to start the recurrence."""
        rec = ode_to_recurrence(self.ode)
        return initial_terms(rec, self.reference(max(n, 2 * rec.order + 16)).coeffs)

    def unrolled(self, T: int) -> TruncSeries:
        rec = ode_to_recurrence(self.ode)
        return TruncSeries(recurrence_unroll(rec, self.initial(), T - 1), T)


def _airy(T):
    # a_{n+2} (n+2)(n+1) = a_{n-1}, a_0 = 1, a_1 = 0
    a = [Fraction(0)] * max(T, 3)
    a[0] = Fraction(1)
    for n in range(0, T - 2):
        a[n + 2] = (a[n - 1] if n >= 1 else Fraction(0)) / ((n + 2) * (n + 1))
    return TruncSeries(a[:T], T)


def _ode(*polys):
    return OdeAnnihilator.from_polys([p if isinstance(p, Poly) else Poly.const(p) for p in polys])


@lru_cache(maxsize=None)
def corpus():
    x7, y7 = pell_generate(7).x, pell_generate(7).y
    return (
        CorpusEntry("exp", _ode(-1, 1), lambda T: series_exp(TruncSeries.from_poly(_Z, T))),
        CorpusEntry(
            "geometric",
            _ode(-1, Poly({0: 1, 1: -1})),
            lambda T: TruncSeries.from_ratfunc(RatFunc(Poly.const(1), Poly({0: 1, 1: -1})), T),
        ),
        CorpusEntry("airy", _ode(-_Z, 0, 1), _airy),
        CorpusEntry("constant", _ode(0, 1), lambda T: TruncSeries.from_poly(Poly.const(3), T)),
        CorpusEntry("x7", polynomial_annihilator(x7), lambda T: TruncSeries.from_poly(x7, T)),
        CorpusEntry("y7", polynomial_annihilator(y7), lambda T: TruncSeries.from_poly(y7, T)),
        CorpusEntry("w_branch", _ode(-_Z, DISC), series_W),
    )


def corpus_entry(name: str) -> CorpusEntry:
    for e in corpus():
        if e.name == name:
            return e
    raise KeyError(name)

