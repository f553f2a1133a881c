"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from holonomica.poly import Poly
from holonomica.series import TruncSeries

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def polys(draw, max_degree=6, coeffs=rationals):
    dense = draw(st.lists(coeffs, max_size=max_degree + 1))
    return Poly.from_dense(dense)


@st.composite
def sparse_polys(draw, max_exp=60, max_terms=6, coeffs=small_ints):
    exps = draw(st.lists(st.integers(0, max_exp), max_size=max_terms, unique=True))
    return Poly({e: draw(coeffs.filter(bool)) for e in exps})


@st.composite
def nonzero_polys(draw, max_degree=5):
    return draw(polys(max_degree).filter(bool))


@st.composite
def series_no_constant(draw, T=12):
    tail = draw(st.lists(rationals, min_size=T - 1, max_size=T - 1))
    return TruncSeries([Fraction(0)] + tail, T)
