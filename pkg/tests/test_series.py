from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from holonomica.errors import PreconditionError
from holonomica.exact import I, gauss
from holonomica.poly import Poly, parse_poly
from holonomica.quad import QuadElem, fundamental_unit, quad_conj, quad_mul, w_elem
from holonomica.ratfunc import RatFunc
from holonomica.series import TruncSeries, series_arith, series_exp, series_of_quad, series_W

from strategies import polys, series_no_constant


def S(text, T):
    return TruncSeries.from_poly(parse_poly(text), T)


def test_product_and_sum():
    assert series_arith(S("1 + z", 4), S("1 - z", 4), "mul") == S("1 - z^2", 4)
    e = series_exp(S("z", 10))
    assert series_arith(e, TruncSeries.zero(10), "add") == e


def test_exp_squared():
    e = series_exp(S("z", 6))
    assert list((e * e).coeffs) == [Fraction(2**n, factorial(n)) for n in range(6)]


def test_exp_examples():
    assert series_exp(TruncSeries.zero(5)) == TruncSeries.one(5)
    assert list(series_exp(S("z", 5)).coeffs) == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]
    assert list(series_exp(S("z + z^2", 4)).coeffs) == [1, 1, Fraction(3, 2), Fraction(7, 6)]


def test_exp_needs_zero_constant():
    with pytest.raises(PreconditionError):
        series_exp(S("1 + z", 5))


def test_mixed_truncation_takes_minimum():
    assert (S("1 + z", 4) + S("z^3", 7)).T == 4
    assert (S("1 + z", 9) * S("1 + z", 3)).T == 3


def test_W():
    W = series_W(6)
    assert list(W.coeffs) == [I, 0, gauss(0, Fraction(-1, 2)), 0, gauss(0, Fraction(-1, 8)), 0]
    assert W[0] == I
    assert W * W == S("z^2 - 1", 6)


@pytest.mark.parametrize("T", [8, 32, 128])
def test_W_squared_identity(T):
    W = series_W(T)
    assert (W * W + 1 - S("z^2", T)).is_zero()


def test_inverse_W():
    T = 40
    inv = series_W(T).inverse()
    assert inv[0] == -I
    assert inv * series_W(T) == TruncSeries.one(T)


def test_series_of_quad_examples():
    T = 4
    assert series_of_quad(w_elem(), 1, T) == series_W(T)
    expect = TruncSeries([-I, 1, gauss(0, Fraction(1, 2)), 0], T)
    assert series_of_quad(fundamental_unit(), -1, T) == expect
    norm = quad_mul(fundamental_unit(), quad_conj(fundamental_unit()))
    for branch in (1, -1):
        assert series_of_quad(norm, branch, T) == TruncSeries.one(T)


def test_series_of_quad_pole():
    u = QuadElem(RatFunc(Poly.const(1), parse_poly("z")), RatFunc.from_poly(Poly()), "ratfunc")
    with pytest.raises(PreconditionError):
        series_of_quad(u, 1, 5)


def test_from_ratfunc_geometric():
    s = TruncSeries.from_ratfunc(RatFunc(Poly.const(1), parse_poly("1 - z")), 50)
    assert list(s.coeffs) == [1] * 50


@given(series_no_constant(), series_no_constant())
def test_exp_is_homomorphism(s, t):
    assert series_exp(s + t) == series_exp(s) * series_exp(t)


def quads():
    return st.builds(
        lambda a, b, c, d: QuadElem(RatFunc(a, c), RatFunc(b, d), "ratfunc"),
        polys(3),
        polys(3),
        polys(2).filter(lambda p: p.coeff(0) != 0),
        polys(2).filter(lambda p: p.coeff(0) != 0),
    )


@given(quads(), quads(), st.sampled_from([1, -1]))
def test_series_of_quad_morphism(u, v, branch):
    T = 10
    assert series_of_quad(quad_mul(u, v), branch, T) == series_of_quad(u, branch, T) * series_of_quad(v, branch, T)


@given(series_no_constant())
def test_inverse_round_trip(s):
    t = s + 1
    assert t * t.inverse() == TruncSeries.one(t.T)
