import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from holonomica.denef import denef_witness, eval_at_one_divide, transcript, witness_verify
from holonomica.errors import NotDivisible
from holonomica.pell import pell_classify, pell_generate
from holonomica.poly import Poly, parse_poly, poly_eval

from strategies import polys, rationals


def test_divide_examples():
    assert eval_at_one_divide(parse_poly("z^2"), 1) == parse_poly("z + 1")
    assert eval_at_one_divide(Poly(), 0) == Poly()
    with pytest.raises(NotDivisible) as info:
        eval_at_one_divide(parse_poly("z"), 0)
    assert info.value.remainder == 1


@pytest.mark.parametrize("t, y, f", [(0, "0", "0"), (2, "2*z", "2"), (3, "4*z^2 - 1", "4*z + 4")])
def test_witness_examples(t, y, f):
    w = denef_witness(t)
    assert w.pell.y == parse_poly(y)
    assert w.f == parse_poly(f)


def test_verify_by_construction():
    assert witness_verify(denef_witness(5))


def test_tamper_f():
    w = denef_witness(5)
    rep = witness_verify(dataclasses.replace(w, f=w.f + 1))
    assert not rep and rep.reasons == ("divisibility",)


def test_tamper_y():
    w = denef_witness(5)
    rep = witness_verify(dataclasses.replace(w, pell=pell_generate(6)))
    assert not rep and "eval" in rep.reasons


def test_tamper_pell():
    w = denef_witness(4)
    bad = dataclasses.replace(w.pell, x=w.pell.x + 1)
    assert witness_verify(dataclasses.replace(w, pell=bad)).reasons == ("pell",)


def test_transcript_lines():
    lines = transcript(denef_witness(3))
    assert lines[0] == "t = 3"
    assert any("(z - 1)*f = y - t  [ok]" in ln for ln in lines)
    assert lines[-1] == "verdict: witness verified"


@given(st.integers(-100, 100))
def test_witnesses_verify(t):
    w = denef_witness(t)
    assert witness_verify(w)
    assert w.f.has_integer_coeffs()
    # the only epsilon=+1 solution with y(1)=t is y_t
    assert pell_classify(w.pell.x, w.pell.y) == (1, t)


@given(polys(8))
def test_divide_succeeds_at_value(y):
    f = eval_at_one_divide(y, poly_eval(y, 1))
    assert f * parse_poly("z - 1") == y - poly_eval(y, 1)


@given(polys(8), rationals.filter(bool))
def test_divide_fails_off_value(y, delta):
    with pytest.raises(NotDivisible) as info:
        eval_at_one_divide(y, poly_eval(y, 1) + delta)
    assert info.value.remainder == -delta
