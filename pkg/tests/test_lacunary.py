import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from holonomica.errors import PreconditionError, Undetermined
from holonomica.holonomic import Recurrence, initial_terms, ode_to_recurrence, polynomial_annihilator, recurrence_unroll
from holonomica.lacunary import (
    NO_CERTIFICATE,
    POLYNOMIAL,
    SupportProfile,
    gap_count,
    lacunarity_evidence,
    polynomiality_certificate,
    self_power_support,
    support_combine,
)
from holonomica.pell import pell_generate
from holonomica.poly import Poly, parse_poly

from strategies import sparse_polys


def rec(*texts):
    return Recurrence.from_polys([parse_poly(t, "n") for t in texts])


FIXTURE = rec("3 - n", "n - 3")
EXP_REC = rec("-1", "n + 1")


def test_gap_count_examples():
    assert gap_count(SupportProfile.of_poly(parse_poly("1 + z^5")), 10) == 2
    assert gap_count(self_power_support(1000), 100) == 3
    assert gap_count(SupportProfile((0, 3)), 0) == 1
    assert gap_count(SupportProfile((3,)), 0) == 0


def test_gap_count_past_horizon():
    with pytest.raises(PreconditionError):
        gap_count(self_power_support(50), 51)


def test_self_power_support_enumeration():
    assert self_power_support(10**6).exponents == (1, 4, 27, 256, 3125, 46656, 823543)


def test_combine_examples():
    f, g = SupportProfile.of_poly(parse_poly("1 + z")), SupportProfile.of_poly(parse_poly("1 - z"))
    exact_sum = SupportProfile.of_poly(parse_poly("1 + z") + parse_poly("1 - z"))
    res = support_combine(f, g, "add", [10], actual=exact_sum)
    assert res.checks[0].n_result == 1 and res.checks[0].bound == 4 and res.ok

    res = support_combine(f, f, "mul", [10])
    assert res.bound.exponents == (0, 1, 2)
    assert res.checks[0].n_result == 3 and res.checks[0].bound == 4

    p = self_power_support(1000)
    res = support_combine(p, p, "add", [100])
    assert res.checks[0].n_result <= 6 and res.ok


def test_evidence_self_power():
    rep = lacunarity_evidence(self_power_support(1000), Fraction(1, 2), [10, 100, 1000])
    # 1, 4, 27 and 256 are all <= 1000
    assert [r.count for r in rep.rows] == [2, 3, 4]
    assert rep.monotone and "not a proof" in rep.label


def test_evidence_full_support():
    full = SupportProfile(tuple(range(101)), 100)
    (row,) = lacunarity_evidence(full, Fraction(1, 2), [100]).rows
    assert row.count == 101
    assert math.isclose(row.ratio, 10.1) and row.exceeds_one


def test_evidence_empty():
    rep = lacunarity_evidence(SupportProfile((), 100), Fraction(1, 3), [1, 10, 100])
    assert all(r.count == 0 and r.ratio == 0 for r in rep.rows)


def test_certificate_fixture():
    cert = polynomiality_certificate(FIXTURE, [1], 50, {4: 0})
    assert (cert.verdict, cert.degree, cert.window_start, cert.bound) == (POLYNOMIAL, 3, 5, 5)


def test_certificate_needs_supplied_term():
    with pytest.raises(Undetermined):
        polynomiality_certificate(FIXTURE, [1], 50)


def test_certificate_exp():
    cert = polynomiality_certificate(EXP_REC, [1], 100)
    assert cert.verdict == NO_CERTIFICATE and cert.horizon == 100 and cert.degree is None


def test_certificate_x7_pipeline():
    x7 = pell_generate(7).x
    r = ode_to_recurrence(polynomial_annihilator(x7))
    cert = polynomiality_certificate(r, initial_terms(r, x7.dense()), 60)
    assert cert.is_polynomial and cert.degree == 7


@given(sparse_polys(max_exp=40).filter(bool))
def test_certified_degree_matches_truth(p):
    r = ode_to_recurrence(polynomial_annihilator(p))
    cert = polynomiality_certificate(r, initial_terms(r, p.dense()), 120)
    assert cert.is_polynomial and cert.degree == p.degree
    # soundness: twice the horizon shows nothing past the degree
    a = recurrence_unroll(r, initial_terms(r, p.dense()), 240)
    assert all(c == 0 for c in a[int(p.degree) + 1:])


@given(sparse_polys(max_exp=200), sparse_polys(max_exp=200), st.sampled_from([10, 100, 1000]))
def test_sub_additive_and_sub_multiplicative(f, g, x):
    pf, pg = SupportProfile.of_poly(f), SupportProfile.of_poly(g)
    s = support_combine(pf, pg, "add", [x], actual=SupportProfile.of_poly(f + g))
    m = support_combine(pf, pg, "mul", [x], actual=SupportProfile.of_poly(f * g))
    assert s.ok and m.ok


@given(st.lists(st.integers(0, 500), unique=True, max_size=30))
def test_gap_count_monotone(ex):
    p = SupportProfile(tuple(sorted(ex)), 500)
    counts = [gap_count(p, x) for x in range(0, 501, 7)]
    assert counts == sorted(counts)
    assert gap_count(p, 500) == len(p)


def test_profile_invariants():
    with pytest.raises(ValueError):
        SupportProfile((3, 2))
    with pytest.raises(ValueError):
        SupportProfile((1, 9), 5)

