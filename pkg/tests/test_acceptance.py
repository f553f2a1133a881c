"""Acceptance suite: one test per criterion, each with its runtime bound.

Run directly (``python3 tests/test_acceptance.py``) for a PASS/FAIL line per
criterion, or through pytest, where the same lines appear in the terminal
summary.
"""

import itertools
import os
import random
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from acceptance_log import RESULTS  # noqa: E402

from holonomica.corpus import corpus  # noqa: E402
from holonomica.denef import denef_witness, witness_verify  # noqa: E402
from holonomica.holonomic import (  # noqa: E402
    OdeAnnihilator,
    Recurrence,
    annihilator_add,
    annihilator_mul,
    initial_terms,
    ode_series_check,
    ode_to_recurrence,
    recurrence_to_ode,
)
from holonomica.lacunary import (  # noqa: E402
    NO_CERTIFICATE,
    SupportProfile,
    gap_count,
    polynomiality_certificate,
    self_power_support,
    support_combine,
)
from holonomica.pell import (  # noqa: E402
    pell_classify,
    pell_general_solution,
    pell_generate,
    pell_holonomic_witness,
    pell_verify_poly,
)
from holonomica.poly import Poly, parse_poly, poly_eval  # noqa: E402
from holonomica.pell import PellWitness  # noqa: E402
import dataclasses  # noqa: E402


def crit_1():
    for n in range(-200, 201):
        w = pell_generate(n)
        if not (pell_verify_poly(w.x, w.y) and poly_eval(w.y, 1) == n and w.x.degree == abs(n)):
            return False, f"n={n} fails"
        if not (w.x.has_integer_coeffs() and w.y.has_integer_coeffs()):
            return False, f"n={n} not integral"
    return True, "Pell sweep |n| <= 200"


def crit_2():
    for n in range(-100, 101):
        w = pell_generate(n)
        for eps in (1, -1):
            if pell_classify(w.x.scale(eps), w.y) != (eps, n):
                return False, f"classify fails at eps={eps}, n={n}"
    return True, "classify round trip |n| <= 100, eps = +-1"


def crit_3():
    T = 120
    for e in corpus():
        rec = ode_to_recurrence(e.ode)
        back = recurrence_to_ode(rec)
        s = e.unrolled(T)
        if s != e.series(T):
            return False, f"{e.name}: unrolled series differs from the reference"
        if not ode_series_check(back, s):
            return False, f"{e.name}: round-trip ODE fails the series check"
    return True, f"conversion round trip on {len(corpus())} corpus entries, T=120"


def crit_4():
    T = 120
    pairs = list(itertools.combinations_with_replacement(corpus(), 2))
    for a, b in pairs:
        add = annihilator_add(a.ode, b.ode)
        mul = annihilator_mul(a.ode, b.ode)
        if add.order > a.ode.order + b.ode.order or mul.order > a.ode.order * b.ode.order:
            return False, f"order bound violated for {a.name}, {b.name}"
        if not ode_series_check(add, a.series(T) + b.series(T)):
            return False, f"sum annihilator fails for {a.name} + {b.name}"
        if not ode_series_check(mul, a.series(T) * b.series(T)):
            return False, f"product annihilator fails for {a.name} * {b.name}"
    return True, f"closure soundness on {len(pairs)} pairs, T=120"


H_VALUES = ["0", "1", "z", "z^2", "z + z^3"]


def crit_5():
    count = 0
    for n in range(-5, 6):
        for h in H_VALUES:
            hp = parse_poly(h)
            data = pell_general_solution(1, n, hp, 120)
            if not data.identity_residual().is_zero():
                return False, f"Pell identity fails for n={n}, h={h}"
            f_ode, g_ode = pell_holonomic_witness(1, n, hp, 120)
            if not (ode_series_check(f_ode, data.f) and ode_series_check(g_ode, data.g)):
                return False, f"witness fails for n={n}, h={h}"
            count += 1
    return True, f"entire solutions and witnesses for {count} (n, h) pairs, T=120"


def _certify(ode, p, horizon=500):
    rec = ode_to_recurrence(ode)
    return polynomiality_certificate(rec, initial_terms(rec, p.dense()), horizon)


def crit_6():
    x3, x7, y10 = pell_generate(3).x, pell_generate(7).x, pell_generate(10).y
    cases = [
        ("x_3", pell_holonomic_witness(1, 3, Poly())[0], x3),
        ("x_7", pell_holonomic_witness(1, 7, Poly())[0], x7),
        ("y_10", pell_holonomic_witness(1, 10, Poly())[1], y10),
    ]
    # 1 + z + z^2 + z^3 through closure: z^j is killed by z F' - j F
    acc = None
    for j in range(4):
        mono = OdeAnnihilator.from_polys([Poly.const(-j), parse_poly("z")])
        acc = mono if acc is None else annihilator_add(acc, mono)
    cases.append(("1+z+z^2+z^3", acc, parse_poly("1 + z + z^2 + z^3")))
    for name, ode, p in cases:
        cert = _certify(ode, p)
        if not (cert.is_polynomial and cert.degree == p.degree):
            return False, f"{name}: got {cert.verdict} degree {cert.degree}, want {p.degree}"
    exp_rec = Recurrence.from_polys([Poly.const(-1), parse_poly("n + 1", "n")])
    cert = polynomiality_certificate(exp_rec, [1], 500)
    if cert.verdict != NO_CERTIFICATE or cert.horizon != 500:
        return False, "exp received a certificate"
    return True, "POLYNOMIAL for x_3, x_7, y_10, 1+z+z^2+z^3; NO_CERTIFICATE(500) for exp"


def crit_7():
    rng = random.Random(20261017)

    def sparse():
        k = rng.randint(0, 8)
        return Poly({e: rng.choice([-3, -2, -1, 1, 2, 3]) for e in rng.sample(range(1001), k)})

    for _ in range(1000):
        f, g = sparse(), sparse()
        pf, pg = SupportProfile.of_poly(f), SupportProfile.of_poly(g)
        xs = [10, 100, 1000]
        s = support_combine(pf, pg, "add", xs, actual=SupportProfile.of_poly(f + g))
        m = support_combine(pf, pg, "mul", xs, actual=SupportProfile.of_poly(f * g))
        if not (s.ok and m.ok):
            return False, f"inequality fails for f={f}, g={g}"
    if gap_count(self_power_support(1000), 100) != 3:
        return False, "N(100) for {n^n} is not 3"
    return True, "1000 random pairs at x in {10, 100, 1000}; N(100) = 3 for {n^n}"


def crit_8():
    for t in range(-100, 101):
        w = denef_witness(t)
        if not witness_verify(w) or not w.f.has_integer_coeffs():
            return False, f"witness for t={t} fails"
    w = denef_witness(5)
    r1 = witness_verify(dataclasses.replace(w, f=w.f + 1))
    r2 = witness_verify(dataclasses.replace(w, pell=pell_generate(6)))
    bad_x = PellWitness(1, 5, w.pell.x + 1, w.pell.y)
    r3 = witness_verify(dataclasses.replace(w, pell=bad_x))
    if r1 or r1.reasons != ("divisibility",):
        return False, f"f+1 tamper: {r1}"
    if r2 or "eval" not in r2.reasons:
        return False, f"y_6 tamper: {r2}"
    if r3 or "pell" not in r3.reasons:
        return False, f"x tamper: {r3}"
    return True, "Denef witnesses |t| <= 100 and tamper detection"


CRITERIA = {
    1: (crit_1, 5),
    2: (crit_2, 5),
    3: (crit_3, 10),
    4: (crit_4, 60),
    5: (crit_5, 120),
    6: (crit_6, 30),
    7: (crit_7, 10),
    8: (crit_8, 5),
}


def run_criterion(key):
    fn, limit = CRITERIA[key]
    t0 = time.perf_counter()
    ok, note = fn()
    secs = time.perf_counter() - t0
    if ok and secs > limit:
        ok, note = False, f"{note}; took {secs:.1f}s > {limit}s"
    RESULTS[key] = (ok, secs, note)
    return ok, note


@pytest.mark.parametrize("key", sorted(CRITERIA))
def test_criterion(key):
    ok, note = run_criterion(key)
    assert ok, note


if __name__ == "__main__":
    failed = 0
    for key in sorted(CRITERIA):
        ok, note = run_criterion(key)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {note} ({RESULTS[key][1]:.2f}s)")
    sys.exit(1 if failed else 0)
