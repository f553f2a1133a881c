"""JSON encoders and decoders for every value type.

Decoders accept the canonical JSON form and, for polynomials, the text
form ``"c0 + c1*z + c5*z^5"``.  Encoders always emit the canonical form,
so ``encode(decode(doc)) == doc`` for canonical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .denef import DenefWitness
from .errors import ParseError
from .exact import format_coeff, parse_coeff
from .holonomic import OdeAnnihilator, Recurrence
from .lacunary import PolynomialityCertificate, SupportProfile
from .pell import EntirePellData, PellWitness
from .poly import Poly, parse_poly
from .quad import QuadElem
from .ratfunc import RatFunc
from .series import TruncSeries


def dumps(doc, pretty=True) -> str:
    if pretty:
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _require(doc, *keys):
    if not isinstance(doc, dict):
        raise ParseError(f"expected a JSON object with keys {keys}")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise ParseError(f"missing keys {missing}")


def _int(v, name):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"{name} must be an integer")
    try:
        return int(v)
    except ValueError as exc:
        raise ParseError(f"{name} must be an integer") from exc


# -- polynomials ------------------------------------------------------------

def poly_to_json(p: Poly):
    return {"coeffs": [[e, format_coeff(c)] for e, c in p.items()]}


def poly_from_json(doc, var=None) -> Poly:
    if isinstance(doc, str):
        return parse_poly(doc, var)
    if isinstance(doc, (int,)) and not isinstance(doc, bool):
        return Poly.const(doc)
    _require(doc, "coeffs")
    terms = {}
    try:
        for e, c in doc["coeffs"]:
            e = _int(e, "exponent")
            if e < 0 or e in terms:
                raise ParseError(f"bad or repeated exponent {e}")
            terms[e] = parse_coeff(str(c))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed coeffs list: {exc}") from exc
    return Poly(terms)


def ratfunc_to_json(r: RatFunc):
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def ratfunc_from_json(doc) -> RatFunc:
    if isinstance(doc, dict) and "num" in doc:
        den = poly_from_json(doc.get("den", "1"))
        if not den:
            raise ParseError("zero denominator")
        return RatFunc(poly_from_json(doc["num"]), den)
    return RatFunc.from_poly(poly_from_json(doc))


def quad_to_json(u: QuadElem):
    enc = (lambda r: poly_to_json(r.num)) if u.mode == "poly" else ratfunc_to_json
    return {"a": enc(u.a), "b": enc(u.b), "mode": u.mode}


def quad_from_json(doc) -> QuadElem:
    _require(doc, "a", "b")
    a, b = ratfunc_from_json(doc["a"]), ratfunc_from_json(doc["b"])
    mode = doc.get("mode")
    if mode is None:
        return QuadElem.make(a, b)
    try:
        return QuadElem(a, b, mode)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# -- holonomic objects ---------------------------------------------------------

def ode_to_json(ode: OdeAnnihilator):
    doc = {"order": ode.order, "P": [poly_to_json(p) for p in ode.P]}
    if ode.zero:
        doc["zero"] = True
    return doc


def ode_from_json(doc) -> OdeAnnihilator:
    _require(doc, "P")
    P = [poly_from_json(p, "z") for p in doc["P"]]
    if "order" in doc and _int(doc["order"], "order") != len(P) - 1:
        raise ParseError("order does not match the number of coefficients")
    try:
        return OdeAnnihilator(tuple(P), bool(doc.get("zero", False)))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def rec_to_json(rec: Recurrence):
    return {
        "order": rec.order,
        "p": [poly_to_json(q) for q in rec.p],
        "boundary": [[[i, format_coeff(c)] for i, c in rel] for rel in rec.boundary],
    }


def rec_from_json(doc) -> Recurrence:
    _require(doc, "p")
    p = [poly_from_json(q, "n") for q in doc["p"]]
    if "order" in doc and _int(doc["order"], "order") != len(p) - 1:
        raise ParseError("order does not match the number of coefficients")
    try:
        boundary = tuple(
            tuple((_int(i, "index"), parse_coeff(str(c))) for i, c in rel) for rel in doc.get("boundary", [])
        )
        return Recurrence(tuple(p), boundary)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def series_to_json(s: TruncSeries, theta=None):
    doc = {"T": s.T, "a": [format_coeff(c) for c in s.coeffs]}
    if theta:
        doc["theta"] = format_coeff(Fraction(theta))
    return doc


def series_from_json(doc) -> TruncSeries:
    _require(doc, "a")
    theta = Fraction(doc["theta"]) if doc.get("theta") else None
    a = [parse_coeff(str(c), theta) for c in doc["a"]]
    T = _int(doc.get("T", len(a)), "T")
    if T != len(a):
        raise ParseError(f"T={T} but {len(a)} coefficients given")
    return TruncSeries(a, T)


def values_from_json(doc, theta=None):
    if not isinstance(doc, list):
        raise ParseError("expected a JSON list of coefficients")
    return [parse_coeff(str(c), theta) for c in doc]


# -- Pell / lacunary / Denef -------------------------------------------------------------

def pell_to_json(w: PellWitness):
    return {"epsilon": w.epsilon, "n": w.n, "x": poly_to_json(w.x), "y": poly_to_json(w.y)}


def pell_from_json(doc) -> PellWitness:
    _require(doc, "n", "x", "y")
    return PellWitness(_int(doc.get("epsilon", 1), "epsilon"), _int(doc["n"], "n"),
                       poly_from_json(doc["x"]), poly_from_json(doc["y"]))


def entire_to_json(d: EntirePellData):
    doc = {
        "epsilon": d.epsilon,
        "n": d.n,
        "h": poly_to_json(d.h),
        "T": d.T,
        "theta": format_coeff(d.theta),
        "f": series_to_json(d.f, d.theta),
        "g": series_to_json(d.g, d.theta),
    }
    if d.theta:
        doc["q"] = f"exp(i*{format_coeff(d.theta)})"
    return doc


def support_to_json(p: SupportProfile):
    return {"exponents": list(p.exponents), "horizon": p.horizon}


def support_from_json(doc) -> SupportProfile:
    _require(doc, "exponents")
    h = doc.get("horizon")
    try:
        return SupportProfile(tuple(_int(e, "exponent") for e in doc["exponents"]),
                              None if h is None else _int(h, "horizon"))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def certificate_to_json(c: PolynomialityCertificate):
    return {"verdict": c.verdict, "degree": c.degree, "m": c.window_start, "B": c.bound, "H": c.horizon}


def denef_to_json(w: DenefWitness):
    return {"t": w.t, "pell": pell_to_json(w.pell), "f": poly_to_json(w.f)}


def denef_from_json(doc) -> DenefWitness:
    _require(doc, "t", "pell", "f")
    return DenefWitness(_int(doc["t"], "t"), pell_from_json(doc["pell"]), poly_from_json(doc["f"]))
