"""Command-line interface.

Every argument that names an object accepts a file path, ``-`` for standard
input, or the JSON (or polynomial text) inline.  Results go to standard
output as canonical JSON, diagnostics to standard error.

Exit codes: 0 success, 1 verified false, 2 malformed input,
3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import jsonio as J
from .config import MAX_DEGREE_ENV, defaults
from .denef import denef_witness, eval_at_one_divide, transcript, witness_verify
from .errors import DegreeCapExceeded, ParseError, PreconditionError
from .holonomic import (
    annihilator_add,
    annihilator_mul,
    ode_series_check,
    ode_to_recurrence,
    recurrence_to_ode,
    recurrence_unroll,
)
from .lacunary import gap_count, lacunarity_evidence, polynomiality_certificate, support_combine
from .pell import pell_classify, pell_general_solution, pell_generate, pell_holonomic_witness, pell_verify_poly
from .poly import Poly
from .series import TruncSeries, series_exp, series_W

EXIT_OK, EXIT_FALSE, EXIT_MALFORMED, EXIT_PRECONDITION = 0, 1, 2, 3

log = logging.getLogger("holonomica")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


# -- input helpers ----------------------------------------------------------

def _read(arg: str):
    """Load an argument as JSON; non-JSON text is returned as a plain string."""
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text.strip()


def _cap(p: Poly, what="polynomial") -> Poly:
    cap = defaults().max_degree
    if p and p.degree > cap:
        raise DegreeCapExceeded(f"{what} has degree {p.degree} > {cap} ({MAX_DEGREE_ENV})")
    return p


def _cap_int(n: int, what: str):
    cap = defaults().max_degree
    if abs(n) > cap:
        raise DegreeCapExceeded(f"{what}={n} exceeds the degree cap {cap} ({MAX_DEGREE_ENV})")
    return n


def _poly(arg, var=None) -> Poly:
    doc = arg if not isinstance(arg, str) else _read(arg)
    return _cap(J.poly_from_json(doc, var))


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise ParseError(f"expected an integer, got {text!r}") from exc


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"expected a rational, got {text!r}") from exc


def _series(arg: str, order: int) -> TruncSeries:
    doc = _read(arg)
    if isinstance(doc, dict) and "a" in doc:
        return J.series_from_json(doc)
    return TruncSeries.from_poly(_poly(doc), order)


def _ode(arg: str):
    ode = J.ode_from_json(_read(arg))
    for p in ode.P:
        _cap(p, "ODE coefficient")
    return ode


def _rec(arg: str):
    return J.rec_from_json(_read(arg))


def _values(arg: str):
    doc = _read(arg)
    if isinstance(doc, dict) and "a" in doc:
        doc = doc["a"]
    return J.values_from_json(doc)


def _supplied(arg):
    if arg is None:
        return None
    doc = _read(arg)
    if not isinstance(doc, dict):
        raise ParseError("--supplied expects a JSON object {index: value}")
    return {_int(k): J.values_from_json([v])[0] for k, v in doc.items()}


def _pair(args):
    """``F G`` as two arguments, or one document ``{"x": F, "y": G}``."""
    if args.g is None:
        doc = _read(args.f)
        if not isinstance(doc, dict) or "x" not in doc or "y" not in doc:
            raise ParseError('expected {"x": ..., "y": ...} or two polynomial arguments')
        return _poly(doc["x"]), _poly(doc["y"])
    return _poly(args.f), _poly(args.g)


# -- subcommands --------------------------------------------------------------------

def cmd_pell_gen(args):
    hi = args.n if args.to is None else args.to
    out = [J.pell_to_json(pell_generate(_cap_int(n, "n"))) for n in range(args.n, hi + 1)]
    return (out[0] if args.to is None else out), EXIT_OK


def cmd_pell_verify(args):
    x, y = _pair(args)
    ok = pell_verify_poly(x, y)
    doc = {"ok": ok}
    if not ok:
        doc["reason"] = "x^2 - (z^2 - 1)*y^2 != 1"
        doc["residual"] = J.poly_to_json(x * x - (Poly({0: -1, 2: 1}) * y * y) - 1)
        log.error("not a solution: %s", doc["reason"])
    return doc, EXIT_OK if ok else EXIT_FALSE


def cmd_pell_classify(args):
    x, y = _pair(args)
    eps, n = pell_classify(x, y)
    return {"epsilon": eps, "n": n}, EXIT_OK


def cmd_pell_entire(args):
    data = pell_general_solution(_int(args.eps), _cap_int(_int(args.n), "n"), _poly(args.h), _cap_int(_int(args.T), "T"))
    return J.entire_to_json(data), EXIT_OK


def cmd_pell_witness_ode(args):
    f, g = pell_holonomic_witness(_int(args.eps), _cap_int(_int(args.n), "n"), _poly(args.h), args.order)
    return {"f": J.ode_to_json(f), "g": J.ode_to_json(g)}, EXIT_OK


def cmd_holo_ode2rec(args):
    return J.rec_to_json(ode_to_recurrence(_ode(args.ode))), EXIT_OK


def cmd_holo_rec2ode(args):
    return J.ode_to_json(recurrence_to_ode(_rec(args.rec))), EXIT_OK


def cmd_holo_add(args):
    return J.ode_to_json(annihilator_add(_ode(args.f), _ode(args.g))), EXIT_OK


def cmd_holo_mul(args):
    return J.ode_to_json(annihilator_mul(_ode(args.f), _ode(args.g))), EXIT_OK


def cmd_holo_check(args):
    ok = ode_series_check(_ode(args.ode), _series(args.series, args.order))
    return {"ok": ok}, EXIT_OK if ok else EXIT_FALSE


def cmd_holo_unroll(args):
    a = recurrence_unroll(_rec(args.rec), _values(args.init), _int(args.N), _supplied(args.supplied))
    return {"a": [J.format_coeff(c) for c in a]}, EXIT_OK


def cmd_lac_count(args):
    return {"N": gap_count(J.support_from_json(_read(args.profile)), _int(args.x)), "x": _int(args.x)}, EXIT_OK


def cmd_lac_combine(args):
    p, q = J.support_from_json(_read(args.p)), J.support_from_json(_read(args.q))
    res = support_combine(p, q, args.op, args.x or None)
    doc = {
        "op": res.op,
        "support": J.support_to_json(res.bound),
        "checks": [
            {"x": c.x, "N": c.n_result, "N_f": c.n_f, "N_g": c.n_g, "bound": c.bound, "ok": c.ok}
            for c in res.checks
        ],
        "ok": res.ok,
    }
    return doc, EXIT_OK if res.ok else EXIT_FALSE


def cmd_lac_evidence(args):
    rep = lacunarity_evidence(J.support_from_json(_read(args.profile)), _frac(args.eps), args.x)
    doc = {
        "label": rep.label,
        "eps": J.format_coeff(rep.eps),
        "monotone": rep.monotone,
        "rows": [{"x": r.x, "N": r.count, "x^eps": r.scale, "ratio": r.ratio, "exceeds_one": r.exceeds_one} for r in rep.rows],
    }
    return doc, EXIT_OK


def cmd_lac_certify(args):
    cert = polynomiality_certificate(_rec(args.rec), _values(args.init), args.horizon, _supplied(args.supplied))
    return J.certificate_to_json(cert), EXIT_OK


def cmd_denef_witness(args):
    wit = denef_witness(_cap_int(_int(args.t), "t"))
    doc = J.denef_to_json(wit)
    doc["transcript"] = transcript(wit)
    return doc, EXIT_OK


def cmd_denef_verify(args):
    wit = J.denef_from_json(_read(args.file))
    rep = witness_verify(wit)
    if not rep:
        log.error("witness rejected: %s", ", ".join(rep.reasons))
    return {"ok": rep.ok, "reasons": list(rep.reasons), "transcript": transcript(wit)}, EXIT_OK if rep else EXIT_FALSE


def cmd_denef_divide(args):
    return J.poly_to_json(eval_at_one_divide(_poly(args.y), _frac(args.lam))), EXIT_OK


def cmd_series_exp(args):
    return J.series_to_json(series_exp(_series(args.s, args.order))), EXIT_OK


def cmd_series_w(args):
    return J.series_to_json(series_W(_cap_int(args.order, "order"))), EXIT_OK


def cmd_series_mul(args):
    return J.series_to_json(_series(args.s, args.order) * _series(args.t, args.order)), EXIT_OK


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    d = defaults()
    ap = _Parser(prog="holonomica", description="Exact holonomic and functional-Pell computations.")
    ap.add_argument("--compact", action="store_true", help="single-line JSON output")
    ap.add_argument("-v", "--verbose", action="store_true")
    top = ap.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def sub(group, name, fn, *pos, **kw):
        p = group.add_parser(name, **kw)
        for a in pos:
            p.add_argument(a)
        p.set_defaults(func=fn)
        return p

    def order(p):
        p.add_argument("--order", type=int, default=d.series_order, help="truncation order T")
        return p

    pell = top.add_parser("pell", help="functional Pell equation").add_subparsers(dest="cmd", required=True)
    g = sub(pell, "gen", cmd_pell_gen)
    g.add_argument("n", type=int)
    g.add_argument("--to", type=int, help="emit the whole range n..TO")
    for name, fn in (("verify", cmd_pell_verify), ("classify", cmd_pell_classify)):
        p = sub(pell, name, fn, "f")
        p.add_argument("g", nargs="?")
    sub(pell, "entire", cmd_pell_entire, "eps", "n", "h", "T")
    order(sub(pell, "witness-ode", cmd_pell_witness_ode, "eps", "n", "h"))

    holo = top.add_parser("holo", help="annihilators and recurrences").add_subparsers(dest="cmd", required=True)
    sub(holo, "ode2rec", cmd_holo_ode2rec, "ode")
    sub(holo, "rec2ode", cmd_holo_rec2ode, "rec")
    sub(holo, "add", cmd_holo_add, "f", "g")
    sub(holo, "mul", cmd_holo_mul, "f", "g")
    order(sub(holo, "check", cmd_holo_check, "ode", "series"))
    sub(holo, "unroll", cmd_holo_unroll, "rec", "init", "N").add_argument("--supplied")

    lac = top.add_parser("lac", help="supports and polynomiality certificates").add_subparsers(dest="cmd", required=True)
    sub(lac, "count", cmd_lac_count, "profile", "x")
    c = sub(lac, "combine", cmd_lac_combine, "p", "q")
    c.add_argument("--op", choices=("add", "mul"), default="add")
    c.add_argument("--x", type=int, nargs="*")
    e = sub(lac, "evidence", cmd_lac_evidence, "profile")
    e.add_argument("--eps", default="1/2")
    e.add_argument("--x", type=int, nargs="+", default=[10, 100, 1000])
    cert = sub(lac, "certify", cmd_lac_certify, "rec", "init")
    cert.add_argument("--horizon", type=int, default=d.horizon)
    cert.add_argument("--supplied")

    den = top.add_parser("denef", help="integer-definability witnesses").add_subparsers(dest="cmd", required=True)
    sub(den, "witness", cmd_denef_witness, "t")
    sub(den, "verify", cmd_denef_verify, "file")
    sub(den, "divide", cmd_denef_divide, "y", "lam")

    ser = top.add_parser("series", help="truncated power series").add_subparsers(dest="cmd", required=True)
    order(sub(ser, "exp", cmd_series_exp, "s"))
    order(sub(ser, "w", cmd_series_w))
    order(sub(ser, "mul", cmd_series_mul, "s", "t"))
    return ap


def dispatch(argv=None, out=None):
    """Run one command; returns ``(exit_code, document_or_None)``."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
        doc, code = args.func(args)
    except ParseError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED, None
    except PreconditionError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION, None
    except (ValueError, TypeError, KeyError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED, None
    print(J.dumps(doc, pretty=not args.compact), file=out)
    return code, doc


def main(argv=None) -> int:
    return dispatch(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
