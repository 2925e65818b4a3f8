"""The ``gkzkit`` command line.

Every subcommand prints one JSON document (keys sorted, rationals as
strings) on stdout.  Exit codes: 0 success, 1 unparsable input, 2 an
analysis error, reported as {"error": {"kind", "message", "certificate"}}.
"""

import argparse
import enum
import json
import math
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .errors import GkzError, NonGenericWeight, ParseError
from .fixtures import FIXTURES
from .fuchs import ThetaOperator, fuchs_polygon, fuchs_slope_from_L_slope
from .gkz import (
    GeneralForm,
    PFQForm,
    UnivariateOp,
    apply_system,
    assemble,
    gamma_series,
    generic_rank,
    gkz_to_univariate,
    is_resonant,
    is_strongly_resonant,
    monomial_curve_rank,
    slopes_along_hyperplane,
    univariate_to_gkz,
)
from .hodge import (
    HypergeomParams,
    fedorov_numbers,
    operator_from_params,
    sabbah_yu_numbers,
    singular_points,
)
from .lattice import is_saturated, validate, with_saturation
from .plotting import plot_fuchs, plot_umbrella
from .polyhedral import regular_triangulation, simplicial_volume, umbrella, umbrella_jumps
from .toric import (
    MonomialIdeal,
    initial_ideal,
    irreducible_decomposition,
    standard_pairs,
    toric_ideal_generators,
)

DEFAULT_BOUND = 32
DEFAULT_WINDOW = "1/2..16"

# --------------------------------------------------------------------------
# parsing

_NUMBER = re.compile(r"[+-]?\d+(?:/[+-]?\d+)?")
_SEP = re.compile(r"[\s,]+")


def parse_rational(text, offset=0):
    m = _NUMBER.fullmatch(text)
    if not m:
        raise ParseError(f"not a rational number: {text!r}", position=offset)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", position=offset)
    return Fraction(int(num), int(den) if den else 1)


def _tokens(text, offset=0):
    """(token, absolute position) pairs of a row of entries."""
    out = []
    pos = 0
    for m in _SEP.finditer(text):
        if m.start() > pos:
            out.append((text[pos:m.start()], offset + pos))
        pos = m.end()
    if pos < len(text):
        out.append((text[pos:], offset + pos))
    return out


def parse_vector(text, integral=False, offset=0):
    vals = []
    for tok, at in _tokens(text, offset):
        x = parse_rational(tok, at)
        if integral and x.denominator != 1:
            raise ParseError(f"expected an integer, got {tok!r}", position=at)
        vals.append(int(x) if integral else x)
    return vals


def parse_matrix(text, integral=True):
    rows = []
    start = 0
    for chunk in text.split(";"):
        row = parse_vector(chunk, integral, offset=start)
        start += len(chunk) + 1
        if not row:
            raise ParseError("empty row", position=start - 1)
        rows.append(row)
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ParseError(f"rows have different lengths {sorted(widths)}", position=0)
    return rows


def parse_window(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ParseError("window must look like lo..hi", position=0)
    return parse_rational(lo.strip()), parse_rational(hi.strip(), len(lo) + 2)


# --------------------------------------------------------------------------
# serialization


def to_json(obj):
    """Plain JSON data with exact numbers as strings where needed."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return "inf" if math.isinf(obj) else repr(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return [to_json(x) for x in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    return str(obj)


def dumps(obj):
    return json.dumps(to_json(obj), sort_keys=True, indent=2) + "\n"


def _color(text, code):
    if os.environ.get("GKZKIT_NO_COLOR") or not sys.stderr.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


# --------------------------------------------------------------------------
# commands


def _matrix(args):
    if getattr(args, "fixture", None):
        return [list(r) for r in FIXTURES[args.fixture]]
    if not args.A:
        raise ParseError("give --A or --fixture", position=0)
    return parse_matrix(args.A)


def _bound(args):
    if args.bound is not None:
        return args.bound
    env = os.environ.get("GKZKIT_BOUND")
    return int(env) if env else DEFAULT_BOUND


def _truncation(args, L):
    if args.truncation is not None:
        return parse_rational(args.truncation)
    return 8 * max(abs(x) for x in L)


def _umbrella_json(u):
    return {
        "weight": u.weight,
        "facets": u.facets,
        "faces": [{"columns": f.columns, "dim": f.dim, "normal": f.supporting_normal}
                  for f in u.faces],
    }


def _error_json(e):
    out = {"kind": e.kind, "message": e.message}
    if e.certificate is not None:
        out["certificate"] = e.certificate
    return out


def cmd_analyze(args):
    rows = _matrix(args)
    g = with_saturation(validate(rows))
    beta = parse_vector(args.beta) if args.beta else [Fraction(0)] * g.d
    bound = _bound(args)
    report = {
        "version": __version__,
        "determinism": "exact arithmetic; no randomness; output depends only on the input",
        "input": {"A": g.matrix, "beta": beta},
        "flags": {"full": g.full, "pointed": g.pointed, "homogeneous": g.homogeneous,
                  "saturated": g.saturated},
        "volume": simplicial_volume(g),
    }
    sat = is_saturated(g)
    if sat.witness is not None:
        report["flags"]["saturation_witness"] = sat.witness
    res = is_resonant(g, beta)
    sres = is_strongly_resonant(g, beta, bound=bound)
    report["resonance"] = {
        "resonant": res.resonant,
        "facet": res.facet,
        "normal": res.normal,
        "strongly_resonant": sres.status,
        "strong_witness": sres.witness,
        "bound": bound,
    }
    rank = {"generic": generic_rank(g)}
    if g.d == 2 and g.homogeneous:
        rank["monomial_curve"] = monomial_curve_rank(g, beta)
    report["rank"] = rank
    if args.L:
        L = parse_vector(args.L)
        report["input"]["L"] = L
        report["umbrella"] = _umbrella_json(umbrella(g, L))
        try:
            t = regular_triangulation(g, L)
            report["triangulation"] = {"cells": t.maximal_cells, "volumes": t.volumes}
        except GkzError as e:
            report["triangulation"] = {"error": _error_json(e)}
        if g.homogeneous:
            try:
                series = gamma_series(g, beta, L, _truncation(args, L))
                report["series"] = [{"exponent": s.exponent, "cell": s.cell,
                                     "terms": len(s.terms)} for s in series]
            except GkzError as e:
                report["series"] = {"error": _error_json(e)}
    return report


def cmd_umbrella(args):
    g = validate(_matrix(args))
    L = parse_vector(args.L)
    u = umbrella(g, L)
    out = _umbrella_json(u)
    if args.direction:
        direction = parse_vector(args.direction)
        lo, hi = parse_window(args.window)
        out["jumps"] = umbrella_jumps(g, L, direction, (lo, hi))
        out["window"] = [lo, hi]
    if args.svg:
        plot_umbrella(g, u, args.svg)
    return out


def cmd_slopes(args):
    g = validate(_matrix(args))
    window = parse_window(args.window)
    if args.hyperplane is not None:
        return {"slopes": slopes_along_hyperplane(g, args.hyperplane, window)}
    return {"slopes_by_hyperplane": {j: slopes_along_hyperplane(g, j, window)
                                     for j in range(1, g.n + 1)}}


def cmd_series(args):
    g = validate(_matrix(args))
    beta = parse_vector(args.beta)
    L = parse_vector(args.L)
    trunc = _truncation(args, L)
    system = assemble(g, beta)
    out = []
    for s in gamma_series(g, beta, L, trunc):
        residuals = apply_system(system, s)
        out.append({
            "exponent": s.exponent,
            "cell": s.cell,
            "base": s.base,
            "terms": [{"u": u, "coefficient": c} for u, c in s.terms],
            "residual_min_weight": min((r[3] for r in residuals), default=None),
        })
    return {"truncation": trunc, "weight": L, "series": out}


def cmd_toric(args):
    g = validate(_matrix(args))
    gens = toric_ideal_generators(g)
    out = {"generators": [str(b) for b in gens],
           "exponents": [{"plus": b.plus, "minus": b.minus} for b in gens]}
    if args.L:
        init = initial_ideal(g, parse_vector(args.L))
        if isinstance(init, MonomialIdeal):
            out["initial"] = {"monomial": True, "generators": init.generators,
                              "display": repr(init)}
        else:
            out["initial"] = {"monomial": False,
                              "binomials": [str(b) for b in init.binomials],
                              "monomials": init.monomials}
    return out


def cmd_stdpairs(args):
    if args.gens:
        gens = parse_matrix(args.gens)
        m = MonomialIdeal(gens, len(gens[0]))
    else:
        g = validate(_matrix(args))
        if not args.L:
            raise ParseError("--A needs --L", position=0)
        m = initial_ideal(g, parse_vector(args.L))
        if not isinstance(m, MonomialIdeal):
            raise NonGenericWeight("initial ideal is not monomial")
    pairs = standard_pairs(m)
    comps = irreducible_decomposition(m)
    return {"ideal": repr(m),
            "pairs": [{"base": p.base, "face": p.face, "display": str(p)} for p in pairs],
            "components": [repr(c) for c in comps]}


def _operator(args):
    if args.terms:
        rows = parse_matrix(args.terms, integral=False)
        if len(rows[0]) != 3:
            raise ParseError("terms are rows 'c r s'", position=0)
        return [(c, int(r), int(s)) for c, r, s in rows]
    if args.theta:
        parts = {}
        for chunk in args.theta.split(";"):
            r, sep, coeffs = chunk.partition(":")
            if not sep:
                raise ParseError("theta parts look like 'r: c0 c1 ...'", position=0)
            parts[int(parse_rational(r.strip()))] = parse_vector(coeffs)
        return ThetaOperator.of(parts)
    raise ParseError("give --terms or --theta", position=0)


def cmd_fuchs(args):
    if args.convert is not None:
        s = parse_rational(args.convert)
        return {"L_slope": s, "fuchs_slope": fuchs_slope_from_L_slope(s)}
    op = _operator(args)
    if args.at_infinity:
        if not isinstance(op, ThetaOperator):
            raise ParseError("--at-infinity needs --theta", position=0)
        op = op.at_infinity()
    p = fuchs_polygon(op)
    if args.svg:
        plot_fuchs(p, args.svg)
    return {"points": p.points, "vertices": p.hull_vertices, "slopes": p.slopes,
            "regular": p.regular_at_origin}


def cmd_hodge(args):
    p = HypergeomParams.of(parse_vector(args.lam), parse_vector(args.mu or ""))
    if args.formula == "fedorov":
        h = fedorov_numbers(p)
    else:
        h = sabbah_yu_numbers(p, reading=args.reading)
    if args.verbose:
        return {"numbers": h.as_dict(), "total": h.total,
                "operator": str(operator_from_params(p)),
                "singular_points": singular_points(p)}
    return h.as_dict()


def cmd_convert(args):
    if args.v:
        v = parse_vector(args.v, integral=True)
        c = parse_vector(args.c) if args.c else [Fraction(0)] * len(v)
        op = UnivariateOp(GeneralForm(tuple(v), tuple(c)))
    elif args.pfq:
        alpha, _, b = args.pfq.partition(";")
        op = UnivariateOp(PFQForm(tuple(parse_vector(alpha)), tuple(parse_vector(b))))
    else:
        g = validate(_matrix(args))
        beta = parse_vector(args.beta) if args.beta else [Fraction(0)] * g.d
        op = gkz_to_univariate(g, beta)
        return {"v": op.form.v, "c": op.form.c, "operator": str(op)}
    g, beta = univariate_to_gkz(op)
    return {"A": g.matrix, "beta": beta, "kernel": g.kernel, "pointed": g.pointed,
            "operator": str(op)}


# --------------------------------------------------------------------------
# argument parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser():
    p = _Parser(prog="gkzkit", description="Exact combinatorics of A-hypergeometric systems.")
    p.add_argument("--version", action="version", version=f"gkzkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def matrix_args(sp):
        sp.add_argument("--A", help='integer matrix, rows separated by ";"')
        sp.add_argument("--fixture", choices=sorted(FIXTURES), help="use a named matrix")

    sp = sub.add_parser("analyze", help="full report for A and beta")
    matrix_args(sp)
    sp.add_argument("--beta")
    sp.add_argument("--L", help="weight vector; adds umbrella, triangulation and series")
    sp.add_argument("--bound", type=int, help=f"search bound (default {DEFAULT_BOUND})")
    sp.add_argument("--truncation")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("umbrella", help="the (A, L)-umbrella")
    matrix_args(sp)
    sp.add_argument("--L", required=True)
    sp.add_argument("--direction", help="also list jumps along L + t * direction")
    sp.add_argument("--window", default=DEFAULT_WINDOW)
    sp.add_argument("--svg")
    sp.set_defaults(func=cmd_umbrella)

    sp = sub.add_parser("slopes", help="slopes along coordinate hyperplanes")
    matrix_args(sp)
    sp.add_argument("--hyperplane", type=int, help="1-based column index")
    sp.add_argument("--window", default=DEFAULT_WINDOW)
    sp.set_defaults(func=cmd_slopes)

    sp = sub.add_parser("series", help="truncated Gamma-series with residual check")
    matrix_args(sp)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--L", required=True)
    sp.add_argument("--truncation", help="weight cut-off (default 8 * max|L|)")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("toric", help="toric ideal and optional initial ideal")
    matrix_args(sp)
    sp.add_argument("--L")
    sp.set_defaults(func=cmd_toric)

    sp = sub.add_parser("stdpairs", help="standard pairs of a monomial ideal")
    matrix_args(sp)
    sp.add_argument("--gens", help="exponent vectors of the generators, one per row")
    sp.add_argument("--L")
    sp.set_defaults(func=cmd_stdpairs)

    sp = sub.add_parser("fuchs", help="Fuchs polygon of a univariate operator")
    sp.add_argument("--terms", help='rows "c r s" meaning c z^r d^s')
    sp.add_argument("--theta", help='parts "r: c0 c1 ..." for z^r p_r(theta)')
    sp.add_argument("--at-infinity", action="store_true")
    sp.add_argument("--convert", help="convert an L-slope to a Fuchs slope instead")
    sp.add_argument("--svg")
    sp.set_defaults(func=cmd_fuchs)

    sp = sub.add_parser("hodge", help="Hodge numbers of H(lambda; mu)")
    sp.add_argument("formula", choices=["fedorov", "sabbah-yu"])
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", default="")
    sp.add_argument("--reading", choices=["lambda", "zero"], default="lambda")
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(func=cmd_hodge)

    sp = sub.add_parser("convert", help="univariate operator <-> GKZ data")
    matrix_args(sp)
    sp.add_argument("--v")
    sp.add_argument("--c")
    sp.add_argument("--pfq", help='"alpha1 ...; beta1 ..."')
    sp.add_argument("--beta")
    sp.set_defaults(func=cmd_convert)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except ParseError as e:
        err = {"kind": e.kind, "message": e.message, "position": e.position}
        out.write(dumps({"error": err}))
        print(_color(f"parse error: {e.message}", "31"), file=sys.stderr)
        return 1
    except GkzError as e:
        out.write(dumps({"error": _error_json(e)}))
        print(_color(f"{e.kind}: {e.message}", "31"), file=sys.stderr)
        return 2
    out.write(dumps(result))
    return 0
