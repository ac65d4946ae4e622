"""Command-line front end.

Every subcommand prints one JSON document (or a CSV table of its records) on
stdout.  Exit status: 0 success, 1 domain error, 2 bad arguments.
"""

import argparse
import csv
import io
import json
import re
import sys
from typing import List, Optional

from . import genus3, heron, isosceles
from .errors import HeronCurvesError, TorsionPoint, WitnessTorsionExhausted
from .exact import format_rational as fmt
from .exact import parse_rational
from .geometry import ORIGIN, make_record, make_triangle
from .verify import SCHEMA, verify_report
from .weierstrass import (
    _add,
    gram_determinant,
    independence_heuristic,
    point_to_json,
    torsion_order,
    two_torsion,
)

HEURISTIC_DEPTH = 3
HEURISTIC_TOLERANCE = 0.01


# ---------------------------------------------------------------------------
# Records


def curve_record(m, q, E) -> dict:
    return {"kind": "curve", "m": fmt(m), "q": fmt(q), **E.to_json(), "elliptic": E.elliptic}


def ec_point_record(m, q, P, label, order="unknown") -> dict:
    rec = {"kind": "ec_point", "label": label, "m": fmt(m), "q": fmt(q), "point": point_to_json(P)}
    if order != "unknown":
        rec["order"] = order
    return rec


def c_point_record(m, q, c, label) -> dict:
    return {"kind": "c_point", "label": label, "m": fmt(m), "q": fmt(q), "coords": [fmt(x) for x in c]}


def cq_point_record(q, p, label) -> dict:
    return {"kind": "cq_point", "label": label, "q": fmt(q), "coords": [fmt(x) for x in p]}


def _report(command, params, **body) -> dict:
    return {"schema": SCHEMA, "command": command, "params": params, **body}


def _independence(E, P, R) -> dict:
    out = {"heuristic": True, "depth": HEURISTIC_DEPTH, "tolerance": HEURISTIC_TOLERANCE}
    try:
        out["independent"] = independence_heuristic(E, P, R, HEURISTIC_DEPTH, HEURISTIC_TOLERANCE)
        out["gram_determinant"] = gram_determinant(E, P, R, HEURISTIC_DEPTH)
    except TorsionPoint as exc:
        out["independent"] = None
        out["reason"] = str(exc)
    return out


# ---------------------------------------------------------------------------
# Subcommands


def cmd_isosceles(args) -> dict:
    cfg = isosceles.BaseConfig.from_point(*args.p1)
    params = {"p1": [fmt(cfg.X1), fmt(cfg.Y1)]}
    if args.enumerate:
        if args.height is None:
            raise argparse.ArgumentTypeError("--enumerate needs --height")
        params["height"] = args.height
        sols = isosceles.enumerate_isosceles(cfg, args.height, jobs=args.jobs)
    else:
        if args.t is None:
            raise argparse.ArgumentTypeError("give --t T or --enumerate --height H")
        params["t"] = fmt(args.t)
        branches = [args.branch] if args.branch else [1, -1]
        sols = [s for b in branches if (s := isosceles.isosceles_from_parameter(cfg, args.t, b)) is not None]
        if not sols:
            raise HeronCurvesError(f"t = {args.t} gives a degenerate triangle")
    records = []
    solutions = []
    for s in sols:
        sign = "+" if s.branch == 1 else "-"
        solutions.append(
            {"apex": [fmt(s.apex.x), fmt(s.apex.y)], "leg": fmt(s.leg), "t": fmt(s.t), "branch": sign}
        )
        family = {"name": "isosceles", "p1": params["p1"], "leg": fmt(s.leg), "t": fmt(s.t), "branch": sign}
        records.append(make_record(make_triangle(ORIGIN, cfg.p1, s.apex), family).to_json())
    cubic = {"c": fmt(isosceles.singular_cubic_coefficient(cfg)), "node": [fmt(v) for v in isosceles.SINGULAR_CUBIC_NODE]}
    return _report("isosceles", params, base_length=fmt(cfg.base_length), singular_cubic=cubic,
                   solutions=solutions, records=records)


def cmd_heron_curve(args) -> dict:
    m, q = args.m, args.q
    E = heron.build_E(m, q)
    I, J = heron.build_IJ(m, 1, q)
    body = {"curve": {"equation": str(E), **E.to_json(), "elliptic": E.elliptic}, "I": fmt(I), "J": fmt(J)}
    records = [curve_record(m, q, E)]
    if E.elliptic:
        pts = two_torsion(E)
        P = heron.rank_witness_P(m, q)
        order = torsion_order(E, P)
        body["torsion"] = {
            "two_torsion": [point_to_json(T) for T in pts],
            "full_two_torsion": len(pts) == 3,
            "witness_P": {"point": point_to_json(P), "order": order},
        }
        records += [ec_point_record(m, q, T, "two_torsion", 2) for T in pts]
        records.append(ec_point_record(m, q, P, "witness_P", order))
    return _report("heron-curve", {"m": fmt(m), "q": fmt(q)}, **body, records=records)


def cmd_heron_gen(args) -> dict:
    m, q = args.m, args.q
    params = {"m": fmt(m), "q": fmt(q), "count": args.count}
    try:
        recs = heron.generate_heron_triangles(m, q, args.count)
    except WitnessTorsionExhausted as exc:
        exc.report = _report("heron-gen", params, records=_gen_records(m, q, exc.records))
        raise
    return _report("heron-gen", params, records=_gen_records(m, q, recs))


def _gen_records(m, q, recs) -> List[dict]:
    out = []
    for i, rec in enumerate(recs, 1):
        out.append(rec.to_json())
        out.append(c_point_record(m, q, heron.cpoint_from_triangle(m, q, rec), f"triangle_{i}"))
    return out


def cmd_heron_torsion(args) -> dict:
    m = args.m
    params = {"m": fmt(m)}
    if args.n is not None:
        params["n"] = fmt(args.n)
        q = heron.full_two_torsion_q(m, args.n)
    else:
        q = args.q
    params["q"] = fmt(q)
    E = heron.elliptic_curve(m, q)
    pts = two_torsion(E)
    records = [curve_record(m, q, E)] + [ec_point_record(m, q, T, "two_torsion", 2) for T in pts]
    if m != 0:
        records.append(c_point_record(m, q, heron.two_torsion_cpoint(m, q), "two_torsion"))
    return _report(
        "heron-torsion",
        params,
        q=fmt(q),
        square_value=fmt(heron.two_torsion_square_value(m, q)),
        full_two_torsion=len(pts) == 3,
        two_torsion=[point_to_json(T) for T in pts],
        records=records,
    )


def cmd_heron_order4(args) -> dict:
    m, t = args.m, args.t
    q, P = heron.order4_point(m, t)
    E = heron.elliptic_curve(m, q)
    P2 = _add(E, P, P)
    records = [curve_record(m, q, E), ec_point_record(m, q, P, "order4", 4), ec_point_record(m, q, P2, "double", 2)]
    return _report(
        "heron-order4",
        {"m": fmt(m), "t": fmt(t)},
        q=fmt(q),
        point=point_to_json(P),
        double=point_to_json(P2),
        quadruple=point_to_json(_add(E, P2, P2)),
        records=records,
    )


def cmd_heron_witnesses(args) -> dict:
    m = args.m
    params = {"m": fmt(m)}
    if args.q is not None:
        q = args.q
        params["q"] = fmt(q)
        E = heron.elliptic_curve(m, q)
        P = heron.rank_witness_P(m, q)
        order = torsion_order(E, P)
        return _report("heron-witnesses", params, q=fmt(q), P={"point": point_to_json(P), "order": order},
                       records=[curve_record(m, q, E), ec_point_record(m, q, P, "P", order)])
    if args.h is not None:
        params["h"] = fmt(args.h)
        q, W = heron.rank_witness_Q(m, args.h)
        c = heron.cpoint_Q(args.h)
        cn = heron.congruent_number_A(args.h)
        name = "Q"
    else:
        params["u"] = fmt(args.u)
        q, W = heron.rank_witness_H(m, args.u)
        c = heron.cpoint_H(m, args.u)
        cn = heron.congruent_number_H(m, args.u)
        name = "H"
    E = heron.elliptic_curve(m, q)
    P = heron.rank_witness_P(m, q)
    oP, oW = torsion_order(E, P), torsion_order(E, W)
    records = [
        curve_record(m, q, E),
        ec_point_record(m, q, P, "P", oP),
        ec_point_record(m, q, W, name, oW),
        c_point_record(m, q, c, name),
    ]
    if c.x4 != 0:
        records.append(heron.triangle_from_cpoint(m, q, c).to_json())
    return _report(
        "heron-witnesses",
        params,
        q=fmt(q),
        P={"point": point_to_json(P), "order": oP},
        **{name: {"point": point_to_json(W), "order": oW}},
        independence=_independence(E, P, W),
        congruent_number=fmt(cn),
        records=records,
    )


def cmd_genus3_special(args) -> dict:
    families = [args.family] if args.family else ["isosceles", "right"]
    out, records = {}, []
    for fam in families:
        q, p = (genus3.isosceles_point if fam == "isosceles" else genus3.right_point)(args.u)
        rec = genus3.triangle_from_cqpoint(q, p)
        entry = {"q": fmt(q), "point": [fmt(x) for x in p]}
        if fam == "right":
            entry["congruent_number"] = fmt(genus3.congruent_number_genus3(args.u))
        out[fam] = entry
        records += [cq_point_record(q, p, fam), rec.to_json()]
    return _report("genus3-special", {"u": fmt(args.u)}, **out, records=records)


def cmd_genus3_search(args) -> dict:
    q = args.q
    jobs = args.jobs if args.jobs is not None else isosceles.default_jobs()
    pts = genus3.search_points(q, args.height, jobs=jobs)
    records = []
    for p in pts:
        records += [cq_point_record(q, p, "search"), genus3.triangle_from_cqpoint(q, p).to_json()]
    return _report(
        "genus3-search",
        {"q": fmt(q), "height": args.height},
        points=[[fmt(x) for x in p] for p in pts],
        exhaustive=False,
        records=records,
    )


def cmd_verify(args) -> dict:
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    if not text.strip():
        return verify_report(None)
    try:
        report = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"input is not JSON: {exc}") from None
    if not isinstance(report, dict):
        raise argparse.ArgumentTypeError("input is not a report object")
    return verify_report(report)


# ---------------------------------------------------------------------------
# Argument parsing


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected X,Y but got {text!r}")
    return tuple(_rational(p) for p in parts)


def _positive_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {n}")
    return n


def _branch(text):
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError("branch is + or -")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="heron-curves", description="Rational triangles from algebraic curves.")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("isosceles", parents=[common], help="isosceles triangles on a fixed base")
    p.add_argument("--p1", type=_pair, required=True, metavar="X1,Y1")
    p.add_argument("--t", type=_rational)
    p.add_argument("--branch", type=_branch)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--height", type=_positive_int)
    p.add_argument("--jobs", type=_positive_int)
    p.set_defaults(func=cmd_isosceles)

    h = sub.add_parser("heron", help="Heron triangles with a vertex on y = mx + 1")
    hs = h.add_subparsers(dest="heron_command", required=True)

    p = hs.add_parser("curve", parents=[common])
    p.add_argument("--m", type=_rational, required=True)
    p.add_argument("--q", type=_rational, required=True)
    p.set_defaults(func=cmd_heron_curve)

    p = hs.add_parser("gen", parents=[common])
    p.add_argument("--m", type=_rational, required=True)
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--count", type=_positive_int, required=True)
    p.set_defaults(func=cmd_heron_gen)

    p = hs.add_parser("torsion", parents=[common])
    p.add_argument("--m", type=_rational, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_rational)
    g.add_argument("--q", type=_rational)
    p.set_defaults(func=cmd_heron_torsion)

    p = hs.add_parser("order4", parents=[common])
    p.add_argument("--m", type=_rational, required=True)
    p.add_argument("--t", type=_rational, required=True)
    p.set_defaults(func=cmd_heron_order4)

    p = hs.add_parser("witnesses", parents=[common])
    p.add_argument("--m", type=_rational, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--q", type=_rational)
    g.add_argument("--h", type=_rational)
    g.add_argument("--u", type=_rational)
    p.set_defaults(func=cmd_heron_witnesses)

    g3 = sub.add_parser("genus3", help="triangles with apex on x = y^2")
    gs = g3.add_subparsers(dest="genus3_command", required=True)

    p = gs.add_parser("special", parents=[common])
    p.add_argument("--u", type=_rational, required=True)
    p.add_argument("--family", choices=["isosceles", "right"])
    p.set_defaults(func=cmd_genus3_special)

    p = gs.add_parser("search", parents=[common])
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--height", type=_positive_int, required=True)
    p.add_argument("--jobs", type=_positive_int)
    p.set_defaults(func=cmd_genus3_search)

    p = sub.add_parser("verify", parents=[common], help="re-check a report")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_verify)
    return parser


_NEGATIVE = re.compile(r"^-\.?\d")


def _join_negative_values(argv: List[str]) -> List[str]:
    # argparse reads "--q -4/7" as two options; rewrite it as "--q=-4/7".
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


# ---------------------------------------------------------------------------
# Output


def _cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    if v is None:
        return ""
    return v


def to_csv(report: dict) -> str:
    rows = report.get("records")
    if rows is None:
        rows = report.get("results", [])
    columns: List[str] = []
    for row in rows:
        columns += [k for k in row if k not in columns]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buf.getvalue()


def _emit(report: dict, form: str):
    if form == "csv":
        sys.stdout.write(to_csv(report))
    else:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except WitnessTorsionExhausted as exc:
        _emit(exc.report, args.format)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (HeronCurvesError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.format)
    if report.get("command") == "verify" and report["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
