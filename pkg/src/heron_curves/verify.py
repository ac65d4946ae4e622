"""Independent re-checking of emitted reports.

Nothing here imports the generator modules.  Curve equations are rebuilt
from the raw parameters (the Weierstrass model via the I/J invariants, the
quadric systems written out directly), distances go through the square test
in :mod:`heron_curves.exact`, and point orders use a separate affine group
law.
"""

from fractions import Fraction
from typing import List, Optional

from .exact import rational_sqrt
from .geometry import squared_distance, twice_signed_area

SCHEMA = "heron-curves/1"


def _fr(s) -> Fraction:
    return Fraction(s)


def _pt(pair):
    return (_fr(pair[0]), _fr(pair[1]))


def weierstrass_from_invariants(m: Fraction, q: Fraction):
    """(A, B) of E_{m,q} from I_{m,1,q}, J_{m,1,q}: A = -I/768, B = -J/110592."""
    m2 = m * m
    I = 256 * (1 + 2 * m * q + (5 * m2 + 4) * q**2 + 4 * m * (m2 + 1) * q**3 + (m2 + 1) ** 2 * q**4)
    J = (
        4096
        * (2 + 2 * m * q + (m2 + 1) * q**2)
        * (1 + 2 * m * q - (7 * m2 + 8) * q**2 - 8 * m * (m2 + 1) * q**3 - 2 * (m2 + 1) ** 2 * q**4)
    )
    return -I / 768, -J / 110592


def _ec_add(A, P, R):
    if P is None:
        return R
    if R is None:
        return P
    if P[0] == R[0]:
        if P[1] + R[1] == 0:
            return None
        slope = (3 * P[0] ** 2 + A) / (2 * P[1])
    else:
        slope = (R[1] - P[1]) / (R[0] - P[0])
    x = slope**2 - P[0] - R[0]
    return (x, slope * (P[0] - x) - P[1])


def _check_triangle(rec, fails: List[str]):
    verts = [_pt(v) for v in rec["vertices"]]
    sides = [_fr(s) for s in rec["sides"]]
    pairs = [(0, 1), (1, 2), (2, 0)]
    for (i, j), s in zip(pairs, sides):
        d2 = squared_distance(verts[i], verts[j])
        if s < 0 or s * s != d2:
            fails.append(f"side {i}{j} = {s} but squared distance is {d2}")
        if rational_sqrt(d2) is None:
            fails.append(f"distance {i}{j} is irrational")
    twice = twice_signed_area(*verts)
    if twice == 0:
        fails.append("vertices are collinear")
    area = _fr(rec["area"])
    if area != abs(twice) / 2:
        fails.append(f"area {area} != coordinate area {abs(twice) / 2}")
    a, b, c = sides
    s = (a + b + c) / 2
    if s * (s - a) * (s - b) * (s - c) != area * area:
        fails.append("Heron's formula disagrees with the area")
    tags = set(rec.get("tags", []))
    x, y, z = sorted(sides)
    right = x * x + y * y == z * z
    iso = a == b or b == c or c == a
    if "heron" not in tags:
        fails.append("missing heron tag")
    if ("right" in tags) != right:
        fails.append("right tag is wrong")
    if ("isosceles" in tags) != iso:
        fails.append("isosceles tag is wrong")
    cn = rec.get("congruent_number")
    if right and (cn is None or _fr(cn) != area):
        fails.append("right triangle must carry its area as congruent number")
    if not right and cn is not None:
        fails.append("congruent number claimed for a non-right triangle")
    fam = rec.get("family") or {}
    name = fam.get("name")
    origin = (Fraction(0), Fraction(0))
    if name == "heron":
        m, q = _fr(fam["m"]), _fr(fam["q"])
        if verts[0] != origin or verts[1] != (q, 0):
            fails.append("base is not O, (q, 0)")
        if verts[2][1] != m * verts[2][0] + 1:
            fails.append("apex is not on y = mx + 1")
        if area != abs(q * (m * verts[2][0] + 1)) / 2:
            fails.append("area != |q(mX + 1)|/2")
    elif name == "genus3":
        q = _fr(fam["q"])
        if verts[0] != origin or verts[1] != (q, 0):
            fails.append("base is not O, (q, 0)")
        if verts[2][0] != verts[2][1] ** 2:
            fails.append("apex is not on x = y^2")
    elif name == "isosceles":
        p1 = _pt(fam["p1"])
        leg = _fr(fam["leg"])
        if verts[0] != origin or verts[1] != p1:
            fails.append("base is not O, P1")
        if squared_distance(origin, verts[2]) != leg * leg or squared_distance(p1, verts[2]) != leg * leg:
            fails.append("apex is not at distance leg from both O and P1")


def _check_curve(rec, fails):
    m, q = _fr(rec["m"]), _fr(rec["q"])
    A, B = weierstrass_from_invariants(m, q)
    if _fr(rec["A"]) != A or _fr(rec["B"]) != B:
        fails.append(f"curve coefficients disagree with invariants: expected A={A}, B={B}")
    disc = -16 * (4 * A**3 + 27 * B**2)
    if _fr(rec["discriminant"]) != disc:
        fails.append("discriminant is wrong")


def _check_ec_point(rec, fails):
    m, q = _fr(rec["m"]), _fr(rec["q"])
    A, B = weierstrass_from_invariants(m, q)
    raw = rec["point"]
    P = None if raw == "infinity" else (_fr(raw["x"]), _fr(raw["y"]))
    if P is not None and P[1] ** 2 != P[0] ** 3 + A * P[0] + B:
        fails.append(f"point {P} is not on y^2 = x^3 + ({A})x + ({B})")
        return
    if "order" not in rec:
        return
    claimed = rec["order"]
    acc, order = None, None
    for k in range(1, 13):
        acc = _ec_add(A, acc, P)
        if acc is None:
            order = k
            break
    if claimed != order:
        fails.append(f"claimed order {claimed}, recomputed {order}")


def _check_c_point(rec, fails):
    m, q = _fr(rec["m"]), _fr(rec["q"])
    x1, x2, x3, x4 = (_fr(c) for c in rec["coords"])
    if (1 + m * m) * x1**2 + 2 * m * x1 * x4 + x4**2 != x2**2:
        fails.append("first quadric of C_(m,q) fails")
    if (1 + m * m) * x1**2 + 2 * (m - q) * x1 * x4 + (1 + q * q) * x4**2 != x3**2:
        fails.append("second quadric of C_(m,q) fails")


def _check_cq_point(rec, fails):
    q = _fr(rec["q"])
    x1, x2, x3, x4, x5 = (_fr(c) for c in rec["coords"])
    if x1**2 + x2**2 != x3**2:
        fails.append("x1^2 + x2^2 = x3^2 fails")
    if (x1 - q * x5) ** 2 + x2**2 != x4**2:
        fails.append("(x1 - q x5)^2 + x2^2 = x4^2 fails")
    if x2**2 != x1 * x5:
        fails.append("x2^2 = x1 x5 fails")


_CHECKS = {
    "triangle": _check_triangle,
    "curve": _check_curve,
    "ec_point": _check_ec_point,
    "c_point": _check_c_point,
    "cq_point": _check_cq_point,
}


def verify_record(rec) -> List[str]:
    fails: List[str] = []
    check = _CHECKS.get(rec.get("kind"))
    if check is None:
        return [f"unknown record kind {rec.get('kind')!r}"]
    try:
        check(rec, fails)
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        fails.append(f"malformed record: {exc!r}")
    return fails


def verify_report(report: Optional[dict]) -> dict:
    """Re-check every record; returns a summary report."""
    records = (report or {}).get("records", [])
    results = []
    for i, rec in enumerate(records):
        fails = verify_record(rec)
        results.append({"index": i, "kind": rec.get("kind"), "ok": not fails, "failures": fails})
    failed = sum(not r["ok"] for r in results)
    if report and report.get("schema") not in (None, SCHEMA):
        failed += 1
        results.append({"index": None, "kind": "schema", "ok": False, "failures": ["unknown schema"]})
    return {
        "schema": SCHEMA,
        "command": "verify",
        "checked": len(records),
        "passed": len(records) - sum(not r["ok"] for r in results if r["index"] is not None),
        "failed": failed,
        "results": results,
    }
