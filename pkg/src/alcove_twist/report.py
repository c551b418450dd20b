"""JSON-ready reports for each subcommand, plus their text rendering.

Every report is a plain dict with an ``ok`` flag; fractions are written as
``"p/q"`` strings so that output is byte-stable under ``sort_keys``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Sequence

from .alcove import (barycenter, fundamental_alcove_vertices, psi,
                     validate_alcove_automorphism, vertex_permutation)
from .newton import (NewtonPolygon, gl_cycle_type, gl_newton_polygon, levi_of,
                     m_nu, newton_twist, two_rho_pairing)
from .puiseux import WitnessReport, build_witness_central, build_witness_gl
from .rootsys import (SUPPORTED_KINDS, AmbientLattice, RootSystem,
                      build_root_system, classical_weyl_order,
                      coset_representatives, parse_group)
from .springer import (a_of, barycenter_identity, barycenter_point,
                       eigenvalue_check, find_regular_solution, is_regular,
                       psi_class, regular_twist_set)
from .weyl import DEFAULT_CAP, WeylElement, char_poly, enumerate_group, poly_to_str


def jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dumps(report: dict) -> str:
    return json.dumps(jsonable(report), sort_keys=True, indent=2) + "\n"


def _element(w: WeylElement) -> dict:
    return {"matrix": w.matrix, "word": w.word}


def _select_classes(rs: RootSystem, x: int | None):
    reps = coset_representatives(rs)
    if x is None:
        return reps
    hits = [c for c in reps if c.j == x]
    if not hits:
        raise ValueError(f"x = {x} is not a coset label of {rs.kind}; choose from {[c.j for c in reps]}")
    return hits


# psi ---------------------------------------------------------------------

def psi_report(kind: str, cap: int = DEFAULT_CAP) -> dict:
    rs = build_root_system(kind)
    reps = coset_representatives(rs)
    e = barycenter(rs).coords
    rows = []
    for mu in reps:
        w = psi(rs, mu, cap)
        moved = w(e)
        rows.append({
            "x": mu.j,
            "rep": mu.rep,
            "psi": _element(w),
            "order": w.order,
            "char_poly": poly_to_str(char_poly(w)),
            "vertex_permutation": vertex_permutation(rs, mu),
            "moves_barycenter": tuple(moved) == tuple(a - b for a, b in zip(e, mu.rep)),
            "alcove_automorphism": validate_alcove_automorphism(rs, mu),
        })
    images = {psi(rs, mu, cap).matrix for mu in reps}
    homomorphism = all(psi(rs, a, cap) * psi(rs, b, cap) == psi(rs, a + b, cap)
                       for a in reps for b in reps)
    checks = {
        "injective": len(images) == len(reps),
        "homomorphism": homomorphism,
        "moves_barycenter": all(r["moves_barycenter"] for r in rows),
        "alcove_automorphism": all(r["alcove_automorphism"] for r in rows),
    }
    return {"command": "psi", "type": rs.kind, "center_order": len(reps),
            "rows": rows, "checks": checks, "ok": all(checks.values())}


# alcove ------------------------------------------------------------------

def alcove_report(kind: str, cap: int = DEFAULT_CAP) -> dict:
    rs = build_root_system(kind)
    bary = barycenter(rs)
    u = barycenter_point(rs)
    rows = [{"x": mu.j, "rep": mu.rep, "psi_moves_u_to_xu": barycenter_identity(rs, mu)}
            for mu in coset_representatives(rs)]
    checks = {
        "barycenter_interior": bary.is_interior(rs),
        "barycenter_regular": is_regular(rs, u),
        "psi_moves_u_to_xu": all(r["psi_moves_u_to_xu"] for r in rows),
    }
    return {
        "command": "alcove", "type": rs.kind, "marks": rs.marks, "J": rs.J,
        "vertices": [v.coords for v in fundamental_alcove_vertices(rs)],
        "barycenter": bary.coords, "walls": bary.walls(rs), "torus_point": u.coords,
        "rows": rows, "checks": checks, "ok": all(checks.values()),
    }


# springer ----------------------------------------------------------------

def springer_report(kind: str, x: int | None = None, cap: int = DEFAULT_CAP,
                    denom_bound: int = 60, samples: int = 100, seed: int = 0) -> dict:
    rs = build_root_system(kind)
    group = enumerate_group(rs, cap)
    rows = []
    for mu in _select_classes(rs, x):
        w = psi(rs, mu, cap)
        twists = regular_twist_set(rs, mu, group)
        found = {t.matrix for t in twists}
        cls = psi_class(rs, mu)
        stray = sorted(found - cls)[:3] + sorted(cls - found)[:3]
        point = find_regular_solution(rs, w, mu, denom_bound, samples, seed)
        row = {
            "x": mu.j,
            "a": a_of(rs, mu),
            "twist_set_size": len(found),
            "psi_class_size": len(cls),
            "nonempty": bool(found),
            "single_class": found == cls,
            "contains_psi": w.matrix in found,
            "eigenvalues": eigenvalue_check(rs, mu),
            "barycenter_identity": barycenter_identity(rs, mu),
            "regular_point": point.coords if point is not None else None,
        }
        row["ok"] = all([row["nonempty"], row["single_class"], row["contains_psi"],
                         row["eigenvalues"], row["barycenter_identity"], point is not None])
        if not row["ok"]:
            row["offending_w"] = stray
        rows.append(row)
    return {"command": "springer", "type": rs.kind, "weyl_order": len(group),
            "seed": seed, "rows": rows, "ok": all(r["ok"] for r in rows)}


# newton ------------------------------------------------------------------

def read_poly(path: str) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "n" not in data or "coeffs" not in data:
        raise ValueError("polynomial file needs keys 'n' and 'coeffs'")
    n = int(data["n"])
    coeffs = data["coeffs"]
    if len(coeffs) != n:
        raise ValueError(f"expected {n} coefficients c_0..c_{n - 1}, got {len(coeffs)}")
    for c in coeffs:
        for term in c:
            if len(term) != 3 or int(term[0]) != term[0]:
                raise ValueError(f"bad term {term}: expected [exp:int, re, im]")
    return data


def poly_orders(data: dict) -> list[int | None]:
    """Order of each coefficient; ``None`` for the zero coefficient."""
    out = []
    for c in data["coeffs"]:
        sums: dict[int, tuple[Fraction, Fraction]] = {}
        for exp, re, im in c:
            a, b = sums.get(int(exp), (Fraction(0), Fraction(0)))
            sums[int(exp)] = (a + Fraction(re), b + Fraction(im))
        live = [e for e, (a, b) in sums.items() if a or b]
        out.append(min(live) if live else None)
    return out


def _polygon_json(poly: NewtonPolygon) -> dict:
    return {"n": poly.n, "blocks": [[s, d] for s, d in poly.blocks]}


def _twist_json(rs: RootSystem, amb: AmbientLattice, nu: Sequence[Fraction]) -> dict:
    np = levi_of(rs, amb, nu)
    tw = newton_twist(np)
    return {
        "nu": np.nu,
        "levi": np.levi,
        "components": [list(c) for c in tw.mu.components],
        "classes": [[c.rs.kind, c.j] for c in tw.mu.classes],
        "lift": tw.mu.lift,
        "w": _element(tw.element),
        "ambient_matrix": tw.ambient_matrix,
        "char_poly": poly_to_str(tw.char_poly),
        "order": tw.order,
        "cycle_type": tw.cycle_type,
        "label": tw.label,
        "m_nu": m_nu(rs, amb, np.nu),
        "two_rho_pairing": two_rho_pairing(rs, amb, np.nu),
    }


def newton_report(kind: str, nu: Sequence | None = None, poly_path: str | None = None) -> dict:
    rs, amb = parse_group(kind)
    out: dict = {"command": "newton", "type": amb.name}
    checks = {}
    if poly_path is not None:
        if not amb.name.startswith("GL"):
            raise ValueError("--poly needs a GLn type")
        data = read_poly(poly_path)
        if data["n"] != amb.n:
            raise ValueError(f"polynomial degree {data['n']} does not match {amb.name}")
        poly = gl_newton_polygon(poly_orders(data))
        out["polygon"] = _polygon_json(poly)
        out["predicted_cycle_type"] = gl_cycle_type(poly)
        nu = poly.nu()
    elif nu is None:
        raise ValueError("newton needs --nu or --poly")
    tw = _twist_json(rs, amb, nu)
    out["twist"] = tw
    checks["m_nu_equals_two_rho"] = tw["m_nu"] == tw["two_rho_pairing"]
    if "predicted_cycle_type" in out:
        checks["cycle_type_matches_polygon"] = tuple(out["predicted_cycle_type"]) == tuple(tw["cycle_type"])
    out["checks"] = checks
    out["ok"] = all(checks.values())
    return out


# witness -----------------------------------------------------------------

def polygon_from_nu(nu: Sequence[Fraction]) -> NewtonPolygon:
    blocks: dict[Fraction, int] = {}
    for v in nu:
        blocks[Fraction(v)] = blocks.get(Fraction(v), 0) + 1
    return NewtonPolygon(tuple(sorted(blocks.items())), len(nu))


def witness_json(rep: WitnessReport) -> dict:
    return {
        "group": rep.group,
        "nu": rep.nu,
        "coords": [s.to_json() for s in rep.coords],
        "val": [s.val() for s in rep.coords],
        "h_ambient": rep.h_ambient,
        "h": rep.h.matrix,
        "cycle_type": rep.cycle_type,
        "w_nu": _element(rep.twist.element),
        "checks": rep.checks,
    }


def witness_report(kind: str, nu: Sequence | None = None, poly_path: str | None = None) -> dict:
    rs, amb = parse_group(kind)
    is_gl = amb.name.startswith("GL")
    if poly_path is not None:
        if not is_gl:
            raise ValueError("--poly needs a GLn type")
        data = read_poly(poly_path)
        if data["n"] != amb.n:
            raise ValueError(f"polynomial degree {data['n']} does not match {amb.name}")
        rep = build_witness_gl(gl_newton_polygon(poly_orders(data)))
    elif nu is None:
        raise ValueError("witness needs --nu or --poly")
    else:
        np = levi_of(rs, amb, nu)
        if np.is_central():
            rep = build_witness_central(rs, amb, np.nu)
        elif is_gl:
            rep = build_witness_gl(polygon_from_nu(np.nu))
        else:
            raise ValueError("witnesses for non-central nu are only built for GLn")
    body = witness_json(rep)
    return {"command": "witness", "type": amb.name, "witness": body, "ok": rep.ok}


# tables ------------------------------------------------------------------

TABLE_COLUMNS = ("type", "rank", "weyl_order", "center_order", "det_cartan",
                 "psi_char_polys", "twist_class_sizes", "eigenvalue_checks", "ok")


def table_rows(max_rank: int, cap: int = DEFAULT_CAP) -> list[dict]:
    rows = []
    for kind in SUPPORTED_KINDS:
        rs = build_root_system(kind)
        if rs.l > max_rank:
            continue
        reps = coset_representatives(rs)
        row = {
            "type": kind, "rank": rs.l,
            "weyl_order": classical_weyl_order(kind),
            "center_order": len(reps),
            "det_cartan": rs.determinant,
            "psi_char_polys": None, "twist_class_sizes": None, "eigenvalue_checks": None,
        }
        if classical_weyl_order(kind) <= cap:
            group = enumerate_group(rs, cap)
            row["weyl_order"] = len(group)
            row["psi_char_polys"] = [poly_to_str(char_poly(psi(rs, mu, cap))) for mu in reps]
            sizes, consistent = [], True
            for mu in reps:
                found = {t.matrix for t in regular_twist_set(rs, mu, group)}
                sizes.append(len(found))
                consistent &= found == psi_class(rs, mu)
            row["twist_class_sizes"] = sizes
            row["eigenvalue_checks"] = [eigenvalue_check(rs, mu) for mu in reps]
            row["ok"] = (consistent and all(row["eigenvalue_checks"])
                         and row["weyl_order"] == classical_weyl_order(kind)
                         and row["det_cartan"] == row["center_order"])
        else:
            row["ok"] = row["det_cartan"] == row["center_order"]
        rows.append(row)
    return rows


def table_report(max_rank: int, cap: int = DEFAULT_CAP) -> dict:
    rows = table_rows(max_rank, cap)
    return {"command": "table", "max_rank": max_rank, "cap": cap,
            "rows": rows, "ok": all(r["ok"] for r in rows)}


def table_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for r in rows:
        writer.writerow([_cell(r[c]) for c in TABLE_COLUMNS])
    return buf.getvalue()


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ";".join(_cell(x) for x in v)
    return str(v)


# text rendering ------------------------------------------------------------

def render_text(report: dict) -> str:
    """Human-readable view computed from the JSON form only."""
    data = jsonable(report)
    lines = []
    for key in sorted(data):
        val = data[key]
        if key == "rows" and isinstance(val, list) and val:
            cols = sorted({c for r in val for c in r})
            lines.append("rows:")
            lines.append("  " + " | ".join(cols))
            for r in val:
                lines.append("  " + " | ".join(_compact(r.get(c)) for c in cols))
        elif isinstance(val, dict):
            lines.append(f"{key}:")
            for k in sorted(val):
                lines.append(f"  {k}: {_compact(val[k])}")
        else:
            lines.append(f"{key}: {_compact(val)}")
    return "\n".join(lines) + "\n"


def _compact(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return "-" if v is None else str(v)
