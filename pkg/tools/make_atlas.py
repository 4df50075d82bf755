#!/usr/bin/env python3
"""Regenerates the bundled exceptional-orbit data file from first principles.

Each record names an orbit by its minimal Levi support and the orbit induced
there (regular unless a partition or a distinguished-orbit selector says
otherwise).  The ambient weighted diagram is never copied from a table: the
support is located inside the ambient Dynkin diagram, the support's own
weighted diagram is transported through the embedding, and the resulting
Cartan element is dominantized.  Pinned shapes plus the balance check
2*dim u(Q) = dim O for every stored polarization guard against mislabeling.

Run:  PYTHONPATH=src python tools/make_atlas.py [--report] [--out PATH]
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path

from orbitkit.orbits import (
    WeightedDiagram,
    grading,
    is_even,
    jm_marked_set,
    orbit_dimension,
    weighted_diagram_from_partition,
)
from orbitkit.parabolic import check_extremal_contraction, enumerate_symplectic_contractions
from orbitkit.roots import LieType, MarkedDiagram, SubdiagramId, build_root_system, cartan_matrix, classify_subdiagram

_DISTINGUISHED_COUNTS = {("G", 2): 2, ("F", 4): 4, ("E", 6): 3, ("E", 7): 6, ("E", 8): 11}


def distinguished_diagrams(t: LieType) -> list[WeightedDiagram]:
    """All {0,2} diagrams with dim g0 = dim g2, sorted by orbit dimension, descending."""
    out = []
    for bits in product((0, 2), repeat=t.rank):
        ws = WeightedDiagram.of(t, bits)
        gr = grading(ws)
        if gr.dim(0) == gr.dim(2):
            out.append(ws)
    out.sort(key=orbit_dimension, reverse=True)
    dims = [orbit_dimension(w) for w in out]
    if len(set(dims)) != len(dims):
        raise AssertionError(f"tied distinguished dimensions in {t}: {dims}")
    expected = _DISTINGUISHED_COUNTS[(t.family, t.rank)]
    if len(out) != expected:
        raise AssertionError(f"{t}: found {len(out)} distinguished diagrams, expected {expected}")
    return out


def factor_diagram(desc: tuple) -> WeightedDiagram:
    t = LieType.parse(desc[0])
    kind = desc[1]
    if kind == "reg":
        return WeightedDiagram.of(t, (2,) * t.rank)
    if kind == "part":
        return weighted_diagram_from_partition(t, desc[2])
    if kind == "dist":
        diags = distinguished_diagrams(t)
        idx = len(diags) - 1 if desc[2] == "min" else int(desc[2])
        return diags[idx]
    raise ValueError(f"unknown factor kind {kind!r}")


def find_support(amb: LieType, factor_types: list[LieType]) -> list[SubdiagramId]:
    """Lex-least node subset whose components realize the given factor types."""
    rs = build_root_system(amb)
    want = sorted(str(ft) for ft in factor_types)
    total = sum(ft.rank for ft in factor_types)
    for nodes in combinations(range(1, amb.rank + 1), total):
        comps = classify_subdiagram(rs, nodes)
        if sorted(str(c.classified_type) for c in comps) == want:
            return comps
    raise LookupError(f"no {'+'.join(want)} support inside {amb}")


def _solve(m: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(m)
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def ambient_weights(amb: LieType, parts: list[tuple[SubdiagramId, WeightedDiagram]]) -> WeightedDiagram:
    """Transport factor weights through the support embedding, then dominantize."""
    cart = cartan_matrix(amb)
    coeff: dict[int, Fraction] = {}
    for sub, fw in parts:
        nodes = sorted(sub.nodes)
        phi = sub.labeling_dicts()[0]
        m = [[Fraction(cart[a - 1][b - 1]) for b in nodes] for a in nodes]
        rhs = [Fraction(fw.weight(phi[a])) for a in nodes]
        for b, c in zip(nodes, _solve(m, rhs)):
            coeff[b] = c
    v = [sum((c * cart[j][b - 1] for b, c in coeff.items()), start=Fraction(0)) for j in range(amb.rank)]
    guard = 0
    while True:
        j = next((i for i, x in enumerate(v) if x < 0), None)
        if j is None:
            break
        cj = v[j]
        v = [v[a] - cj * cart[a][j] for a in range(amb.rank)]
        guard += 1
        if guard > 100000:
            raise AssertionError("dominantization did not terminate")
    weights = []
    for x in v:
        if x.denominator != 1 or int(x) not in (0, 1, 2):
            raise AssertionError(f"non-integral or out-of-range dominant weights {v}")
        weights.append(int(x))
    return WeightedDiagram.of(amb, weights)


@dataclass
class Plan:
    algebra: str
    label: str
    factors: list[tuple]
    pols: list[tuple[tuple[int, ...], int]]  # (marks, degree); empty -> enumerate
    resolvable: str
    pi1_order: int | None = None
    degrees_prov: str = "literature"
    marks_prov: str = "literature"
    pinned_weights: tuple[int, ...] | None = None
    pinned_jm: tuple[int, ...] | None = None


PLANS = [
    Plan("G2", "G2(a1)", [("G2", "dist", "min")], [((2,), 1), ((1,), 2)], "yes", pi1_order=6,
         pinned_weights=(0, 2)),
    Plan("F4", "F4(a3)", [("F4", "dist", "min")], [((2,), 1), ((3,), 4), ((1, 4), 6)], "yes", pi1_order=24,
         pinned_weights=(0, 2, 0, 0)),
    Plan("F4", "C3", [("C3", "reg")], [((3, 4), 1)], "yes", pinned_weights=(1, 0, 1, 2)),
    Plan("E6", "2A1", [("A1", "reg"), ("A1", "reg")], [((1,), 1), ((6,), 1)], "yes",
         pinned_weights=(1, 0, 0, 0, 0, 1)),
    Plan("E6", "A2+2A1", [("A2", "reg"), ("A1", "reg"), ("A1", "reg")], [((3,), 1), ((5,), 1)], "yes",
         pinned_weights=(0, 0, 1, 0, 1, 0)),
    Plan("E6", "A3", [("A3", "reg")], [((1, 2), 1), ((2, 6), 1)], "yes"),
    Plan("E6", "A4+A1", [("A4", "reg"), ("A1", "reg")], [((3, 5), 1)], "yes"),
    Plan("E6", "D4(a1)", [("D4", "part", (5, 3))], [((4,), 1), ((2, 5), 3)], "yes", pi1_order=6,
         pinned_jm=(4,)),
    Plan("E6", "D5(a1)", [("D5", "part", (7, 3))], [((2, 3, 6), 1), ((1, 2, 5), 1)], "yes"),
    Plan("E7", "D4(a1)+A1", [("D4", "part", (5, 3)), ("A1", "reg")], [((2, 7), 1)], "yes"),
    Plan("E7", "D5+A1", [("D5", "reg"), ("A1", "reg")], [((1, 3, 5), 1)], "yes"),
    Plan("E7", "D6(a1)", [("D6", "part", (9, 3))], [], "yes", marks_prov="computed", degrees_prov="computed"),
    Plan("E7", "A4+A1", [("A4", "reg"), ("A1", "reg")], [((2, 3), 2)], "no"),
    Plan("E7", "D5(a1)", [("D5", "part", (7, 3))], [((1, 2, 3), 2)], "no"),
    Plan("E7", "E7(a5)", [("E7", "dist", "min")], [((4, 7), 1), ((2, 3, 7), 3)], "yes", pi1_order=6,
         pinned_jm=(4, 7)),
    Plan("E8", "A4+A2+A1", [("A4", "reg"), ("A2", "reg"), ("A1", "reg")], [((3,), 1)], "yes"),
    Plan("E8", "A6+A1", [("A6", "reg"), ("A1", "reg")], [((4,), 1)], "yes"),
    Plan("E8", "D6(a1)", [("D6", "part", (9, 3))], [], "yes", marks_prov="computed", degrees_prov="computed"),
    Plan("E8", "E7(a1)", [("E7", "dist", 1)], [((1, 2, 3, 7, 8), 1)], "yes"),
    Plan("E8", "E8(a7)", [("E8", "dist", "min")], [((5,), 1), ((2, 3), 10)], "yes", pi1_order=120,
         pinned_jm=(5,)),
    Plan("E8", "D7(a2)", [("D7", "part", (9, 5))],
         [((1, 5), 1), ((2, 5), 1), ((1, 4), 2), ((3, 4), 2), ((3, 7), 2), ((5, 7), 2)], "yes", pi1_order=2),
    Plan("E8", "E6(a1)+A1", [("E6", "dist", 1), ("A1", "reg")], [((1, 2, 4), 2)], "no"),
    Plan("E8", "E7(a3)", [("E7", "dist", 3)], [((1, 2, 3, 4), 2)], "no"),
]


def build_record(plan: Plan, report: bool) -> dict:
    amb = LieType.parse(plan.algebra)
    factor_types = [LieType.parse(f[0]) for f in plan.factors]
    comps = find_support(amb, factor_types)
    diagrams = [factor_diagram(f) for f in plan.factors]
    by_type: dict[str, list[WeightedDiagram]] = {}
    for ft, fw in zip(factor_types, diagrams):
        by_type.setdefault(str(ft), []).append(fw)
    parts = [(c, by_type[str(c.classified_type)].pop()) for c in comps]
    ws = ambient_weights(amb, parts)

    if plan.pinned_weights is not None and ws.weights != plan.pinned_weights:
        raise AssertionError(f"{plan.algebra}/{plan.label}: weights {ws.weights} != pinned {plan.pinned_weights}")
    if plan.pinned_jm is not None and jm_marked_set(ws).sorted_marks() != plan.pinned_jm:
        raise AssertionError(f"{plan.algebra}/{plan.label}: JM {jm_marked_set(ws).sorted_marks()} != pinned {plan.pinned_jm}")

    dim = orbit_dimension(ws)
    pols = list(plan.pols)
    if not pols:
        pols = [(q.sorted_marks(), 1) for q in enumerate_symplectic_contractions(ws)]
        if not pols:
            raise AssertionError(f"{plan.algebra}/{plan.label}: enumeration found no contraction")
    if is_even(ws):
        jm = jm_marked_set(ws).sorted_marks()
        if not any(marks == jm for marks, _ in pols):
            pols.insert(0, (jm, 1))

    entries = []
    for marks, degree in sorted(pols):
        rep = check_extremal_contraction(ws, MarkedDiagram.of(amb, marks))
        if 2 * rep.dim_u_q != dim:
            raise AssertionError(
                f"{plan.algebra}/{plan.label}: marks {marks} unbalanced (2*{rep.dim_u_q} != {dim})")
        entries.append({"marks": list(marks), "degree": degree, "extremal": rep.passes})
        if report:
            print(f"    {marks}  degree {degree}  dim_u {rep.dim_u_q}  contains_jm {rep.contains_jm}"
                  f"  n_contained {rep.n_contained}  passes {rep.passes}")

    rec = {
        "algebra": plan.algebra,
        "label": plan.label,
        "weights": list(ws.weights),
        "dim": dim,
        "richardson": True,
        "resolvable": plan.resolvable,
        "polarizations": entries,
        "provenance": {
            "weights": "computed",
            "polarization_marks": plan.marks_prov,
            "degrees": plan.degrees_prov,
            "resolvable": "literature",
            "extremal": "computed",
        },
    }
    if plan.pi1_order is not None:
        rec["pi1_order"] = plan.pi1_order
        rec["provenance"]["pi1_order"] = "literature"
    if report:
        ev = "even" if is_even(ws) else "mixed"
        print(f"  {plan.algebra} {plan.label}: weights {ws.weights} dim {dim} {ev}"
              f" JM {jm_marked_set(ws).sorted_marks()}")
    return rec


def cross_report() -> None:
    """Balance matrix for the garbled table columns across their candidate orbits."""
    print("cross-assignment check (2*dim_u vs record dim):")
    for alg, marks in [("E7", (1, 2, 3, 7)), ("E8", (1, 2, 3, 7)), ("E8", (3,)), ("E8", (4,))]:
        amb = LieType.parse(alg)
        from orbitkit.parabolic import nilradical_roots
        du = len(nilradical_roots(MarkedDiagram.of(amb, marks)))
        print(f"  {alg} marks {marks}: 2*dim_u = {2 * du}")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--report", action="store_true")
    ap.add_argument("--out", default="src/orbitkit/data/atlas.json")
    args = ap.parse_args()

    if args.report:
        cross_report()
    records = [build_record(p, args.report) for p in PLANS]
    payload = {"atlas_version": 1, "records": records}
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(records)} records)")


if __name__ == "__main__":
    main()
