"""Command line front end for the orbit toolkit.

Subcommands cover single-orbit reports, resolution search, polarization
classes and degrees, two-sided move verification, the matrix oracle, and
validation of the bundled data file.  Output is deterministic: fixed node
ordering, fixed formatting, and --json mirrors exactly the verdicts of the
human-readable text.

Exit codes: 0 success, 2 a requested check failed, 3 bad input,
4 missing data (unknown orbit label or unanchored degree).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .atlas import (
    AtlasError,
    OrbitRecord,
    atlas_anchors,
    classical_anchor,
    component_anchors,
    find_record,
    load_atlas,
)
from .classical import (
    _levi_flag_for_iii_b_3,
    admits_symplectic_resolution_classical,
    flag_to_marked,
    parse_partition,
    theta_split,
    validate_partition,
)
from .flops import (
    MODE_HIRAI,
    DegreeConsistencyError,
    absolute_degrees,
    explore,
    graph_to_dot,
    graph_to_json_dict,
    verify_flop_structure,
)
from .oracle import OracleError, richardson_from_flag, richardson_jordan_type
from .orbits import (
    WeightedDiagram,
    is_even,
    jm_marked_set,
    orbit_dimension,
    weighted_diagram_from_partition,
)
from .parabolic import (
    check_extremal_contraction,
    enumerate_symplectic_contractions,
    nilradical_roots,
)
from .roots import LieType, MarkedDiagram, parse_nodes

EXIT_OK = 0
EXIT_CHECK_FAILED = 2
EXIT_INPUT = 3
EXIT_NO_DATA = 4


class CliError(Exception):
    """Input or data problem carrying the intended exit code."""

    def __init__(self, message: str, code: int = EXIT_INPUT) -> None:
        super().__init__(message)
        self.code = code


def _marks_str(nodes: Sequence[int] | frozenset[int]) -> str:
    items = sorted(nodes)
    if not items:
        return "(none)"
    return ",".join(f"a{i}" for i in items)


def _partition_str(parts: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in parts) + "]"


def render_weights(ws: WeightedDiagram) -> list[str]:
    """Weights along the chain, branch node dropped to a second line."""
    t = ws.lie_type
    if t.family == "E":
        chain = [1] + list(range(3, t.rank + 1))
        first = " ".join(str(ws.weight(i)) for i in chain)
        # node 2 hangs below node 4, the third chain position
        return [first, " " * 4 + str(ws.weight(2))]
    if t.family == "D":
        chain = list(range(1, t.rank))
        first = " ".join(str(ws.weight(i)) for i in chain)
        # node n hangs below node n-2
        return [first, " " * (2 * (t.rank - 3)) + str(ws.weight(t.rank))]
    return [" ".join(str(ws.weight(i)) for i in range(1, t.rank + 1))]


def _degree_str(value: Fraction | int) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else str(f)


def _load_records(path: str | None) -> list[OrbitRecord]:
    try:
        return load_atlas(path)
    except FileNotFoundError as exc:
        raise CliError(f"atlas file not found: {exc}", EXIT_INPUT)
    except AtlasError as exc:
        raise CliError(f"atlas failed validation: {exc}", EXIT_CHECK_FAILED)


def _parse_lie_type(text: str) -> LieType:
    try:
        return LieType.parse(text)
    except ValueError as exc:
        raise CliError(str(exc))


def _resolve_orbit(
    t: LieType, spec: str, atlas_path: str | None
) -> tuple[WeightedDiagram, tuple[int, ...] | None, OrbitRecord | None]:
    """An orbit is a partition for classical types, a data-file label otherwise."""
    if spec.startswith("["):
        if t.family not in "ABCD":
            raise CliError(f"{t} takes an orbit label, not a partition")
        try:
            parts = parse_partition(spec)
            validate_partition(t, parts)
        except ValueError as exc:
            raise CliError(str(exc))
        return weighted_diagram_from_partition(t, parts), parts, None
    if t.family in "ABCD":
        raise CliError(f"{t} takes a partition in brackets, e.g. [3,2,2]")
    records = _load_records(atlas_path)
    try:
        rec = find_record(records, t, spec)
    except KeyError:
        known = ", ".join(sorted(r.label for r in records if r.algebra == t))
        raise CliError(f"no record for {t} orbit {spec!r} (known: {known})", EXIT_NO_DATA)
    return rec.weights, None, rec


def _parse_marks(t: LieType, text: str) -> MarkedDiagram:
    try:
        return MarkedDiagram(t, parse_nodes(text, t))
    except ValueError as exc:
        raise CliError(str(exc))


def _emit(args: argparse.Namespace, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------- orbit-info


def cmd_orbit_info(args: argparse.Namespace) -> int:
    t = _parse_lie_type(args.algebra)
    ws, parts, rec = _resolve_orbit(t, args.orbit, args.atlas)
    dim = orbit_dimension(ws)
    even = is_even(ws)
    jm = jm_marked_set(ws)
    theta = {
        k: sorted(i for i in range(1, t.rank + 1) if ws.weight(i) == v)
        for k, v in (("theta0", 0), ("theta1", 1), ("theta2", 2))
    }

    lines = [f"algebra: {t}"]
    payload: dict = {"algebra": str(t)}
    if parts is not None:
        lines.append(f"orbit: {_partition_str(parts)}")
        payload["orbit"] = list(parts)
    else:
        lines.append(f"orbit: {rec.label}")
        payload["orbit"] = rec.label
    lines.append("weights:")
    lines.extend("  " + row for row in render_weights(ws))
    lines.append(f"dimension: {dim}")
    lines.append(f"even: {'yes' if even else 'no'}")
    lines.append(f"jm marks: {_marks_str(jm.marks)}")
    for key in ("theta0", "theta1", "theta2"):
        lines.append(f"{key}: {_marks_str(theta[key])}")
    payload.update(
        weights=list(ws.weights),
        dim=dim,
        even=even,
        jm_marks=sorted(jm.marks),
        theta=theta,
    )

    if parts is not None:
        ok, tag = admits_symplectic_resolution_classical(t, parts)
        split = theta_split(t, parts)
        for idx, (one, two) in enumerate(split.splits, start=1):
            prefix = f"theta1 split {idx}" if len(split.splits) > 1 else "theta1 split"
            lines.append(f"{prefix}: I = {_marks_str(one)}  II = {_marks_str(two)}")
        verdict = "yes" if ok else "no"
        lines.append(f"resolvable: {verdict}" + (f" (case {tag})" if tag else ""))
        payload["splits"] = [[sorted(a), sorted(b)] for a, b in split.splits]
        payload["resolvable"] = verdict
        payload["clause"] = tag
    else:
        suffix = " (even)" if even and rec.resolvable == "yes" else ""
        lines.append(f"resolvable: {rec.resolvable}{suffix}")
        payload["resolvable"] = rec.resolvable
        if rec.pi1_order is not None:
            lines.append(f"fundamental group order: {rec.pi1_order}")
            payload["pi1_order"] = rec.pi1_order
    _emit(args, lines, payload)
    return EXIT_OK


# --------------------------------------------------------------- resolutions


def cmd_resolutions(args: argparse.Namespace) -> int:
    t = _parse_lie_type(args.algebra)
    ws, parts, rec = _resolve_orbit(t, args.orbit, args.atlas)
    dim = orbit_dimension(ws)
    reports = [
        check_extremal_contraction(ws, q) for q in enumerate_symplectic_contractions(ws)
    ]

    lines = [f"algebra: {t}"]
    lines.append(f"orbit: {_partition_str(parts) if parts is not None else rec.label}")
    lines.append(f"dimension: {dim}")
    payload: dict = {
        "algebra": str(t),
        "orbit": list(parts) if parts is not None else rec.label,
        "dim": dim,
    }
    if reports:
        lines.append(f"extremal contractions: {len(reports)}")
        for r in reports:
            lines.append(f"  {_marks_str(r.q.marks)}  dim u = {r.dim_u_q}")
    else:
        lines.append("extremal contractions: none")
    payload["extremal"] = [
        {"marks": sorted(r.q.marks), "dim_u": r.dim_u_q} for r in reports
    ]

    # residual degree-one polarizations that are not contractions of the orbit
    extremal_marks = {r.q.marks for r in reports}
    residual: list[frozenset[int]] = []
    if parts is not None:
        _, tag = admits_symplectic_resolution_classical(t, parts)
        if tag == "iii-b-3":
            flag = _levi_flag_for_iii_b_3(parts)
            residual = [md.marks for md in flag_to_marked(t, flag)]
    elif rec is not None:
        residual = [
            p.md.marks
            for p in rec.polarizations
            if p.degree == 1 and not p.extremal and p.md.marks not in extremal_marks
        ]
    if residual:
        lines.append("degree-one polarizations that do not dominate the orbit collapse:")
        for marks in sorted(residual, key=sorted):
            lines.append(f"  {_marks_str(marks)}")
    payload["non_dominating_degree_one"] = [sorted(m) for m in sorted(residual, key=sorted)]
    _emit(args, lines, payload)
    return EXIT_OK


# ------------------------------------------------------- polar-class/-degree


def _explore_with_anchors(
    t: LieType, md: MarkedDiagram, mode: str, atlas_path: str | None, seed: int
):
    try:
        graph = explore(md, mode=mode)
    except DegreeConsistencyError as exc:
        raise CliError(str(exc), EXIT_CHECK_FAILED)
    records = _load_records(atlas_path) if t.family in ("E", "F", "G") else None
    anchors = component_anchors(graph, records, seed=seed)
    try:
        result = absolute_degrees(graph, anchors)
    except DegreeConsistencyError as exc:
        raise CliError(str(exc), EXIT_CHECK_FAILED)
    return graph, result


def _component_lines(graph, result) -> list[str]:
    lines = []
    if result.anchored:
        lines.append(f"degrees: absolute (anchors: {'; '.join(_marks_str(a.marks) for a in result.anchors_used)})")
    else:
        lines.append("degrees: relative only (no anchor reaches this component)")
    for md in graph.nodes:
        lines.append(f"  {_marks_str(md.marks)}  degree {_degree_str(result.degrees[md])}")
    return lines


def _write_dot(args: argparse.Namespace, graph, result, lines: list[str]) -> None:
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graph_to_dot(graph, result) + "\n")
        lines.append(f"wrote {args.dot}")


def cmd_polar_class(args: argparse.Namespace) -> int:
    t = _parse_lie_type(args.algebra)
    md = _parse_marks(t, args.marks)
    graph, result = _explore_with_anchors(t, md, args.mode, args.atlas, args.seed)
    lines = [
        f"algebra: {t}",
        f"start: {_marks_str(md.marks)}",
        f"mode: {args.mode}",
        f"component size: {len(graph.nodes)}",
    ]
    lines.extend(_component_lines(graph, result))
    edges = sorted(
        graph.edges,
        key=lambda mv: (mv.source.sorted_marks(), mv.target.sorted_marks(), mv.pattern, sorted(mv.patch)),
    )
    lines.append(f"moves: {len(edges)}")
    for mv in edges:
        lines.append(
            f"  {_marks_str(mv.source.marks)} -> {_marks_str(mv.target.marks)}"
            f"  [{mv.pattern} {mv.flavor}, patch {_marks_str(mv.patch)}]"
        )
    _write_dot(args, graph, result, lines)
    _emit(args, lines, graph_to_json_dict(graph, result))
    return EXIT_OK


def cmd_polar_degree(args: argparse.Namespace) -> int:
    t = _parse_lie_type(args.algebra)
    md = _parse_marks(t, args.marks)
    # degree propagation always runs over the full move set so every
    # admissible anchor can reach the queried diagram
    graph, result = _explore_with_anchors(t, md, MODE_HIRAI, args.atlas, args.seed)
    lines = [f"algebra: {t}"]
    payload = graph_to_json_dict(graph, result)
    if result.anchored:
        deg = result.degrees[md]
        lines.append(f"degree of {_marks_str(md.marks)}: {_degree_str(deg)}")
        payload["degree"] = int(deg)
        code = EXIT_OK
    else:
        lines.append(f"degree of {_marks_str(md.marks)}: relative only (no anchor reaches this component)")
        payload["degree"] = None
        code = EXIT_NO_DATA
    lines.append(f"component size: {len(graph.nodes)} (full move set)")
    lines.extend(_component_lines(graph, result))
    _write_dot(args, graph, result, lines)
    _emit(args, lines, payload)
    return code


# --------------------------------------------------------------- flop-verify


_E6_PARTNERS = {1: 6, 6: 1, 3: 5, 5: 3}


def _parse_flop_args(tokens: list[str]) -> tuple[LieType, int, int]:
    toks = list(tokens)
    if len(toks) >= 2 and toks[0].isalpha() and toks[1].isdigit() and len(toks) >= 3:
        t = _parse_lie_type(toks[0] + toks[1])
        nodes = toks[2:]
    else:
        t = _parse_lie_type(toks[0])
        nodes = toks[1:]
    if not 1 <= len(nodes) <= 2:
        raise CliError("expected one node (partner inferred) or an explicit pair")
    try:
        vals = [int(x.lstrip("aA")) for x in nodes]
    except ValueError:
        raise CliError(f"cannot parse node tokens {nodes!r}")
    i = vals[0]
    if len(vals) == 2:
        return t, i, vals[1]
    if t.family == "A":
        return t, i, t.rank + 1 - i
    if t.family == "D" and i in (t.rank - 1, t.rank):
        return t, t.rank - 1, t.rank
    if t == LieType("E", 6) and i in _E6_PARTNERS:
        return t, i, _E6_PARTNERS[i]
    raise CliError(f"cannot infer a partner for node {i} in {t}")


def cmd_flop_verify(args: argparse.Namespace) -> int:
    t, i, j = _parse_flop_args(args.spec)
    try:
        report = verify_flop_structure(t, i, j)
    except ValueError as exc:
        raise CliError(str(exc))
    lines = [
        f"algebra: {t}",
        f"pair: a{report.pair[0]}, a{report.pair[1]}",
        f"move type: {report.flop_type}",
        "shared orbit weights:",
    ]
    lines.extend("  " + row for row in render_weights(report.diagram))
    lines.append(f"orbit dimension: {report.dim_orbit}")
    lines.append(f"ideal size: {report.dim_n}")
    lines.append(f"nilradical sizes: {report.dim_u_first}, {report.dim_u_second}")
    lines.append(f"intersection equals ideal: {'yes' if report.intersection_ok else 'no'}")
    lines.append(f"both sides balanced: {'yes' if report.balanced else 'no'}")
    if report.partition is not None:
        ok = "yes" if report.partition_ok else "no"
        lines.append(f"orbit partition: {_partition_str(report.partition)} (expected: {ok})")
    lines.append(f"result: {'pass' if report.passes else 'fail'}")
    _emit(args, lines, report.to_json_dict())
    return EXIT_OK if report.passes else EXIT_CHECK_FAILED


# ---------------------------------------------------------- oracle-richardson


def cmd_oracle_richardson(args: argparse.Namespace) -> int:
    t = _parse_lie_type(args.algebra)
    lines = [f"algebra: {t}"]
    payload: dict = {"algebra": str(t), "seed": args.seed}
    try:
        if args.parabolic.startswith("["):
            flag = list(parse_partition(args.parabolic))
            candidates = flag_to_marked(t, flag)
            if len(candidates) != 1:
                raise CliError(
                    f"flag {flag} is ambiguous in {t}; give marks instead "
                    f"({' or '.join(_marks_str(c.marks) for c in candidates)})"
                )
            md = candidates[0]
            lines.append(f"flag: {_partition_str(flag)}")
            payload["flag"] = flag
            partition = richardson_from_flag(t, flag, seed=args.seed)
        else:
            md = _parse_marks(t, args.parabolic)
            partition = richardson_jordan_type(t, md, seed=args.seed)
    except OracleError as exc:
        raise CliError(str(exc))
    except ValueError as exc:
        raise CliError(str(exc))
    lines.append(f"marks: {_marks_str(md.marks)}")
    lines.append(f"jordan type: {_partition_str(partition)}")
    payload["marks"] = sorted(md.marks)
    payload["jordan_type"] = list(partition)
    dim_u = len(nilradical_roots(md))
    dim_orbit = orbit_dimension(weighted_diagram_from_partition(t, partition))
    ok = 2 * dim_u == dim_orbit
    lines.append(f"dimension check: 2*dim u = {2 * dim_u}, orbit dimension = {dim_orbit} ({'ok' if ok else 'MISMATCH'})")
    payload.update(dim_u=dim_u, dim_orbit=dim_orbit, dimension_ok=ok)
    _emit(args, lines, payload)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


# -------------------------------------------------------------- atlas-validate


def cmd_atlas_validate(args: argparse.Namespace) -> int:
    records = _load_records(args.atlas)
    lines = [f"records: {len(records)}"]
    rows = []
    for rec in sorted(records, key=lambda r: (str(r.algebra), r.label)):
        lines.append(
            f"  {rec.algebra} {rec.label}: dim {rec.dim}, "
            f"{len(rec.polarizations)} polarizations, resolvable {rec.resolvable}: ok"
        )
        rows.append(
            {
                "algebra": str(rec.algebra),
                "label": rec.label,
                "dim": rec.dim,
                "polarizations": len(rec.polarizations),
                "resolvable": rec.resolvable,
                "ok": True,
            }
        )
    lines.append("all records pass")
    _emit(args, lines, {"count": len(records), "records": rows, "ok": True})
    return EXIT_OK


# ----------------------------------------------------------------- plumbing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--atlas", metavar="PATH", help="alternate orbit data file")
    common.add_argument("--seed", type=int, default=0, help="seed for oracle sampling")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="orbitkit",
        description="Symplectic resolutions and polarization degrees of nilpotent orbit closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit-info", parents=[common], help="weighted diagram, dimension, resolvability")
    p.add_argument("algebra", help="ambient simple type, e.g. B3 or E7")
    p.add_argument("orbit", help="partition like [3,2,2] for classical types, orbit label otherwise")
    p.set_defaults(func=cmd_orbit_info)

    p = sub.add_parser("resolutions", parents=[common], help="all extremal contractions of one orbit closure")
    p.add_argument("algebra")
    p.add_argument("orbit")
    p.set_defaults(func=cmd_resolutions)

    p = sub.add_parser("polar-class", parents=[common], help="connected component of a parabolic under moves")
    p.add_argument("algebra")
    p.add_argument("marks", help="marked nodes, e.g. a1,a4")
    p.add_argument("--mode", choices=["flops", "hirai"], default="hirai", help="which move set to apply")
    p.add_argument("--dot", metavar="PATH", help="write the component graph in DOT format")
    p.set_defaults(func=cmd_polar_class)

    p = sub.add_parser("polar-degree", parents=[common], help="generic degree of one parabolic collapse")
    p.add_argument("algebra")
    p.add_argument("marks")
    p.add_argument("--dot", metavar="PATH", help="write the component graph in DOT format")
    p.set_defaults(func=cmd_polar_degree)

    p = sub.add_parser("flop-verify", parents=[common], help="check the two-sided geometry of a move pair")
    p.add_argument("spec", nargs="+", help="'A 5 1', 'A5 1', or 'E6 3 5'")
    p.set_defaults(func=cmd_flop_verify)

    p = sub.add_parser("oracle-richardson", parents=[common], help="dense Jordan type of a nilradical, by matrices")
    p.add_argument("algebra")
    p.add_argument("parabolic", help="flag like [2,1,1,1] or marks like a3")
    p.set_defaults(func=cmd_oracle_richardson)

    p = sub.add_parser("atlas-validate", parents=[common], help="cross-check every bundled orbit record")
    p.set_defaults(func=cmd_atlas_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
