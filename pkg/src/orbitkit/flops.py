"""Moves between polarizations of a fixed nilpotent orbit.

Two marked diagrams give birational models of the same orbit closure exactly
when they are linked by local replacement rules acting inside maximal
unmarked-connected patches around marked nodes.  Each rule carries local
Springer degrees for its sides, so walking the move graph propagates exact
degree ratios; pinning any one node to an absolute degree pins the whole
connected component.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .roots import (
    LieType,
    MarkedDiagram,
    RootSystem,
    build_root_system,
    classify_subdiagram,
    maximal_patch,
)

log = logging.getLogger(__name__)

MODE_FLOPS = "flops"
MODE_HIRAI = "hirai"
_MODES = (MODE_FLOPS, MODE_HIRAI)


class DegreeConsistencyError(RuntimeError):
    """Conflicting degree ratios along two paths, or conflicting anchors."""


@dataclass(frozen=True)
class PatternSide:
    marks: frozenset[int]
    degree: int


@dataclass(frozen=True)
class Pattern:
    """Local replacement rule on a diagram of a fixed type.

    Any two sides are exchangeable; the side degrees are the local Springer
    degrees, so replacing side s by side t multiplies the degree by
    t.degree / s.degree.
    """

    id: str
    flavor: str
    sides: tuple[PatternSide, ...]
    degree_preserving: bool


def _side(marks: set[int], degree: int) -> PatternSide:
    return PatternSide(frozenset(marks), degree)


@lru_cache(maxsize=None)
def patterns_for(t: LieType, mode: str) -> tuple[Pattern, ...]:
    """Replacement rules whose whole diagram is of type t."""
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    fam, m = t.family, t.rank
    pats: list[Pattern] = []
    if fam == "A":
        for i in range(1, m // 2 + 1):
            pats.append(Pattern("R8", f"A{m}", (_side({i}, 1), _side({m + 1 - i}, 1)), True))
    elif fam == "B":
        if (m + 1) % 3 == 0:
            k = (m + 1) // 3
            pats.append(Pattern("R1B", f"B{m}", (_side({2 * k - 1}, 1), _side({2 * k}, 2)), False))
    elif fam == "C":
        if (m + 1) % 3 == 0:
            k = (m + 1) // 3
            pats.append(Pattern("R1C", f"C{m}", (_side({2 * k}, 1), _side({2 * k - 1}, 2)), False))
    elif fam == "D":
        if m == 4:
            pats.append(Pattern("R2", "D4", (_side({2}, 1), _side({3, 4}, 2)), False))
        if m % 3 == 1 and m >= 7:
            k = m // 3
            pats.append(Pattern("R3", f"D{m}", (_side({2 * k}, 1), _side({2 * k + 1}, 2)), False))
        if m % 2 == 1 and m >= 5:
            pats.append(Pattern("R9", f"D{m}", (_side({m - 1}, 1), _side({m}, 1)), True))
    elif fam == "G":
        pats.append(Pattern("R4", "G2", (_side({2}, 1), _side({1}, 2)), False))
    elif fam == "F":
        pats.append(Pattern("R5", "F4", (_side({2}, 1), _side({3}, 4), _side({1, 4}, 6)), False))
    elif fam == "E" and m == 6:
        pats.append(Pattern("R6", "E6", (_side({4}, 1), _side({2, 5}, 3)), False))
        pats.append(Pattern("R10", "E6,I", (_side({1}, 1), _side({6}, 1)), True))
        pats.append(Pattern("R10", "E6,II", (_side({3}, 1), _side({5}, 1)), True))
    elif fam == "E" and m == 8:
        pats.append(Pattern("R7", "E8", (_side({5}, 1), _side({2, 3}, 10)), False))
    if mode == MODE_FLOPS:
        pats = [p for p in pats if p.degree_preserving]
    return tuple(pats)


@dataclass(frozen=True)
class Move:
    source: MarkedDiagram
    target: MarkedDiagram
    pattern: str
    flavor: str
    patch: frozenset[int]
    ratio: Fraction  # degree(target) / degree(source)

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}  [{self.pattern} {self.flavor} on {{{','.join(f'a{x}' for x in sorted(self.patch))}}}, ratio {self.ratio}]"


def find_moves(rs: RootSystem, md: MarkedDiagram, mode: str = MODE_FLOPS) -> list[Move]:
    """All single-rule moves out of a marked diagram.

    Seeds are single marked nodes, plus marked pairs in full mode (the two-node
    rule sides); the patch around a seed must match a rule diagram exactly,
    with the seed landing on one side through some labeling.
    """
    if md.lie_type != rs.lie_type:
        raise ValueError(f"mixed ambient types {rs.lie_type} and {md.lie_type}")
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    marks = md.marks
    seeds: list[frozenset[int]] = [frozenset({x}) for x in sorted(marks)]
    if mode == MODE_HIRAI:
        seeds.extend(frozenset(p) for p in itertools.combinations(sorted(marks), 2))
    moves: list[Move] = []
    seen: set[tuple[frozenset[int], Fraction, frozenset[int]]] = set()
    for seed in seeds:
        patch = maximal_patch(rs, marks, seed)
        if not patch:
            continue
        for sub in classify_subdiagram(rs, patch):
            for pat in patterns_for(sub.classified_type, mode):
                if pat.id == "R2" and rs.lie_type != LieType("D", 4):
                    # the one-to-two branch rule needs the whole algebra, an
                    # embedded D4 patch does not carry it
                    log.debug("R2 skipped on embedded D4 patch %s in %s", sorted(patch), rs.lie_type)
                    continue
                for lab in sub.labeling_dicts():
                    image = frozenset(lab[x] for x in seed)
                    inv = {v: k for k, v in lab.items()}
                    for si, side in enumerate(pat.sides):
                        if image != side.marks:
                            continue
                        for ti, tside in enumerate(pat.sides):
                            if ti == si:
                                continue
                            new_marks = (marks - seed) | frozenset(inv[x] for x in tside.marks)
                            ratio = Fraction(tside.degree, side.degree)
                            key = (new_marks, ratio, patch)
                            if key in seen:
                                continue
                            seen.add(key)
                            moves.append(
                                Move(md, MarkedDiagram(rs.lie_type, new_marks), pat.id, pat.flavor, patch, ratio)
                            )
    moves.sort(key=lambda mv: (mv.target.sorted_marks(), mv.pattern, sorted(mv.patch)))
    return moves


@dataclass
class EquivalenceGraph:
    lie_type: LieType
    mode: str
    start: MarkedDiagram
    relative_degrees: dict[MarkedDiagram, Fraction]
    edges: list[Move]

    @property
    def nodes(self) -> list[MarkedDiagram]:
        return sorted(self.relative_degrees, key=lambda md: md.sorted_marks())

    def ratio(self, md: MarkedDiagram) -> Fraction:
        return self.relative_degrees[md]


def explore(start: MarkedDiagram, mode: str = MODE_FLOPS) -> EquivalenceGraph:
    """Connected component of the move graph through a marked diagram.

    Breadth-first in lexicographic order; relative degrees are propagated as
    exact fractions and any cycle giving two different values is an error, not
    a warning.
    """
    rs = build_root_system(start.lie_type)
    rel: dict[MarkedDiagram, Fraction] = {start: Fraction(1)}
    edges: list[Move] = []
    frontier = [start]
    while frontier:
        frontier.sort(key=lambda md: md.sorted_marks())
        new: list[MarkedDiagram] = []
        for md in frontier:
            for mv in find_moves(rs, md, mode):
                value = rel[md] * mv.ratio
                known = rel.get(mv.target)
                if known is None:
                    rel[mv.target] = value
                    new.append(mv.target)
                elif known != value:
                    raise DegreeConsistencyError(
                        f"degree ratio clash at {mv.target}: {known} on record, {value} via {mv}"
                    )
                edges.append(mv)
        frontier = new
    return EquivalenceGraph(start.lie_type, mode, start, rel, edges)


@dataclass(frozen=True)
class DegreeResult:
    anchored: bool
    degrees: dict[MarkedDiagram, Fraction]
    scale: Fraction | None
    anchors_used: tuple[MarkedDiagram, ...]


def absolute_degrees(
    graph: EquivalenceGraph, anchors: list[tuple[MarkedDiagram, int | Fraction]]
) -> DegreeResult:
    """Scale relative degrees by known absolute ones.

    Every anchor inside the component must give the same scale, and the scaled
    degrees must come out positive integers; otherwise the data is wrong and
    the computation fails loudly.  With no anchor in the component the result
    keeps the relative values and says so.
    """
    scale: Fraction | None = None
    used: list[MarkedDiagram] = []
    for md, deg in sorted(anchors, key=lambda a: a[0].sorted_marks()):
        if md not in graph.relative_degrees:
            continue
        s = Fraction(deg) / graph.relative_degrees[md]
        if scale is None:
            scale = s
        elif s != scale:
            raise DegreeConsistencyError(f"anchor {md} gives scale {s}, earlier anchors gave {scale}")
        used.append(md)
    if scale is None:
        return DegreeResult(False, dict(graph.relative_degrees), None, ())
    degrees = {md: r * scale for md, r in graph.relative_degrees.items()}
    for md, v in degrees.items():
        if v.denominator != 1 or v <= 0:
            raise DegreeConsistencyError(f"absolute degree of {md} comes out {v}, not a positive integer")
    return DegreeResult(True, degrees, scale, tuple(used))


@dataclass(frozen=True)
class FlopReport:
    lie_type: LieType
    pair: tuple[int, int]
    flop_type: str
    diagram: "WeightedDiagram"
    dim_orbit: int
    dim_n: int
    dim_u_first: int
    dim_u_second: int
    intersection_ok: bool
    balanced: bool
    partition: tuple[int, ...] | None
    partition_ok: bool | None

    @property
    def passes(self) -> bool:
        ok = self.intersection_ok and self.balanced
        if self.partition_ok is not None:
            ok = ok and self.partition_ok
        return ok

    def to_json_dict(self) -> dict:
        return {
            "algebra": str(self.lie_type),
            "pair": list(self.pair),
            "flop_type": self.flop_type,
            "weights": list(self.diagram.weights),
            "dim_orbit": self.dim_orbit,
            "dim_n": self.dim_n,
            "dim_u": [self.dim_u_first, self.dim_u_second],
            "intersection_ok": self.intersection_ok,
            "balanced": self.balanced,
            "partition": list(self.partition) if self.partition is not None else None,
            "partition_ok": self.partition_ok,
            "passes": self.passes,
        }


def verify_flop_structure(t: LieType | str, i: int, j: int) -> FlopReport:
    """Check the basic two-sided geometry of a degree-preserving move pair.

    The pair must be an A-chain mirror pair, the two spin nodes of an
    odd-rank D diagram, or an outer-symmetric E6 pair.  The weight-1 diagram
    on the pair is the shared orbit; the report checks that the two one-node
    parabolics are balanced polarizations of it meeting exactly in its ideal.
    """
    from .classical import partition_from_diagram
    from .orbits import WeightedDiagram, ideal_n, orbit_dimension
    from .parabolic import nilradical_roots

    t = LieType.parse(t)
    rank = t.rank
    i, j = sorted((i, j))
    expected_partition: tuple[int, ...] | None = None
    if t.family == "A" and j == rank + 1 - i and i != j:
        flop_type = "A"
        expected_partition = (2,) * i + (1,) * (rank + 1 - 2 * i)
    elif t.family == "D" and rank % 2 == 1 and rank >= 5 and (i, j) == (rank - 1, rank):
        flop_type = "D-spin"
        expected_partition = (2,) * (rank - 1) + (1, 1)
    elif t == LieType("E", 6) and (i, j) == (1, 6):
        flop_type = "E6,I"
    elif t == LieType("E", 6) and (i, j) == (3, 5):
        flop_type = "E6,II"
    else:
        raise ValueError(f"{t} nodes ({i},{j}) are not a mirror pair, a spin pair, or an E6 symmetric pair")
    weights = tuple(1 if a in (i, j) else 0 for a in range(1, rank + 1))
    ws = WeightedDiagram(t, weights)
    dim_orbit = orbit_dimension(ws)
    n_roots = ideal_n(ws)
    u_first = nilradical_roots(MarkedDiagram.of(t, [i]))
    u_second = nilradical_roots(MarkedDiagram.of(t, [j]))
    intersection_ok = n_roots == (u_first & u_second)
    balanced = 2 * len(u_first) == dim_orbit and 2 * len(u_second) == dim_orbit
    partition = partition_from_diagram(ws) if t.family in "ABCD" else None
    partition_ok = None
    if expected_partition is not None:
        partition_ok = partition == expected_partition
    return FlopReport(
        t,
        (i, j),
        flop_type,
        ws,
        dim_orbit,
        len(n_roots),
        len(u_first),
        len(u_second),
        intersection_ok,
        balanced,
        partition,
        partition_ok,
    )


def graph_to_json_dict(graph: EquivalenceGraph, result: DegreeResult | None = None) -> dict:
    degrees = result.degrees if result is not None else graph.relative_degrees
    anchored = result.anchored if result is not None else False
    return {
        "algebra": str(graph.lie_type),
        "mode": graph.mode,
        "start": list(graph.start.sorted_marks()),
        "anchored": anchored,
        "nodes": [
            {"marks": list(md.sorted_marks()), "degree": str(degrees[md])}
            for md in graph.nodes
        ],
        "edges": [
            {
                "source": list(mv.source.sorted_marks()),
                "target": list(mv.target.sorted_marks()),
                "pattern": mv.pattern,
                "flavor": mv.flavor,
                "patch": sorted(mv.patch),
                "ratio": str(mv.ratio),
            }
            for mv in sorted(
                graph.edges,
                key=lambda mv: (mv.source.sorted_marks(), mv.target.sorted_marks(), mv.pattern, sorted(mv.patch)),
            )
        ],
    }


def graph_to_dot(graph: EquivalenceGraph, result: DegreeResult | None = None) -> str:
    """Graphviz rendering with one undirected edge per move pair."""
    degrees = result.degrees if result is not None else graph.relative_degrees
    lines = ["graph moves {", "  node [shape=box];"]
    names = {md: ",".join(f"a{x}" for x in md.sorted_marks()) for md in graph.nodes}
    for md in graph.nodes:
        lines.append(f'  "{names[md]}" [label="{names[md]}\\ndeg {degrees[md]}"];')
    drawn: set[tuple[str, str, str, tuple[int, ...]]] = set()
    for mv in sorted(
        graph.edges,
        key=lambda mv: (mv.source.sorted_marks(), mv.target.sorted_marks(), mv.pattern, sorted(mv.patch)),
    ):
        a, b = names[mv.source], names[mv.target]
        key = (min(a, b), max(a, b), mv.pattern, tuple(sorted(mv.patch)))
        if key in drawn:
            continue
        drawn.add(key)
        lines.append(f'  "{a}" -- "{b}" [label="{mv.pattern} {mv.flavor}"];')
    lines.append("}")
    return "\n".join(lines)
