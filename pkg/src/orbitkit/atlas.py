"""Bundled data on exceptional nilpotent orbits, cross-checked at load time.

Every record is validated against the combinatorics before it is handed out:
claimed dimensions must match the weighted diagram, every polarization must
balance 2*dim u(Q) = dim O, extremality claims are re-verified, and even
orbits must list their weight-two marked set as a degree-one polarization.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import TYPE_CHECKING

from .classical import partition_from_diagram
from .orbits import WeightedDiagram, is_even, jm_marked_set, orbit_dimension, weighted_diagram_from_partition
from .parabolic import check_extremal_contraction, nilradical_roots
from .roots import LieType, MarkedDiagram

if TYPE_CHECKING:
    from .flops import EquivalenceGraph

ATLAS_VERSION = 1

_RESOLVABLE = ("yes", "no", "unknown")
_TOP_FIELDS = {"atlas_version", "records"}
_RECORD_FIELDS = {"algebra", "label", "weights", "dim", "pi1_order", "richardson",
                  "resolvable", "polarizations", "provenance"}
_POL_FIELDS = {"marks", "degree", "extremal"}


class AtlasError(RuntimeError):
    """Malformed or internally inconsistent orbit data file."""


@dataclass(frozen=True)
class Polarization:
    md: MarkedDiagram
    degree: int | None
    extremal: bool


@dataclass(frozen=True)
class OrbitRecord:
    algebra: LieType
    label: str
    weights: WeightedDiagram
    dim: int | None
    pi1_order: int | None
    richardson: bool | None
    resolvable: str
    polarizations: tuple[Polarization, ...]
    provenance: dict

    def polarization(self, marks) -> Polarization | None:
        want = frozenset(marks)
        for pol in self.polarizations:
            if pol.md.marks == want:
                return pol
        return None


def required_records() -> list[tuple[str, str]]:
    """Orbits the bundled file must cover."""
    return [
        ("G2", "G2(a1)"),
        ("F4", "F4(a3)"), ("F4", "C3"),
        ("E6", "2A1"), ("E6", "A2+2A1"), ("E6", "A3"), ("E6", "A4+A1"),
        ("E6", "D4(a1)"), ("E6", "D5(a1)"),
        ("E7", "D4(a1)+A1"), ("E7", "D5+A1"), ("E7", "D6(a1)"),
        ("E7", "A4+A1"), ("E7", "D5(a1)"), ("E7", "E7(a5)"),
        ("E8", "A4+A2+A1"), ("E8", "A6+A1"), ("E8", "D6(a1)"), ("E8", "E7(a1)"),
        ("E8", "E8(a7)"), ("E8", "D7(a2)"), ("E8", "E6(a1)+A1"), ("E8", "E7(a3)"),
    ]


def _warn_unknown(kind: str, present, known) -> None:
    for key in sorted(set(present) - known):
        warnings.warn(f"atlas: ignoring unknown {kind} field {key!r}", stacklevel=3)


def _parse_record(raw: dict) -> OrbitRecord:
    _warn_unknown("record", raw, _RECORD_FIELDS)
    try:
        algebra = LieType.parse(raw["algebra"])
        label = str(raw["label"])
        weights = WeightedDiagram.of(algebra, raw["weights"])
    except (KeyError, ValueError, TypeError) as exc:
        raise AtlasError(f"record {raw.get('algebra')}/{raw.get('label')}: {exc}") from exc

    def fail(check: str) -> AtlasError:
        return AtlasError(f"record {algebra}/{label}: {check}")

    dim = raw.get("dim")
    if dim is not None and dim != orbit_dimension(weights):
        raise fail(f"dim {dim} != orbit dimension {orbit_dimension(weights)} of weights")
    resolvable = raw.get("resolvable", "unknown")
    if resolvable not in _RESOLVABLE:
        raise fail(f"resolvable {resolvable!r} not one of {_RESOLVABLE}")

    pols = []
    for p in raw.get("polarizations", ()):
        _warn_unknown("polarization", p, _POL_FIELDS)
        try:
            md = MarkedDiagram.of(algebra, p["marks"])
        except (KeyError, ValueError, TypeError) as exc:
            raise fail(f"bad polarization {p!r}: {exc}") from exc
        degree = p.get("degree")
        if degree is not None and (not isinstance(degree, int) or degree < 1):
            raise fail(f"polarization {sorted(md.marks)}: degree {degree!r} not a positive integer")
        extremal = bool(p.get("extremal", False))
        if 2 * len(nilradical_roots(md)) != orbit_dimension(weights):
            raise fail(f"polarization {sorted(md.marks)} unbalanced against weights")
        if extremal and not check_extremal_contraction(weights, md).passes:
            raise fail(f"polarization {sorted(md.marks)} claims extremal but the check fails")
        pols.append(Polarization(md, degree, extremal))

    if is_even(weights):
        jm = jm_marked_set(weights)
        if not any(pol.md.marks == jm.marks and pol.degree == 1 for pol in pols):
            raise fail("even orbit without its weight-two marked set as a degree-1 polarization")
    if any(pol.extremal for pol in pols) and resolvable != "yes":
        raise fail("extremal polarization recorded but resolvable != yes")

    return OrbitRecord(
        algebra=algebra,
        label=label,
        weights=weights,
        dim=dim,
        pi1_order=raw.get("pi1_order"),
        richardson=raw.get("richardson"),
        resolvable=resolvable,
        polarizations=tuple(pols),
        provenance=dict(raw.get("provenance", {})),
    )


def load_atlas(path: str | Path | None = None, require_complete: bool = True) -> list[OrbitRecord]:
    """Parse and cross-check an orbit data file (bundled one by default)."""
    if path is None:
        text = resources.files("orbitkit").joinpath("data/atlas.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AtlasError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise AtlasError("top level must be an object")
    _warn_unknown("top-level", payload, _TOP_FIELDS)
    version = payload.get("atlas_version")
    if version != ATLAS_VERSION:
        raise AtlasError(f"atlas_version {version!r} unsupported (need {ATLAS_VERSION})")
    records = [_parse_record(raw) for raw in payload.get("records", [])]

    seen = {(str(r.algebra), r.label) for r in records}
    if len(seen) != len(records):
        raise AtlasError("duplicate (algebra, label) pairs")
    if require_complete:
        gaps = [pair for pair in required_records() if pair not in seen]
        if gaps:
            raise AtlasError(f"missing required records: {gaps}")
    return records


def find_record(records: list[OrbitRecord], algebra: LieType | str, label: str) -> OrbitRecord:
    t = LieType.parse(algebra)
    for rec in records:
        if rec.algebra == t and rec.label == label:
            return rec
    raise KeyError(f"no record {t}/{label}")


def atlas_anchors(t: LieType | str, records: list[OrbitRecord] | None = None) -> list[tuple[MarkedDiagram, int]]:
    """Known absolute degrees for marked diagrams of an exceptional algebra."""
    t = LieType.parse(t)
    recs = load_atlas() if records is None else records
    out = []
    for rec in recs:
        if rec.algebra != t:
            continue
        for pol in rec.polarizations:
            if pol.degree is not None:
                out.append((pol.md, pol.degree))
    return sorted(out, key=lambda a: a[0].sorted_marks())


def classical_anchor(md: MarkedDiagram, seed: int = 0) -> int | None:
    """Degree-1 anchor for a classical marked diagram, when one can be certified.

    Tier one: if doubling the marks gives the diagram of a valid partition,
    md is the weight-two set of an even orbit and resolves it with degree 1.
    Tier two: compute the Richardson orbit with the matrix oracle and accept
    when md passes the full contraction check against it.
    """
    t = md.lie_type
    even_weights = tuple(2 if i in md.marks else 0 for i in range(1, t.rank + 1))
    if partition_from_diagram(WeightedDiagram.of(t, even_weights)) is not None:
        return 1
    from .oracle import OracleError, richardson_jordan_type

    try:
        parts = richardson_jordan_type(t, md, seed=seed)
    except OracleError:
        return None
    ws = weighted_diagram_from_partition(t, parts)
    if check_extremal_contraction(ws, md).passes:
        return 1
    return None


def component_anchors(
    graph: "EquivalenceGraph",
    records: list[OrbitRecord] | None = None,
    seed: int = 0,
) -> list[tuple[MarkedDiagram, int]]:
    """Absolute-degree anchors available inside one explored component."""
    t = graph.lie_type
    if t.family in ("E", "F", "G"):
        member = set(graph.relative_degrees)
        return [(md, deg) for md, deg in atlas_anchors(t, records) if md in member]
    out = []
    for md in graph.nodes:
        deg = classical_anchor(md, seed=seed)
        if deg is not None:
            out.append((md, deg))
    return out
