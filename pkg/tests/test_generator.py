"""Tests for the data-file generator: transport, selection, and regeneration."""

import importlib.resources
import json
import sys
from dataclasses import replace
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tools"))

import make_atlas

from orbitkit.orbits import (
    WeightedDiagram,
    grading,
    orbit_dimension,
    weighted_diagram_from_partition,
)
from orbitkit.roots import LieType


def _transport(ambient: str, factors: list[tuple[str, tuple[int, ...]]]) -> WeightedDiagram:
    t = LieType.parse(ambient)
    comps = make_atlas.find_support(t, [LieType.parse(f) for f, _ in factors])
    pool: dict[str, list[WeightedDiagram]] = {}
    for f, parts in factors:
        pool.setdefault(f, []).append(weighted_diagram_from_partition(LieType.parse(f), parts))
    pairs = [(c, pool[str(c.classified_type)].pop()) for c in comps]
    return make_atlas.ambient_weights(t, pairs)


# classical ambients give an independent check on the embedding transport:
# a nilpotent of the sub-partition, viewed in the bigger algebra, has the
# same parts padded with 1s on the extra coordinates
@pytest.mark.parametrize(
    "ambient, factors, padded",
    [
        ("D5", [("D4", (5, 3))], (5, 3, 1, 1)),
        ("D6", [("D4", (5, 3))], (5, 3, 1, 1, 1, 1)),
        ("D6", [("D5", (7, 3))], (7, 3, 1, 1)),
        ("A5", [("A2", (3,)), ("A1", (2,))], (3, 2, 1)),
        ("A6", [("A3", (4,)), ("A1", (2,))], (4, 2, 1)),
        ("B4", [("B3", (5, 1, 1))], (5, 1, 1, 1, 1)),
        ("C4", [("C2", (2, 2))], (2, 2, 1, 1, 1, 1)),
    ],
)
def test_transport_matches_padded_partition(ambient, factors, padded):
    got = _transport(ambient, factors)
    want = weighted_diagram_from_partition(LieType.parse(ambient), padded)
    assert got == want


def test_find_support_is_lex_least():
    comps = make_atlas.find_support(LieType.parse("A5"), [LieType.parse("A2"), LieType.parse("A1")])
    assert sorted(sorted(c.nodes) for c in comps) == [[1, 2], [4]]
    comps = make_atlas.find_support(LieType.parse("D5"), [LieType.parse("D4")])
    assert [sorted(c.nodes) for c in comps] == [[2, 3, 4, 5]]


def test_find_support_missing_raises():
    with pytest.raises(LookupError):
        make_atlas.find_support(LieType.parse("A3"), [LieType.parse("D4")])


@pytest.mark.parametrize(
    "algebra, count, min_weights",
    [
        ("G2", 2, (0, 2)),
        ("F4", 4, (0, 2, 0, 0)),
        ("E6", 3, (2, 0, 0, 2, 0, 2)),
        ("E7", 6, (0, 0, 0, 2, 0, 0, 2)),
        ("E8", 11, (0, 0, 0, 0, 2, 0, 0, 0)),
    ],
)
def test_distinguished_diagrams(algebra, count, min_weights):
    t = LieType.parse(algebra)
    diags = make_atlas.distinguished_diagrams(t)
    assert len(diags) == count
    dims = [orbit_dimension(w) for w in diags]
    assert dims == sorted(dims, reverse=True) and len(set(dims)) == len(dims)
    for w in diags:
        assert set(w.weights) <= {0, 2}
        gr = grading(w)
        assert gr.dim(0) == gr.dim(2)
    assert diags[-1].weights == min_weights
    # the top one is the regular orbit
    assert diags[0].weights == (2,) * t.rank


def test_factor_diagram_kinds():
    assert make_atlas.factor_diagram(("C3", "reg")).weights == (2, 2, 2)
    assert make_atlas.factor_diagram(("D4", "part", (5, 3))).weights == (2, 0, 2, 2)
    assert make_atlas.factor_diagram(("G2", "dist", "min")).weights == (0, 2)
    assert make_atlas.factor_diagram(("E7", "dist", 1)) == make_atlas.distinguished_diagrams(LieType.parse("E7"))[1]
    with pytest.raises(ValueError):
        make_atlas.factor_diagram(("A2", "mystery"))


def test_pinned_weights_guard_fires():
    plan = next(p for p in make_atlas.PLANS if p.label == "C3")
    bad = replace(plan, pinned_weights=(2, 0, 1, 2))
    with pytest.raises(AssertionError):
        make_atlas.build_record(bad, report=False)


def test_pinned_jm_guard_fires():
    plan = next(p for p in make_atlas.PLANS if p.label == "G2(a1)")
    bad = replace(plan, pinned_jm=(1,))
    with pytest.raises(AssertionError):
        make_atlas.build_record(bad, report=False)


def test_unbalanced_polarization_guard_fires():
    plan = next(p for p in make_atlas.PLANS if p.label == "C3")
    bad = replace(plan, pols=[((1, 4), 1)])
    with pytest.raises(AssertionError):
        make_atlas.build_record(bad, report=False)


def test_regeneration_is_byte_identical(tmp_path, monkeypatch, capsys):
    out = tmp_path / "atlas.json"
    monkeypatch.setattr(sys, "argv", ["make_atlas", "--out", str(out)])
    make_atlas.main()
    assert "23 records" in capsys.readouterr().out
    bundled = (importlib.resources.files("orbitkit") / "data" / "atlas.json").read_text(encoding="utf-8")
    assert out.read_text(encoding="utf-8") == bundled


def test_regenerated_payload_shape():
    records = [make_atlas.build_record(p, report=False) for p in make_atlas.PLANS]
    assert len(records) == 23
    labels = {(r["algebra"], r["label"]) for r in records}
    assert len(labels) == 23
    for r in records:
        assert set(r["provenance"]) >= {"weights", "polarization_marks", "degrees", "resolvable", "extremal"}
        assert r["provenance"]["weights"] == "computed"
        for pol in r["polarizations"]:
            assert pol["degree"] >= 1
    computed = next(r for r in records if (r["algebra"], r["label"]) == ("E7", "D6(a1)"))
    assert computed["provenance"]["polarization_marks"] == "computed"
    assert [tuple(p["marks"]) for p in computed["polarizations"]] == [(1, 2, 3, 7)]
    assert json.dumps(records[0], sort_keys=True)  # serializable
