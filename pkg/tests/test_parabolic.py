"""Nilradicals, containment, and the extremal-contraction checker."""

import itertools
import json

import pytest

from orbitkit import (
    MarkedDiagram,
    WeightedDiagram,
    build_root_system,
    check_extremal_contraction,
    contains,
    enumerate_symplectic_contractions,
    ideal_n,
    nilradical_roots,
    orbit_dimension,
    weighted_diagram_from_partition,
)


def test_nilradical_counts():
    # u(P) drops exactly the positive roots of the Levi
    for t, marks, levi_positive in [
        ("A4", (2,), 1 + 3),  # A1 + A2
        ("B3", (1,), 4),  # B2
        ("F4", (1, 2, 3, 4), 0),  # Borel
        ("E6", (2,), 15),  # A5
    ]:
        rs = build_root_system(t)
        got = len(nilradical_roots(MarkedDiagram.of(t, marks)))
        assert got == len(rs.positive_roots) - levi_positive


def test_nilradical_definition():
    md = MarkedDiagram.of("C3", [2])
    rs = build_root_system("C3")
    u = nilradical_roots(md)
    for beta in rs.positive_roots:
        assert (beta in u) == (beta[1] > 0)


def test_contains_partial_order():
    a = MarkedDiagram.of("D5", [2])
    b = MarkedDiagram.of("D5", [2, 4])
    assert contains(b, a)
    assert not contains(a, b)
    assert contains(a, a)


def test_f4_c3_dimension_chain():
    ws = WeightedDiagram.of("F4", (1, 0, 1, 2))
    good = check_extremal_contraction(ws, MarkedDiagram.of("F4", (3, 4)))
    assert good.passes
    assert good.dim_u_p - good.dim_u_q == 2
    assert good.dim_u_q - good.dim_n == 2
    assert 2 * good.dim_u_q == good.dim_orbit == 42
    bad = check_extremal_contraction(ws, MarkedDiagram.of("F4", (1, 4)))
    assert not bad.passes
    assert not bad.n_contained
    assert bad.witness == (0, 1, 2, 0)


def test_report_flags_and_json():
    ws = weighted_diagram_from_partition("B3", (3, 2, 2))
    rep = check_extremal_contraction(ws, MarkedDiagram.of("B3", (1,)))
    # Q1 = {1} sits inside the jm marks {1,3} but leaks the ideal
    assert rep.contains_jm is True
    assert rep.n_contained is False
    assert rep.witness is not None
    assert not rep.passes
    d = json.loads(rep.to_json())
    assert d["passes"] == rep.passes
    assert d["dim_orbit"] == 12


@pytest.mark.parametrize(
    "t,parts,expected",
    [
        ("B3", (3, 2, 2), [{3}]),
        ("A4", (4, 1), [{1, 2, 4}, {1, 3, 4}]),
        ("C3", (2, 2, 2), [{3}]),
        ("D4", (3, 3, 1, 1), [{2}]),
    ],
)
def test_enumeration_examples(t, parts, expected):
    ws = weighted_diagram_from_partition(t, parts)
    got = [set(md.marks) for md in enumerate_symplectic_contractions(ws)]
    assert got == expected


@pytest.mark.parametrize("t", ["A4", "B3", "C3", "D4", "G2", "F4"])
def test_enumeration_equals_brute_force(t):
    """The weight-sandwich search finds the same set as trying every subset."""
    rs = build_root_system(t)
    rank = rs.rank
    diagrams = []
    if t in ("G2", "F4"):
        diagrams = [WeightedDiagram.of(t, w) for w in itertools.product((0, 1, 2), repeat=rank)]
    else:
        from orbitkit import valid_partitions

        diagrams = [weighted_diagram_from_partition(t, p) for p in valid_partitions(t)]
    for ws in diagrams:
        brute = []
        for r in range(rank + 1):
            for marks in itertools.combinations(range(1, rank + 1), r):
                if check_extremal_contraction(ws, MarkedDiagram.of(t, marks)).passes:
                    brute.append(frozenset(marks))
        fast = [md.marks for md in enumerate_symplectic_contractions(ws)]
        assert sorted(brute, key=sorted) == sorted(fast, key=sorted)


def test_ideal_inside_every_passing_nilradical():
    ws = WeightedDiagram.of("F4", (1, 0, 1, 2))
    n = ideal_n(ws)
    for md in enumerate_symplectic_contractions(ws):
        assert n <= nilradical_roots(md)
        assert 2 * len(nilradical_roots(md)) == orbit_dimension(ws)
