"""Root system layer against the coordinate-model oracle."""

import itertools

import pytest

from orbitkit import (
    LieType,
    MarkedDiagram,
    build_root_system,
    cartan_matrix,
    classify_subdiagram,
    maximal_patch,
    parse_nodes,
)

from helpers import (
    coordinate_cartan_matrix,
    coordinate_positive_coefficients,
    coordinate_roots,
)

ALL_TYPES = [
    "A1", "A2", "A4", "A7",
    "B2", "B3", "B5",
    "C3", "C6",
    "D4", "D5", "D7",
    "E6", "E7", "E8",
    "F4", "G2",
]


@pytest.mark.parametrize("t", ALL_TYPES)
def test_cartan_matrix_matches_coordinates(t):
    assert cartan_matrix(LieType.parse(t)) == coordinate_cartan_matrix(t)


@pytest.mark.parametrize("t", ALL_TYPES)
def test_positive_roots_match_coordinates(t):
    rs = build_root_system(t)
    assert frozenset(rs.positive_roots) == coordinate_positive_coefficients(t)


@pytest.mark.parametrize("t", ALL_TYPES)
def test_root_count_and_dimension(t):
    rs = build_root_system(t)
    coords = coordinate_roots(t)
    assert 2 * len(rs.positive_roots) == len(coords)
    assert rs.dim_g == rs.rank + len(coords)


@pytest.mark.parametrize(
    "t,expected",
    [("A4", 24), ("F4", 52), ("E8", 248), ("G2", 14)],
)
def test_dimension_examples(t, expected):
    assert build_root_system(t).dim_g == expected


@pytest.mark.parametrize("t", ALL_TYPES)
def test_closure_idempotent(t):
    """Reflecting any root in any simple root lands back in the root set."""
    rs = build_root_system(t)
    c = rs.cartan
    rank = rs.rank
    full = set(rs.root_set) | {tuple(-x for x in beta) for beta in rs.root_set}
    for beta in full:
        for i in range(rank):
            pairing = sum(beta[a] * c[a][i] for a in range(rank))
            img = list(beta)
            img[i] -= pairing
            assert tuple(img) in full


def test_highest_roots():
    assert build_root_system("G2").highest_root == (3, 2)
    assert build_root_system("F4").highest_root == (2, 3, 4, 2)
    assert build_root_system("E8").highest_root == (2, 3, 4, 6, 5, 4, 3, 2)
    assert build_root_system("A4").highest_root == (1, 1, 1, 1)


def test_classify_subdiagram_components():
    rs = build_root_system("E7")
    parts = classify_subdiagram(rs, [2, 4, 5])
    assert [str(p.classified_type) for p in parts] == ["A3"]
    parts = classify_subdiagram(rs, [2, 5, 7])
    assert sorted(str(p.classified_type) for p in parts) == ["A1", "A1", "A1"]
    rs_d = build_root_system("D5")
    parts = classify_subdiagram(rs_d, [2, 3, 4, 5])
    assert [str(p.classified_type) for p in parts] == ["D4"]


def test_classify_subdiagram_labelings_preserve_edges():
    rs = build_root_system("E6")
    (part,) = classify_subdiagram(rs, [1, 3, 4, 2])
    assert str(part.classified_type) == "A4"
    model = build_root_system(part.classified_type)
    dicts = part.labeling_dicts()
    assert len(dicts) == 2  # a chain reads the same from either end
    for lab in dicts:
        # keys are ambient nodes, values model labels; adjacency must carry over
        assert set(lab) == {1, 2, 3, 4}
        for x, y in itertools.combinations(sorted(lab), 2):
            amb_adj = y in rs.adjacency[x - 1]
            mod_adj = lab[y] in model.adjacency[lab[x] - 1]
            assert amb_adj == mod_adj


def test_maximal_patch_barriers():
    rs = build_root_system("E7")
    # marked nodes outside the seed act as barriers
    assert maximal_patch(rs, marked=[4, 7], seed=[4]) == frozenset({1, 2, 3, 4, 5, 6})
    assert maximal_patch(rs, marked=[4, 7], seed=[7]) == frozenset({5, 6, 7})
    assert maximal_patch(rs, marked=[1, 6], seed=[1, 6]) == frozenset(range(1, 8))
    # a seed split by a barrier has no single patch
    assert maximal_patch(rs, marked=[1, 4, 6], seed=[1, 6]) == frozenset()


def test_parse_nodes_formats():
    t = LieType.parse("E8")
    assert parse_nodes("a1,a4", t) == frozenset({1, 4})
    assert parse_nodes("1,4", t) == frozenset({1, 4})
    assert parse_nodes("a2 a3", t) == frozenset({2, 3})
    with pytest.raises(ValueError):
        parse_nodes("a9", t)
    with pytest.raises(ValueError):
        parse_nodes("zz", t)


def test_lie_type_bounds():
    with pytest.raises(ValueError):
        LieType.parse("E9")
    with pytest.raises(ValueError):
        LieType.parse("F5")
    with pytest.raises(ValueError):
        LieType("D", 2)
    assert str(LieType.parse("b4")) == "B4"


def test_marked_diagram_validation():
    md = MarkedDiagram.of("E6", [4, 1])
    assert md.sorted_marks() == (1, 4)
    assert str(md) == "E6[a1,a4]"
    with pytest.raises(ValueError):
        MarkedDiagram.of("A3", [5])
