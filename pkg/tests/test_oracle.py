"""Matrix realization oracle against closed-form classical facts."""

import itertools

import numpy as np
import pytest

from orbitkit import (
    LieType,
    MarkedDiagram,
    build_root_system,
    centralizer_dimension,
    generic_jordan_type,
    jordan_type_of,
    matrix_rank_exact,
    nilradical_matrices,
    nilradical_roots,
    orbit_dimension,
    realization,
    richardson_from_flag,
    richardson_jordan_type,
    richardson_type_A,
    weighted_diagram_from_partition,
)

from helpers import classical_orbit_dimension


def _fraction_rank(a: np.ndarray) -> int:
    from fractions import Fraction

    rows = [[Fraction(int(x)) for x in row] for row in a.tolist()]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        r += 1
        rank += 1
    return rank


def test_matrix_rank_exact_against_fractions():
    rng = np.random.default_rng(11)
    for _ in range(25):
        shape = rng.integers(1, 7, size=2)
        a = rng.integers(-40, 40, size=tuple(shape))
        assert matrix_rank_exact(a) == _fraction_rank(a)
    # a matrix that fools float rank at default tolerances
    a = np.array([[1, 2], [1, 2 + 1e-13]])
    assert matrix_rank_exact(np.array([[1, 2], [2, 4]])) == 1


@pytest.mark.parametrize("t", ["A3", "B2", "B3", "C3", "D4"])
def test_realization_shape_and_form(t):
    real = realization(t)
    rs = build_root_system(t)
    assert real.dim_g == rs.dim_g
    assert len(real.positive_vectors) == len(rs.positive_roots)
    basis = real.full_basis()
    assert len(basis) == rs.dim_g
    if real.form is None:
        for x in basis:
            assert np.trace(x) == 0
    else:
        j = real.form
        for _, x in real.positive_vectors:
            assert np.array_equal(x.T @ j + j @ x, np.zeros_like(j)), t
        for h in real.cartan_basis:
            assert np.array_equal(h.T @ j + j @ h, np.zeros_like(j))


def test_realization_rejects_exceptional():
    with pytest.raises(ValueError):
        realization("G2")


def test_jordan_type_of_known_matrices():
    x = np.zeros((4, 4), dtype=object)
    x[0, 1] = 1
    x[1, 2] = 1
    assert jordan_type_of(x) == (3, 1)
    assert jordan_type_of(np.zeros((3, 3), dtype=object)) == (1, 1, 1)


def test_generic_jordan_type_of_zero_nilradical():
    # unmarked diagram: the dense orbit of the zero nilradical is zero
    real = realization("A2")
    assert generic_jordan_type(real, []) == (1, 1, 1)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_type_a_flags_match_duality(n):
    t = f"A{n - 1}"
    for cuts in itertools.product((0, 1), repeat=n - 1):
        flag = []
        block = 1
        for c in cuts:
            if c:
                flag.append(block)
                block = 1
            else:
                block += 1
        flag.append(block)
        got = richardson_from_flag(t, flag, seed=0)
        assert got == richardson_type_A(tuple(flag))


def test_example_flag_and_marks():
    assert richardson_from_flag("A4", [2, 1, 1, 1], seed=7) == (4, 1)
    assert richardson_jordan_type("B3", MarkedDiagram.of("B3", [3]), seed=0) == (3, 2, 2)


@pytest.mark.parametrize("t", ["A3", "A4", "B2", "B3", "C3", "D4"])
def test_richardson_dimension_identity(t):
    """Generic nilradical element has orbit dimension twice the nilradical."""
    rank = LieType.parse(t).rank
    real = realization(t)
    for r in range(1, rank + 1):
        for marks in itertools.combinations(range(1, rank + 1), r):
            md = MarkedDiagram.of(t, marks)
            parts = richardson_jordan_type(t, md, seed=0)
            dim_u = len(nilradical_roots(md))
            assert classical_orbit_dimension(t, parts) == 2 * dim_u, (t, marks)
            # and the package's diagram dimension agrees
            ws = weighted_diagram_from_partition(t, parts)
            assert orbit_dimension(ws) == 2 * dim_u


def test_centralizer_dimension_matches_orbit():
    t = "C3"
    real = realization(t)
    md = MarkedDiagram.of(t, [3])
    mats = nilradical_matrices(real, md)
    x = sum(mats[i] * (i + 3) for i in range(len(mats)))
    parts = jordan_type_of(x)
    cent = centralizer_dimension(real, x)
    assert real.dim_g - cent == classical_orbit_dimension(t, parts)


def test_seed_changes_draw_but_not_verdict():
    for seed in (0, 1, 7, 123):
        assert richardson_jordan_type("D4", MarkedDiagram.of("D4", [2]), seed=seed) == (3, 3, 1, 1)
