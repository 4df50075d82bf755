"""Independent reference constructions the tests use as oracles.

Root systems here come from explicit coordinate vectors closed under
reflections, and orbit dimensions from the classical partition formulas.
Nothing in this file reuses the package's Cartan-integer recursion, so
agreement is meaningful evidence.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from orbitkit import LieType

Vec = tuple[Fraction, ...]


def _vec(*vals) -> Vec:
    return tuple(Fraction(v) for v in vals)


def _e(dim: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _scale(c: Fraction, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def _dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def simple_root_vectors(t: LieType | str) -> list[Vec]:
    """Bourbaki coordinate vectors for the simple roots."""
    t = LieType.parse(t)
    n = t.rank
    if t.family == "A":
        d = n + 1
        return [_sub(_e(d, i), _e(d, i + 1)) for i in range(n)]
    if t.family == "B":
        out = [_sub(_e(n, i), _e(n, i + 1)) for i in range(n - 1)]
        out.append(_e(n, n - 1))
        return out
    if t.family == "C":
        out = [_sub(_e(n, i), _e(n, i + 1)) for i in range(n - 1)]
        out.append(_scale(Fraction(2), _e(n, n - 1)))
        return out
    if t.family == "D":
        out = [_sub(_e(n, i), _e(n, i + 1)) for i in range(n - 1)]
        out.append(_add(_e(n, n - 2), _e(n, n - 1)))
        return out
    if t.family == "G":
        return [_vec(1, -1, 0), _vec(-2, 1, 1)]
    if t.family == "F":
        return [
            _vec(0, 1, -1, 0),
            _vec(0, 0, 1, -1),
            _vec(0, 0, 0, 1),
            _vec(Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
        ]
    # E6, E7, E8 as subsets of the E8 simple roots in R^8
    half = Fraction(1, 2)
    e8 = [
        _vec(half, -half, -half, -half, -half, -half, -half, half),
        _vec(1, 1, 0, 0, 0, 0, 0, 0),
        _vec(-1, 1, 0, 0, 0, 0, 0, 0),
        _vec(0, -1, 1, 0, 0, 0, 0, 0),
        _vec(0, 0, -1, 1, 0, 0, 0, 0),
        _vec(0, 0, 0, -1, 1, 0, 0, 0),
        _vec(0, 0, 0, 0, -1, 1, 0, 0),
        _vec(0, 0, 0, 0, 0, -1, 1, 0),
    ]
    return e8[:n]


def _reflect(beta: Vec, alpha: Vec) -> Vec:
    c = 2 * _dot(beta, alpha) / _dot(alpha, alpha)
    return _sub(beta, _scale(c, alpha))


@lru_cache(maxsize=None)
def coordinate_roots(t: LieType | str) -> frozenset[Vec]:
    """All roots of t in coordinates, by reflection closure of the simples."""
    simples = simple_root_vectors(t)
    roots: set[Vec] = set(simples) | {_scale(Fraction(-1), a) for a in simples}
    frontier = set(roots)
    while frontier:
        new: set[Vec] = set()
        for beta in frontier:
            for alpha in simples:
                img = _reflect(beta, alpha)
                if img not in roots:
                    new.add(img)
        roots.update(new)
        frontier = new
    return frozenset(roots)


def _solve_coefficients(simples: list[Vec], beta: Vec) -> tuple[Fraction, ...]:
    """Coefficients of beta over the simple roots, by exact elimination."""
    rank = len(simples)
    dim = len(beta)
    rows = [[simples[j][i] for j in range(rank)] + [beta[i]] for i in range(dim)]
    pivots: list[int] = []
    r = 0
    for col in range(rank):
        piv = next((k for k in range(r, dim) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for k in range(dim):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    assert len(pivots) == rank, "simple roots must be linearly independent"
    for k in range(r, dim):
        assert rows[k][rank] == 0, "root outside the span of the simples"
    coeff = [Fraction(0)] * rank
    for row_idx, col in enumerate(pivots):
        coeff[col] = rows[row_idx][rank]
    return tuple(coeff)


@lru_cache(maxsize=None)
def coordinate_positive_coefficients(t: LieType | str) -> frozenset[tuple[int, ...]]:
    """Positive roots of t as integer coefficient tuples over the simples."""
    t = LieType.parse(t)
    simples = simple_root_vectors(t)
    out = set()
    for beta in coordinate_roots(t):
        coeff = _solve_coefficients(simples, beta)
        assert all(c.denominator == 1 for c in coeff), "non-integral root coefficient"
        ints = tuple(int(c) for c in coeff)
        if all(c >= 0 for c in ints):
            assert any(c > 0 for c in ints)
            out.add(ints)
    return frozenset(out)


def coordinate_cartan_matrix(t: LieType | str) -> tuple[tuple[int, ...], ...]:
    """Cartan pairings computed from coordinates."""
    simples = simple_root_vectors(t)
    rows = []
    for a in simples:
        row = []
        for b in simples:
            val = 2 * _dot(a, b) / _dot(b, b)
            assert val.denominator == 1
            row.append(int(val))
        rows.append(tuple(row))
    return tuple(rows)


# ----------------------------- classical orbit dimensions from partitions


def partition_transpose(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(max(parts)))


def classical_orbit_dimension(t: LieType | str, parts: tuple[int, ...]) -> int:
    """Closed-form dimension of the nilpotent orbit with the given Jordan type."""
    t = LieType.parse(t)
    tr = partition_transpose(tuple(sorted(parts, reverse=True)))
    sq = sum(x * x for x in tr)
    odd = sum(1 for p in parts if p % 2 == 1)
    if t.family == "A":
        n = t.rank + 1
        return n * n - sq
    if t.family in ("B", "D"):
        big = 2 * t.rank + (1 if t.family == "B" else 0)
        return (big * big - big) // 2 - (sq - odd) // 2
    if t.family == "C":
        big = 2 * t.rank
        return (big * big + big) // 2 - (sq + odd) // 2
    raise ValueError(f"no partition dimension formula for {t}")
