"""Exact matrix models of the classical algebras for independent cross-checks.

sl is realized as trace-zero matrices, so/sp as the stabilizers of an
anti-diagonal form, so every Borel sits inside the upper triangular matrices
and nilradicals of standard parabolics consist of strictly upper triangular
root vectors.  Jordan types of generic nilradical elements give Richardson
orbits without any diagram combinatorics.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classical import flag_to_marked
from .parabolic import nilradical_roots
from .roots import LieType, MarkedDiagram, Root, build_root_system

_PRIMES = (2_147_483_647, 2_147_483_629)


class OracleError(RuntimeError):
    pass


def _rank_mod_p(a: np.ndarray, p: int) -> int:
    m = (a % p).astype(np.int64)
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        if r + 1 < rows:
            factors = m[r + 1 :, c].copy()
            m[r + 1 :] = (m[r + 1 :] - factors[:, None] * m[r][None, :]) % p
        r += 1
        if r == rows:
            break
    return r


def _rank_exact(a: np.ndarray) -> int:
    rows = [[Fraction(int(x)) for x in row] for row in a]
    nrows, ncols = len(rows), len(rows[0]) if len(rows) else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pivval = rows[r][c]
        rows[r] = [x / pivval for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


def matrix_rank_exact(a: np.ndarray) -> int:
    """Rank of an integer matrix: two modular eliminations, exact fallback on mismatch."""
    if a.size == 0:
        return 0
    r1 = _rank_mod_p(a, _PRIMES[0])
    r2 = _rank_mod_p(a, _PRIMES[1])
    if r1 == r2:
        return r1
    return _rank_exact(a)


def _zero(n: int) -> np.ndarray:
    return np.zeros((n, n), dtype=object)


def _unit(n: int, i: int, j: int) -> np.ndarray:
    m = _zero(n)
    m[i - 1, j - 1] = 1
    return m


@dataclass(frozen=True)
class Realization:
    lie_type: LieType
    n: int  # matrix size
    form: np.ndarray | None
    cartan_basis: tuple[np.ndarray, ...]
    positive_vectors: tuple[tuple[Root, np.ndarray], ...]

    @property
    def dim_g(self) -> int:
        return len(self.cartan_basis) + 2 * len(self.positive_vectors)

    def full_basis(self) -> list[np.ndarray]:
        out = list(self.cartan_basis)
        for _, x in self.positive_vectors:
            out.append(x)
            out.append(x.T.copy())
        return out

    def root_vector(self, beta: Root) -> np.ndarray:
        for root, x in self.positive_vectors:
            if root == beta:
                return x
        raise KeyError(f"{beta} is not a positive root of {self.lie_type}")


def _e_coordinates(t: LieType, beta: Root) -> list[int]:
    n = t.rank
    size = n + 1 if t.family == "A" else n
    v = [0] * size
    for idx, b in enumerate(beta):
        if b == 0:
            continue
        i = idx + 1
        if t.family == "A" or i < n:
            v[i - 1] += b
            v[i] -= b
        elif t.family == "B":
            v[n - 1] += b
        elif t.family == "C":
            v[n - 1] += 2 * b
        else:
            v[n - 2] += b
            v[n - 1] += b
    return v


def _positive_vector(t: LieType, beta: Root, size: int) -> np.ndarray:
    v = _e_coordinates(t, beta)
    pos = [i + 1 for i, x in enumerate(v) if x > 0]
    neg = [i + 1 for i, x in enumerate(v) if x < 0]
    fam = t.family
    if fam == "A":
        (i,), (j,) = pos, neg
        return _unit(size, i, j)
    if fam == "B":
        if neg:
            (i,), (j,) = pos, neg
            return _unit(size, i, j) - _unit(size, size + 1 - j, size + 1 - i)
        if len(pos) == 2:
            i, j = pos
            return _unit(size, i, size + 1 - j) - _unit(size, j, size + 1 - i)
        (i,) = pos
        half = size // 2 + 1
        return _unit(size, i, half) - _unit(size, half, size + 1 - i)
    if fam == "C":
        if neg:
            (i,), (j,) = pos, neg
            return _unit(size, i, j) - _unit(size, size + 1 - j, size + 1 - i)
        if len(pos) == 2:
            i, j = pos
            return _unit(size, i, size + 1 - j) + _unit(size, j, size + 1 - i)
        (i,) = pos  # the coordinate carries 2e_i
        return _unit(size, i, size + 1 - i)
    # family D
    if neg:
        (i,), (j,) = pos, neg
        return _unit(size, i, j) - _unit(size, size + 1 - j, size + 1 - i)
    i, j = pos
    return _unit(size, i, size + 1 - j) - _unit(size, j, size + 1 - i)


def realization(t: LieType | str) -> Realization:
    """Trace-zero (type A) or anti-diagonal-form (types B, C, D) matrix model."""
    t = LieType.parse(t)
    if t.family not in "ABCD":
        raise ValueError(f"matrix oracle covers the classical families only, not {t}")
    rs = build_root_system(t)
    n = t.rank
    size = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t.family]
    if t.family == "A":
        form = None
        cartan = tuple(_unit(size, i, i) - _unit(size, i + 1, i + 1) for i in range(1, n + 1))
    else:
        form = _zero(size)
        for a in range(1, size + 1):
            val = 1
            if t.family == "C" and a > n:
                val = -1
            form[a - 1, size - a] = val
        cartan = tuple(_unit(size, i, i) - _unit(size, size + 1 - i, size + 1 - i) for i in range(1, n + 1))
    vectors = tuple((beta, _positive_vector(t, beta, size)) for beta in rs.positive_roots)
    return Realization(t, size, form, cartan, vectors)


def nilradical_matrices(real: Realization, md: MarkedDiagram) -> list[np.ndarray]:
    """Root vectors spanning the nilradical of the marked parabolic."""
    if md.lie_type != real.lie_type:
        raise ValueError(f"mixed ambient types {real.lie_type} and {md.lie_type}")
    roots = sorted(nilradical_roots(md))
    return [real.root_vector(beta) for beta in roots]


def jordan_type_of(x: np.ndarray) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix from its power ranks."""
    size = x.shape[0]
    ranks = [size]
    power = np.eye(size, dtype=object)
    while ranks[-1] > 0:
        power = power @ x
        ranks.append(matrix_rank_exact(power))
    counts = []
    for k in range(1, len(ranks)):
        ge_k = ranks[k - 1] - ranks[k]
        ge_k1 = ranks[k] - ranks[k + 1] if k + 1 < len(ranks) else 0
        counts.append(ge_k - ge_k1)
    parts: list[int] = []
    for k, c in enumerate(counts, start=1):
        parts.extend([k] * c)
    return tuple(sorted(parts, reverse=True))


def generic_jordan_type(real: Realization, mats: list[np.ndarray], seed: int = 0) -> tuple[int, ...]:
    """Jordan type of a random integer combination, stable across three draws.

    Draws use coefficients from a large range; if the three types disagree the
    draw repeats up to twice more, returning the lexicographically largest
    type once it has shown up three times.
    """
    if not mats:
        return (1,) * real.n  # zero element
    rng = random.Random(seed)
    results: list[tuple[int, ...]] = []
    for _ in range(3):
        results.append(_draw_jordan_type(real, mats, rng))
    for _ in range(2):
        if len(set(results)) == 1:
            return results[0]
        results.extend(_draw_jordan_type(real, mats, rng) for _ in range(3))
    best = max(results)
    if results.count(best) < 3:
        raise OracleError(f"draws failed to stabilize: {sorted(set(results))}")
    return best


def _draw_jordan_type(real: Realization, mats: list[np.ndarray], rng: random.Random) -> tuple[int, ...]:
    x = _zero(real.n)
    for m in mats:
        x = x + rng.randint(1, 1_000_000) * m
    return jordan_type_of(x)


def centralizer_dimension(real: Realization, x: np.ndarray) -> int:
    """Dimension of the centralizer of x inside the algebra."""
    basis = real.full_basis()
    rows = np.array([(b @ x - x @ b).reshape(-1) for b in basis], dtype=object)
    return len(basis) - matrix_rank_exact(rows)


def richardson_jordan_type(t: LieType | str, md: MarkedDiagram, seed: int = 0) -> tuple[int, ...]:
    """Jordan type of the dense orbit in the nilradical of a marked parabolic."""
    real = realization(t)
    mats = nilradical_matrices(real, md)
    if not mats:
        size = real.n
        return (1,) * size
    return generic_jordan_type(real, mats, seed)


def richardson_from_flag(t: LieType | str, flag: list[int], seed: int = 0) -> tuple[int, ...]:
    """Jordan type of the Richardson orbit of the flag-type parabolic."""
    t = LieType.parse(t)
    md = flag_to_marked(t, flag)[0]
    return richardson_jordan_type(t, md, seed)
