"""Weighted Dynkin diagrams of nilpotent orbits and the induced grading.

A weighted diagram assigns 0, 1 or 2 to every node; the associated semisimple
element h gives every root beta the value sum(coeff_i(beta) * weight_i) and
grades the algebra by these values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .roots import LieType, MarkedDiagram, Root, RootSystem, build_root_system


@dataclass(frozen=True)
class WeightedDiagram:
    lie_type: LieType
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.lie_type.rank:
            raise ValueError(f"expected {self.lie_type.rank} weights, got {len(self.weights)}")
        if any(w not in (0, 1, 2) for w in self.weights):
            raise ValueError(f"weights must lie in {{0,1,2}}, got {self.weights}")

    @classmethod
    def of(cls, t: LieType | str, weights: Iterable[int]) -> "WeightedDiagram":
        return cls(LieType.parse(t), tuple(weights))

    def weight(self, i: int) -> int:
        return self.weights[i - 1]

    def root_value(self, beta: Root) -> int:
        return sum(b * w for b, w in zip(beta, self.weights))

    def __str__(self) -> str:
        return f"{self.lie_type}({','.join(str(w) for w in self.weights)})"


@dataclass(frozen=True)
class Grading:
    """Dimensions of the graded pieces g_i; negative pieces mirror positive ones."""

    dims: tuple[tuple[int, int], ...]

    def dim(self, i: int) -> int:
        for k, d in self.dims:
            if k == i:
                return d
        return 0

    @property
    def support(self) -> list[int]:
        return [k for k, _ in self.dims]


def grading(ws: WeightedDiagram) -> Grading:
    """Dimension of each graded piece; g_0 also carries the Cartan subalgebra."""
    rs = build_root_system(ws.lie_type)
    counts: dict[int, int] = {0: rs.rank}
    for beta in rs.positive_roots:
        v = ws.root_value(beta)
        counts[v] = counts.get(v, 0) + 1
        counts[-v] = counts.get(-v, 0) + 1
    return Grading(tuple(sorted(counts.items())))


def orbit_dimension(ws: WeightedDiagram) -> int:
    """dim G.x = dim g - dim g_0 - dim g_1 for the orbit with this diagram."""
    rs = build_root_system(ws.lie_type)
    g = grading(ws)
    return rs.dim_g - g.dim(0) - g.dim(1)


def is_even(ws: WeightedDiagram) -> bool:
    return all(w != 1 for w in ws.weights)


def jm_marked_set(ws: WeightedDiagram) -> MarkedDiagram:
    """Marks on the nodes of nonzero weight: the Jacobson-Morozov parabolic."""
    return MarkedDiagram(ws.lie_type, frozenset(i for i in range(1, ws.lie_type.rank + 1) if ws.weight(i) != 0))


def ideal_n(ws: WeightedDiagram) -> frozenset[Root]:
    """Positive roots of value >= 2: the nilpotent ideal paired with the orbit."""
    rs = build_root_system(ws.lie_type)
    return frozenset(beta for beta in rs.positive_roots if ws.root_value(beta) >= 2)


def _h_multiset(parts: Sequence[int]) -> list[int]:
    vals: list[int] = []
    for d in parts:
        vals.extend(range(d - 1, -d, -2))
    return sorted(vals, reverse=True)


def weighted_diagram_from_partition(t: LieType | str, parts: Sequence[int]) -> WeightedDiagram:
    """Weighted diagram of the classical orbit with the given Jordan type.

    The multiset of sl2 weights (d-1, d-3, ..., 1-d per part) is sorted; its
    top entries evaluate the simple roots in coordinates.  For very even
    orbits in type D (all parts even) the diagram of label I is returned;
    is_very_even detects the ambiguity.
    """
    from .classical import validate_partition  # deferred to avoid an import cycle

    t = LieType.parse(t)
    validate_partition(t, parts)
    h = _h_multiset(parts)
    n = t.rank
    if t.family == "A":
        w = [h[i] - h[i + 1] for i in range(n)]
    else:
        top = h[:n]
        if t.family == "B":
            w = [top[i] - top[i + 1] for i in range(n - 1)] + [top[n - 1]]
        elif t.family == "C":
            w = [top[i] - top[i + 1] for i in range(n - 1)] + [2 * top[n - 1]]
        else:
            w = [top[i] - top[i + 1] for i in range(n - 2)]
            w.append(top[n - 2] - top[n - 1])
            w.append(top[n - 2] + top[n - 1])
    return WeightedDiagram(t, tuple(w))
