"""Root systems of the simple complex Lie algebras, in Bourbaki conventions.

Dynkin diagram nodes are numbered 1..rank as in the Bourbaki plates.  A root
is stored as the tuple of its integer coefficients over the simple roots,
entry i-1 holding the coefficient of alpha_i.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

Root = tuple[int, ...]

# rank bounds per family; None means unbounded above
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        bounds = _RANK_BOUNDS.get(self.family)
        if bounds is None:
            raise ValueError(f"unknown family {self.family!r}; expected one of A..G")
        lo, hi = bounds
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            hi_text = "unbounded" if hi is None else str(hi)
            raise ValueError(f"invalid rank {self.rank} for family {self.family} (allowed {lo}..{hi_text})")

    @classmethod
    def parse(cls, text: str | "LieType") -> "LieType":
        if isinstance(text, LieType):
            return text
        s = text.strip().upper()
        if len(s) < 2 or s[0] not in "ABCDEFG" or not s[1:].isdigit():
            raise ValueError(f"cannot parse Lie type from {text!r} (expected e.g. 'A4', 'E8')")
        return cls(s[0], int(s[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    mult: int
    short_end: int | None  # arrowhead node for mult >= 2, None for single bonds


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Pairings c[i][j] = <alpha_{i+1}, alpha_{j+1}^vee>, 0-indexed storage."""
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(a: int, b: int, ab: int = -1, ba: int = -1) -> None:
        c[a - 1][b - 1] = ab
        c[b - 1][a - 1] = ba

    fam = t.family
    if fam == "A":
        for i in range(1, n):
            link(i, i + 1)
    elif fam == "B":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 1, n, ab=-2, ba=-1)  # alpha_n is the short root
    elif fam == "C":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 1, n, ab=-1, ba=-2)  # alpha_n is the long root
    elif fam == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif fam == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(2, 4)
    elif fam == "F":
        link(1, 2)
        link(2, 3, ab=-2, ba=-1)  # alpha_3, alpha_4 short
        link(3, 4)
    elif fam == "G":
        link(1, 2, ab=-1, ba=-3)  # alpha_1 is the short root
    return tuple(tuple(row) for row in c)


def _edges_from_cartan(c: tuple[tuple[int, ...], ...]) -> tuple[Edge, ...]:
    n = len(c)
    edges = []
    for a, b in itertools.combinations(range(1, n + 1), 2):
        if c[a - 1][b - 1] == 0:
            continue
        mult = c[a - 1][b - 1] * c[b - 1][a - 1]
        short_end = None
        if mult >= 2:
            # |<alpha_a, alpha_b^vee>| >= 2 forces alpha_b short
            short_end = b if c[a - 1][b - 1] <= -2 else a
        edges.append(Edge(a, b, mult, short_end))
    return tuple(edges)


def _close_positive_roots(c: tuple[tuple[int, ...], ...]) -> tuple[Root, ...]:
    """Close the simple roots under root strings, layer by layer in height."""
    rank = len(c)
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots: set[Root] = set(simples)
    layer = sorted(simples)
    out: list[Root] = list(layer)
    while layer:
        nxt: set[Root] = set()
        for beta in layer:
            for i in range(rank):
                if sum(beta) == 1 and beta[i] == 1:
                    continue  # the string of alpha_i through itself stops at alpha_i
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                s = sum(beta[a] * c[a][i] for a in range(rank))
                if p - s >= 1:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        layer = sorted(nxt)
        roots.update(nxt)
        out.extend(layer)
    return tuple(out)


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    root_set: frozenset[Root]
    edges: tuple[Edge, ...]
    adjacency: tuple[frozenset[int], ...]  # entry i-1: neighbours of node i

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def dim_g(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def pairing(self, beta: Root, i: int) -> int:
        """<beta, alpha_i^vee> for a node i in 1..rank."""
        return sum(beta[a] * self.cartan[a][i - 1] for a in range(self.rank))

    def neighbors(self, i: int) -> frozenset[int]:
        return self.adjacency[i - 1]

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def edge_between(self, a: int, b: int) -> Edge | None:
        if a > b:
            a, b = b, a
        for e in self.edges:
            if e.a == a and e.b == b:
                return e
        return None


@lru_cache(maxsize=None)
def _root_system(t: LieType) -> RootSystem:
    c = cartan_matrix(t)
    pos = _close_positive_roots(c)
    edges = _edges_from_cartan(c)
    adj = [frozenset() for _ in range(t.rank)]
    for e in edges:
        adj[e.a - 1] = adj[e.a - 1] | {e.b}
        adj[e.b - 1] = adj[e.b - 1] | {e.a}
    return RootSystem(t, c, pos, frozenset(pos), edges, tuple(adj))


def build_root_system(t: LieType | str) -> RootSystem:
    """Positive roots ordered by height, diagram edges with multiplicity and arrow."""
    return _root_system(LieType.parse(t))


@dataclass(frozen=True)
class MarkedDiagram:
    """A subset of Dynkin nodes; the marks cut out a standard parabolic subalgebra."""

    lie_type: LieType
    marks: frozenset[int]

    def __post_init__(self) -> None:
        bad = [i for i in self.marks if not 1 <= i <= self.lie_type.rank]
        if bad:
            raise ValueError(f"marks {sorted(bad)} outside 1..{self.lie_type.rank}")

    @classmethod
    def of(cls, t: LieType | str, marks: Iterable[int]) -> "MarkedDiagram":
        return cls(LieType.parse(t), frozenset(marks))

    def sorted_marks(self) -> tuple[int, ...]:
        return tuple(sorted(self.marks))

    def __str__(self) -> str:
        inner = ",".join(f"a{i}" for i in self.sorted_marks())
        return f"{self.lie_type}[{inner}]"


@dataclass(frozen=True)
class SubdiagramId:
    """One connected component of a node subset, classified up to diagram isomorphism.

    labelings holds every isomorphism onto the Bourbaki diagram of
    classified_type, each as a sorted tuple of (ambient node, Bourbaki label)
    pairs; several labelings mean the component has diagram automorphisms.
    """

    nodes: frozenset[int]
    classified_type: LieType
    labelings: tuple[tuple[tuple[int, int], ...], ...]

    def labeling_dicts(self) -> list[dict[int, int]]:
        return [dict(lab) for lab in self.labelings]


def _components(rs: RootSystem, nodes: frozenset[int]) -> list[frozenset[int]]:
    remaining = set(nodes)
    comps = []
    while remaining:
        start = min(remaining)
        seen = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for y in rs.neighbors(x):
                if y in nodes and y not in seen:
                    seen.add(y)
                    queue.append(y)
        comps.append(frozenset(seen))
        remaining -= seen
    return sorted(comps, key=min)


def _candidate_types(m: int) -> list[LieType]:
    cands = [LieType("A", m)]
    if m >= 2:
        cands += [LieType("B", m), LieType("C", m)]
    if m >= 3:
        cands.append(LieType("D", m))
    if 6 <= m <= 8:
        cands.append(LieType("E", m))
    if m == 4:
        cands.append(LieType("F", 4))
    if m == 2:
        cands.append(LieType("G", 2))
    return cands


def _component_edge_data(rs: RootSystem, comp: frozenset[int]) -> dict[frozenset[int], tuple[int, int | None]]:
    data = {}
    for a, b in itertools.combinations(sorted(comp), 2):
        e = rs.edge_between(a, b)
        if e is not None:
            data[frozenset((a, b))] = (e.mult, e.short_end)
    return data


def _adjacency_attrs(
    nodes: Iterable[int], edges: dict[frozenset[int], tuple[int, int | None]]
) -> dict[int, dict[int, tuple[int, int | None]]]:
    adj: dict[int, dict[int, tuple[int, int | None]]] = {x: {} for x in nodes}
    for pair, attrs in edges.items():
        x, y = tuple(pair)
        adj[x][y] = attrs
        adj[y][x] = attrs
    return adj


def _isomorphisms(
    comp: list[int],
    comp_edges: dict[frozenset[int], tuple[int, int | None]],
    target: RootSystem,
) -> list[dict[int, int]]:
    """All bijections comp -> 1..m preserving adjacency, bond multiplicity and arrows."""
    m = len(comp)
    target_edges = {frozenset((e.a, e.b)): (e.mult, e.short_end) for e in target.edges}
    if len(comp_edges) != len(target_edges):
        return []
    if sorted(mult for mult, _ in comp_edges.values()) != sorted(mult for mult, _ in target_edges.values()):
        return []
    comp_adj = _adjacency_attrs(comp, comp_edges)
    t_adj = _adjacency_attrs(target.nodes, target_edges)
    order = sorted(comp, key=lambda x: (-len(comp_adj[x]), x))
    isos: list[dict[int, int]] = []

    def extend(k: int, phi: dict[int, int], used: set[int]) -> None:
        if k == m:
            # edge counts agree, so mapped edges exhaust the target edges
            isos.append(dict(phi))
            return
        x = order[k]
        for cand in target.nodes:
            if cand in used or len(t_adj[cand]) != len(comp_adj[x]):
                continue
            ok = True
            for y, (mult, short_end) in comp_adj[x].items():
                if y not in phi:
                    continue
                attrs = t_adj[cand].get(phi[y])
                if attrs is None or attrs[0] != mult:
                    ok = False
                    break
                if short_end is not None:
                    want = cand if short_end == x else phi[y]
                    if attrs[1] != want:
                        ok = False
                        break
            if ok:
                phi[x] = cand
                used.add(cand)
                extend(k + 1, phi, used)
                del phi[x]
                used.discard(cand)

    extend(0, {}, set())
    return isos


_classify_cache: dict[tuple[LieType, frozenset[int]], tuple[SubdiagramId, ...]] = {}


def classify_subdiagram(rs: RootSystem, nodes: Iterable[int]) -> list[SubdiagramId]:
    """Classify each connected component of a node subset.

    Components are returned ordered by smallest node, one entry per component
    carrying every admissible labeling.  Ambiguous shapes resolve by ambient
    context: a two-node double bond becomes B2 or C2 according to the bond
    orientation inherited from the ambient diagram, and a 3-chain is A3 unless
    it is the whole of an ambient D3.
    """
    node_set = frozenset(nodes)
    bad = [i for i in node_set if not 1 <= i <= rs.rank]
    if bad:
        raise ValueError(f"nodes {sorted(bad)} outside 1..{rs.rank}")
    key = (rs.lie_type, node_set)
    cached = _classify_cache.get(key)
    if cached is None:
        out: list[SubdiagramId] = []
        for comp in _components(rs, node_set):
            comp_sorted = sorted(comp)
            comp_edges = _component_edge_data(rs, comp)
            double_pair = len(comp) == 2 and len(comp_edges) == 1 and next(iter(comp_edges.values()))[0] == 2
            whole_d3 = rs.lie_type == LieType("D", 3) and comp == node_set == frozenset({1, 2, 3})
            for cand in _candidate_types(len(comp)):
                if double_pair and cand.family in "BC":
                    # keep the one of B2/C2 whose node 1 matches the inherited long root
                    x, y = comp_sorted
                    (_, short_end) = next(iter(comp_edges.values()))
                    long_first = short_end == y
                    if (cand.family == "B") != long_first:
                        continue
                if len(comp) == 3 and (cand.family == "D") != whole_d3:
                    continue
                isos = _isomorphisms(comp_sorted, comp_edges, build_root_system(cand))
                if isos:
                    labs = tuple(sorted(tuple(sorted(phi.items())) for phi in isos))
                    out.append(SubdiagramId(comp, cand, labs))
                    break
        cached = tuple(out)
        _classify_cache[key] = cached
    return list(cached)


def maximal_patch(rs: RootSystem, marked: Iterable[int], seed: Iterable[int]) -> frozenset[int]:
    """Grow a seed of marked nodes through unmarked nodes as far as possible.

    Marked nodes outside the seed act as barriers.  Returns the connected
    patch containing the whole seed, or the empty set when the seed does not
    lie in a single component of (seed + unmarked nodes).
    """
    marks = frozenset(marked)
    seed_set = frozenset(seed)
    if not seed_set <= marks:
        raise ValueError("seed must be a subset of the marked nodes")
    allowed = (frozenset(rs.nodes) - marks) | seed_set
    start = min(seed_set)
    seen = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for y in rs.neighbors(x):
            if y in allowed and y not in seen:
                seen.add(y)
                queue.append(y)
    if not seed_set <= seen:
        return frozenset()
    return frozenset(seen)


def parse_nodes(text: str, t: LieType) -> frozenset[int]:
    """Parse node subsets like 'a1,a4', '1,4' or 'a1 a4'."""
    items = [tok for tok in text.replace(",", " ").split() if tok]
    nodes = set()
    for tok in items:
        tok = tok.lower().lstrip("a").lstrip("_")
        if not tok.isdigit():
            raise ValueError(f"cannot parse node token {tok!r}")
        i = int(tok)
        if not 1 <= i <= t.rank:
            raise ValueError(f"node {i} outside 1..{t.rank}")
        nodes.add(i)
    return frozenset(nodes)
