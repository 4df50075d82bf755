"""Standard parabolic subalgebras as marked diagrams, and the resolution test.

A marked diagram Gamma cuts out the parabolic whose nilradical is spanned by
the positive roots supported on Gamma.  An orbit closure is resolved by
T*(G/Q) exactly when the orbit's nilpotent ideal sits inside the nilradical
of Q and 2 dim u(Q) equals the orbit dimension.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .orbits import WeightedDiagram, ideal_n, jm_marked_set, orbit_dimension
from .roots import MarkedDiagram, Root, build_root_system


def nilradical_roots(md: MarkedDiagram) -> frozenset[Root]:
    """Positive roots whose support meets the marked set."""
    rs = build_root_system(md.lie_type)
    idx = [i - 1 for i in md.marks]
    return frozenset(beta for beta in rs.positive_roots if any(beta[a] > 0 for a in idx))


def contains(p: MarkedDiagram, q: MarkedDiagram) -> bool:
    """Whether the parabolic of q contains the parabolic of p (marks reverse inclusion)."""
    if p.lie_type != q.lie_type:
        raise ValueError(f"mixed ambient types {p.lie_type} and {q.lie_type}")
    return q.marks <= p.marks


@dataclass(frozen=True)
class ContractionReport:
    orbit: WeightedDiagram
    q: MarkedDiagram
    contains_jm: bool
    n_contained: bool
    witness: Root | None  # lex-least root of the ideal escaping u(Q), if any
    dim_u_p: int
    dim_u_q: int
    dim_n: int
    dim_orbit: int
    balanced: bool
    passes: bool

    def to_json_dict(self) -> dict:
        return {
            "orbit": {"lie_type": str(self.orbit.lie_type), "weights": list(self.orbit.weights)},
            "q": {"lie_type": str(self.q.lie_type), "marks": sorted(self.q.marks)},
            "contains_jm": self.contains_jm,
            "n_contained": self.n_contained,
            "witness": list(self.witness) if self.witness is not None else None,
            "dim_u_p": self.dim_u_p,
            "dim_u_q": self.dim_u_q,
            "dim_n": self.dim_n,
            "dim_orbit": self.dim_orbit,
            "balanced": self.balanced,
            "passes": self.passes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def check_extremal_contraction(ws: WeightedDiagram, q: MarkedDiagram) -> ContractionReport:
    """Test whether T*(G/Q) resolves the closure of the orbit with diagram ws."""
    if q.lie_type != ws.lie_type:
        raise ValueError(f"mixed ambient types {ws.lie_type} and {q.lie_type}")
    jm = jm_marked_set(ws)
    n_roots = ideal_n(ws)
    u_q = nilradical_roots(q)
    missing = sorted(n_roots - u_q)
    dim_o = orbit_dimension(ws)
    dim_u_q = len(u_q)
    report = ContractionReport(
        orbit=ws,
        q=q,
        contains_jm=q.marks <= jm.marks,
        n_contained=not missing,
        witness=missing[0] if missing else None,
        dim_u_p=len(nilradical_roots(jm)),
        dim_u_q=dim_u_q,
        dim_n=len(n_roots),
        dim_orbit=dim_o,
        balanced=2 * dim_u_q == dim_o,
        passes=(q.marks <= jm.marks) and not missing and 2 * dim_u_q == dim_o,
    )
    return report


def enumerate_symplectic_contractions(ws: WeightedDiagram) -> list[MarkedDiagram]:
    """All marked diagrams passing the resolution test, in lexicographic order.

    Any passing Q must mark every weight-2 node (else a weight-2 simple root
    escapes u(Q)) and may mark weight-1 nodes only (else the Jacobson-Morozov
    containment fails), so the search runs over that sandwich.
    """
    theta2 = frozenset(i for i in range(1, ws.lie_type.rank + 1) if ws.weight(i) == 2)
    theta1 = sorted(i for i in range(1, ws.lie_type.rank + 1) if ws.weight(i) == 1)
    found = []
    for r in range(len(theta1) + 1):
        for extra in itertools.combinations(theta1, r):
            q = MarkedDiagram(ws.lie_type, theta2 | frozenset(extra))
            if check_extremal_contraction(ws, q).passes:
                found.append(q)
    return sorted(found, key=lambda md: md.sorted_marks())
