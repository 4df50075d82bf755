"""Audit a parabolic as a symplectic resolution of an orbit closure.

The check is three exact conditions on root counts: the candidate sits
inside the Jacobson-Morozov parabolic, the orbit's nilpotent ideal sits
inside the candidate's nilradical, and twice the nilradical matches the
orbit dimension.  A failure always comes with a concrete witness.
"""
from orbitkit import (
    MarkedDiagram,
    WeightedDiagram,
    check_extremal_contraction,
    enumerate_symplectic_contractions,
)


def audit(ws, marks):
    q = MarkedDiagram.of(ws.lie_type, marks)
    rep = check_extremal_contraction(ws, q)
    print(f"  candidate {q}")
    print(f"    inside JM parabolic  {rep.contains_jm}")
    print(f"    ideal contained      {rep.n_contained}", end="")
    if rep.witness is not None:
        print(f"  (escaping root {rep.witness})", end="")
    print()
    print(f"    2*dim u(Q) = {2 * rep.dim_u_q} vs dim O = {rep.dim_orbit}  balanced={rep.balanced}")
    print(f"    verdict: {'resolution' if rep.passes else 'rejected'}")
    return rep


def main():
    # the 42-dimensional orbit of F4 whose closure has a two-step collapse:
    # JM parabolic -> intermediate Q -> closure, each step dropping 2 dims
    ws = WeightedDiagram.of("F4", (1, 0, 1, 2))
    print(f"F4 orbit with weights {ws.weights}")
    good = audit(ws, (3, 4))
    bad = audit(ws, (1, 4))
    assert good.passes and not bad.passes
    assert bad.witness == (0, 1, 2, 0)  # alpha2 + 2 alpha3 leaks out of u(Q')
    assert good.dim_u_p - good.dim_u_q == good.dim_u_q - good.dim_n == 2
    print()

    # exhaustive search: every parabolic between the JM marks and the
    # weight-2 marks is tried, nothing else can work
    ws = WeightedDiagram.of("E8", (0, 1, 1, 0, 0, 0, 1, 2))  # 210-dimensional orbit
    found = enumerate_symplectic_contractions(ws)
    print(f"E8 (0,1,1,0,0,0,1,2): extremal contractions {[str(m) for m in found]}")
    assert [sorted(m.marks) for m in found] == [[2, 7, 8]]

    # an even orbit: the JM parabolic itself is the only resolution
    ws = WeightedDiagram.of("G2", (0, 2))
    found = enumerate_symplectic_contractions(ws)
    print(f"G2 (0,2):            extremal contractions {[str(m) for m in found]}")


if __name__ == "__main__":
    main()
