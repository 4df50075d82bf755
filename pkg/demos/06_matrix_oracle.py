"""Numeric cross-checks: realize the algebra by matrices and recompute.

Everything the combinatorics asserts about nilradicals can be tested
against literal matrices: sample a generic element, take its Jordan type,
measure the centralizer.  Exact integer ranks, no floating point.
"""
import numpy as np

from orbitkit import (
    MarkedDiagram,
    centralizer_dimension,
    dual_partition,
    nilradical_matrices,
    realization,
    richardson_from_flag,
    richardson_jordan_type,
)


def main():
    # the dense orbit in the nilradical of a type A flag parabolic has
    # Jordan type dual to the sorted flag
    for flag in ([2, 1, 1, 1], [3, 3, 1], [4, 2, 1]):
        jt = richardson_from_flag("A" + str(sum(flag) - 1), flag, seed=3)
        print(f"flag {flag}: generic Jordan type {list(jt)}")
        assert jt == dual_partition(tuple(sorted(flag, reverse=True)))

    # same computation from a marked diagram, here in so7
    jt = richardson_jordan_type("B3", MarkedDiagram.of("B3", (3,)))
    print(f"so7 marks {{a3}}: generic Jordan type {list(jt)}")
    assert jt == (3, 2, 2)

    # dimension bookkeeping: dim of the dense orbit equals twice the
    # nilradical, and the orbit dimension is dim g minus the centralizer
    real = realization("D4")
    md = MarkedDiagram.of("D4", (2,))
    mats = nilradical_matrices(real, md)
    rng = np.random.default_rng(7)
    x = sum(int(rng.integers(1, 9)) * m for m in mats)
    dim_orbit = real.dim_g - centralizer_dimension(real, x)
    print(f"so8 marks {{a2}}: dim u = {len(mats)}, generic orbit dim = {dim_orbit}")
    assert dim_orbit == 2 * len(mats)


if __name__ == "__main__":
    main()
