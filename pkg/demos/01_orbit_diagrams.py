"""From a Jordan type to its weighted Dynkin diagram, dimension, and grading."""
from orbitkit import (
    LieType,
    grading,
    ideal_n,
    is_even,
    jm_marked_set,
    orbit_dimension,
    weighted_diagram_from_partition,
)


def show(t, parts):
    ws = weighted_diagram_from_partition(t, parts)
    g = grading(ws)
    dim = orbit_dimension(ws)
    print(f"{t} orbit {list(parts)}")
    print(f"  weights      {ws.weights}")
    print(f"  even         {is_even(ws)}")
    print(f"  jm marks     {sorted(jm_marked_set(ws).marks)}")
    print(f"  dim O        {dim}")
    print(f"  dim g_1      {g.dim(1)}")
    print(f"  dim n        {len(ideal_n(ws))}")
    # the ideal always accounts for exactly half of what g_1 leaves over
    assert dim == g.dim(1) + 2 * len(ideal_n(ws))
    print()


def main():
    show(LieType("A", 4), (3, 2))          # sl5, two block sizes
    show(LieType("B", 3), (3, 2, 2))       # so7 subregular
    show(LieType("C", 3), (2, 2, 2))       # sp6, even orbit
    show(LieType("D", 5), (4, 4, 1, 1))    # so10, spin-sensitive
    show(LieType("D", 5), (3, 3, 2, 2))    # so10, odd leading parts

    # very even types: so8 [4,4] splits into two orbits, the builder
    # returns the representative whose diagram marks the last spin node
    ws = weighted_diagram_from_partition("D4", (4, 4))
    print(f"D4 [4,4] weights {ws.weights}, dim {orbit_dimension(ws)}")


if __name__ == "__main__":
    main()
