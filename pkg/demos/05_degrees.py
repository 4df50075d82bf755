"""Generic degrees of the collapse maps, by anchor plus ratio propagation.

Moves only know degree ratios.  To get absolute numbers one member of the
class must be pinned independently: an even orbit gives degree 1 in the
exceptional types (read from the bundled tables), and in the classical
types a quick matrix computation can certify degree 1 directly.
"""
from orbitkit import (
    MODE_HIRAI,
    MarkedDiagram,
    absolute_degrees,
    component_anchors,
    explore,
)


def degrees_of(t, marks):
    # the permissive move list carries the unequal-degree rewrites, which is
    # what lets an anchor reach the rest of its component
    graph = explore(MarkedDiagram.of(t, marks), MODE_HIRAI)
    anchors = component_anchors(graph)
    result = absolute_degrees(graph, anchors)
    print(f"{t} class of {','.join(f'a{i}' for i in sorted(marks))}:")
    if not result.anchored:
        print(f"  no anchor in the component, relative degrees only: "
              f"{ {str(k): str(v) for k, v in result.degrees.items()} }")
        return result
    for md in sorted(result.degrees, key=lambda m: m.sorted_marks()):
        star = " <- anchor" if md in result.anchors_used else ""
        print(f"  {str(md):14s} degree {result.degrees[md]}{star}")
    return result


def main():
    # the two polarizations of a 208-dimensional E8 orbit: the single-mark
    # one is the even JM parabolic (degree 1), the other inherits 10
    r = degrees_of("E8", (2, 3))
    assert r.degrees[MarkedDiagram.of("E8", (5,))] == 1
    assert r.degrees[MarkedDiagram.of("E8", (2, 3))] == 10

    # an E7 pair where the ratio is 3
    r = degrees_of("E7", (2, 3, 7))
    assert r.degrees[MarkedDiagram.of("E7", (2, 3, 7))] == 3

    # type A polarizations are all degree 1; here the anchor comes from the
    # matrix oracle, not from a table
    r = degrees_of("A5", (2, 4))
    assert set(r.degrees.values()) == {1}

    # D4 spin pair, degree 2 against the even anchor
    r = degrees_of("D4", (1, 3))
    assert max(r.degrees.values()) == 2


if __name__ == "__main__":
    main()
