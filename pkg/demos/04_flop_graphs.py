"""Walk the graph of polarizations connected by local diagram moves.

A move rewrites the marks inside one patch of the Dynkin diagram and
carries an exact rational ratio between the degrees of the two collapse
maps.  Exploring from one marked diagram yields the whole equivalence
class plus relative degrees for every member.
"""
from orbitkit import (
    MODE_FLOPS,
    MODE_HIRAI,
    MarkedDiagram,
    build_root_system,
    explore,
    find_moves,
    graph_to_dot,
)


def main():
    # type A: marks are block boundaries, moves shuffle the gap sizes, so a
    # class is the set of rearrangements of one composition
    md = MarkedDiagram.of("A5", (1, 3))
    graph = explore(md, MODE_FLOPS)
    print(f"{md} class: {sorted(str(x) for x in graph.nodes)}")

    # a single marked node in E8 sitting on an A2 patch
    md = MarkedDiagram.of("E8", (2, 3))
    for mv in find_moves(build_root_system(md.lie_type), md):
        print(f"  available move: {mv}")

    # six polarizations of one 216-dimensional E8 orbit, falling into two
    # separate move classes (sizes 2 and 4)
    seen = set()
    for marks in ((1, 4), (1, 5), (2, 5), (3, 4), (3, 7), (5, 7)):
        start = MarkedDiagram.of("E8", marks)
        if start in seen:
            continue
        graph = explore(start, MODE_FLOPS)
        seen.update(graph.nodes)
        names = [",".join(f"a{i}" for i in x.sorted_marks()) for x in graph.nodes]
        flavors = sorted({mv.flavor for mv in graph.edges})
        print(f"component of {start}: size {len(graph.nodes)}  members {names}  patch flavors {flavors}")

    # the stricter move list keeps only ratio-1 patches; the permissive one
    # may connect more, here D4 with its triality-related spin marks
    md = MarkedDiagram.of("D4", (1, 3))
    strict = explore(md, MODE_FLOPS)
    loose = explore(md, MODE_HIRAI)
    print(f"{md}: strict class size {len(strict.nodes)}, permissive {len(loose.nodes)}")

    # graphviz export for inspection
    dot = graph_to_dot(explore(MarkedDiagram.of("E8", (1, 4)), MODE_FLOPS))
    print("\n" + dot)


if __name__ == "__main__":
    main()
