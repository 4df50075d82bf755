"""Resolution verdicts for so/sp orbit closures, straight from the partition.

Each resolvable Jordan type falls into one clause, the clause dictates how
the weight-1 nodes split into candidate mark sets, and the checker confirms
or refutes every candidate.  The sweep below prints the whole story for a
few representative partitions.
"""
from orbitkit import (
    LieType,
    classify_resolution_case,
    enumerate_symplectic_contractions,
    resolution_candidates,
    theta_split,
    valid_partitions,
    weighted_diagram_from_partition,
)


def report(t, parts):
    t = LieType.parse(t)
    tag = classify_resolution_case(t, parts)
    print(f"{t} {list(parts)}: clause {tag}")
    if tag is None:
        assert enumerate_symplectic_contractions(weighted_diagram_from_partition(t, parts)) == []
        print("  no symplectic resolution at all")
        return
    split = theta_split(t, parts)
    print(f"  theta1 {sorted(split.theta1)}  theta2 {sorted(split.theta2)}")
    for c in resolution_candidates(t, parts):
        mark = "ok " if c.report.passes else "no "
        print(f"  {mark} {c.label:8s} {str(c.diagram):18s} predicted={c.predicted_pass}")
        assert c.predicted_pass == c.report.passes


def main():
    report("B3", (3, 2, 2))       # mixed parity, Q2 works and Q1 does not
    report("C3", (4, 2))          # sp side of the same phenomenon
    report("D5", (3, 3, 2, 2))    # odd pair up front, spin node forced into Q2
    print()

    # two odd parts in the *middle* of the partition give two decompositions
    # of theta1, swapped on the spin nodes; exactly the second halves pass
    report("D6", (4, 4, 3, 1))
    report("D7", (4, 4, 3, 3))
    # when the primed pair collapses onto the plain one, both survivors
    # carry the labels Q1 and Q2
    report("D5", (4, 4, 1, 1))
    print()

    # the residual clause: balanced flag candidates exist but none is an
    # extremal contraction; the closure has no symplectic resolution even
    # though dimensions match
    report("D9", (4, 4, 3, 3, 2, 2))
    print()

    # clause census over all of so16 / sp16
    for t in (LieType("D", 8), LieType("C", 8)):
        tags = {}
        for parts in valid_partitions(t):
            tags.setdefault(classify_resolution_case(t, parts), []).append(parts)
        print(f"{t}: {sum(len(v) for v in tags.values())} orbits")
        for tag in sorted(tags, key=str):
            print(f"  {str(tag):8s} {len(tags[tag]):3d}   e.g. {list(tags[tag][0])}")


if __name__ == "__main__":
    main()
