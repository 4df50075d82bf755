"""The bundled orbit atlas: records for the exceptional isolated cases.

Each record stores the weighted diagram, dimension, fundamental group
order, and the known polarizations with degrees.  Loading re-validates
every stored number against the engine; tampered files are rejected.
"""
from orbitkit import check_extremal_contraction, find_record, load_atlas


def main():
    records = load_atlas()
    print(f"{len(records)} records")
    for rec in records:
        pols = ", ".join(
            f"{{{','.join(f'a{i}' for i in sorted(p.md.marks))}}}:{p.degree}"
            + ("*" if p.extremal else "")
            for p in rec.polarizations
        )
        print(f"  {str(rec.algebra):3s} {rec.label:12s} dim {rec.dim:3d}  "
              f"pi1 {str(rec.pi1_order):4s} resolvable {rec.resolvable:3s}  {pols}")
    print("  (* = extremal contraction, degree 1 by construction)")

    # stored extremal polarizations really do pass the checker
    rec = find_record(records, "E7", "D6(a1)")
    for p in rec.polarizations:
        rep = check_extremal_contraction(rec.weights, p.md)
        assert rep.passes == p.extremal
    print(f"\nE7 D6(a1) polarization audit ok: {[sorted(p.md.marks) for p in rec.polarizations]}")


if __name__ == "__main__":
    main()
