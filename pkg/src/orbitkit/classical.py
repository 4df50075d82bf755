"""Partition combinatorics for nilpotent orbits in the classical algebras.

Orbits of sl/so/sp are Jordan types; resolvability of the closure and the
candidate resolutions are read off the partition and the weight-1 nodes of
its diagram.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .orbits import WeightedDiagram, is_even, weighted_diagram_from_partition
from .parabolic import ContractionReport, check_extremal_contraction
from .roots import LieType, MarkedDiagram


def parse_partition(text: str) -> tuple[int, ...]:
    s = text.strip().strip("[]")
    try:
        parts = tuple(int(tok) for tok in s.replace(",", " ").split())
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return tuple(sorted(parts, reverse=True))


def partition_violation(t: LieType | str, parts: Sequence[int]) -> str | None:
    """The violated validity rule for this Jordan type, or None when valid."""
    t = LieType.parse(t)
    if not parts or any(not isinstance(d, int) or d <= 0 for d in parts):
        return "parts must be positive integers"
    if list(parts) != sorted(parts, reverse=True):
        return "parts must be weakly decreasing"
    total = sum(parts)
    n = t.rank
    expected = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}.get(t.family)
    if expected is None:
        return f"no partition orbits in family {t.family}"
    if total != expected:
        return f"parts must sum to {expected} for {t}, got {total}"
    if t.family in ("B", "D"):
        bad = [d for d in set(parts) if d % 2 == 0 and parts.count(d) % 2 == 1]
        if bad:
            return f"even parts must have even multiplicity (violated by {sorted(bad)})"
    if t.family == "C":
        bad = [d for d in set(parts) if d % 2 == 1 and parts.count(d) % 2 == 1]
        if bad:
            return f"odd parts must have even multiplicity (violated by {sorted(bad)})"
    return None


def validate_partition(t: LieType | str, parts: Sequence[int]) -> None:
    msg = partition_violation(t, parts)
    if msg is not None:
        raise ValueError(f"invalid partition {list(parts)} for {LieType.parse(t)}: {msg}")


def dual_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the Young diagram."""
    if not parts:
        return ()
    return tuple(sum(1 for d in parts if d >= v) for v in range(1, max(parts) + 1))


def is_very_even(t: LieType | str, parts: Sequence[int]) -> bool:
    return LieType.parse(t).family == "D" and all(d % 2 == 0 for d in parts)


def _odd_positions(parts: Sequence[int]) -> list[int]:
    return [i + 1 for i, d in enumerate(parts) if d % 2 == 1]


def classify_resolution_case(t: LieType | str, parts: Sequence[int]) -> str | None:
    """Resolvability clause: i, ii, iii-a, iii-b-1/2/3, even, or None (not resolvable).

    Uniform part parity means the orbit is even, hence resolved by its own
    grading parabolic.  Mixed-parity cases follow the classical prefix and
    two-odd-parts criteria.
    """
    t = LieType.parse(t)
    validate_partition(t, parts)
    odds = _odd_positions(parts)
    uniform = len(odds) in (0, len(parts))
    if uniform:
        return "even"
    if t.family == "A":
        return "i"
    q = len(odds)
    prefix = odds == list(range(1, q + 1))
    if t.family in ("B", "C"):
        # the parity of q is forced by the total, so the prefix is the whole test
        return "ii" if prefix else None
    # family D, mixed parity
    if prefix and q >= 4 and q % 2 == 0:
        return "iii-a"
    if q == 2 and odds[1] == odds[0] + 1 and odds[0] % 2 == 1:
        te = (odds[0] + 1) // 2
        if te == 1:
            return "iii-b-1"
        if len(parts) == 2 * te:
            return "iii-b-2"
        return "iii-b-3"
    return None


def admits_symplectic_resolution_classical(t: LieType | str, parts: Sequence[int]) -> tuple[bool, str | None]:
    """Whether the orbit closure admits a symplectic resolution, with its clause."""
    tag = classify_resolution_case(t, parts)
    return tag is not None, tag


@dataclass(frozen=True)
class ThetaSplit:
    theta0: frozenset[int]
    theta1: frozenset[int]
    theta2: frozenset[int]
    case_tag: str
    # each entry is one decomposition of theta1 into a pair (I, II)
    splits: tuple[tuple[frozenset[int], frozenset[int]], ...]


def _interleave(nodes: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    ordered = sorted(nodes)
    return frozenset(ordered[0::2]), frozenset(ordered[1::2])


def theta_split(t: LieType | str, parts: Sequence[int]) -> ThetaSplit:
    """Split the weight-1 nodes into the two halves that build the candidate Q's."""
    t = LieType.parse(t)
    ws = weighted_diagram_from_partition(t, parts)
    n = t.rank
    theta0 = frozenset(i for i in range(1, n + 1) if ws.weight(i) == 0)
    theta1 = frozenset(i for i in range(1, n + 1) if ws.weight(i) == 1)
    theta2 = frozenset(i for i in range(1, n + 1) if ws.weight(i) == 2)
    tag = classify_resolution_case(t, parts)
    if tag is None:
        tag = "none"
    splits: tuple[tuple[frozenset[int], frozenset[int]], ...] = ()
    if tag in ("i", "ii", "iii-a"):
        splits = (_interleave(sorted(theta1)),)
    elif tag == "iii-b-1":
        body = sorted(theta1 - {n})
        one, two = _interleave(body)
        splits = ((one, two | {n}),)
    elif tag == "iii-b-2":
        one, two = _interleave(sorted(theta1))
        swap = lambda s: (s - {n - 1, n}) | ({n} if (n - 1) in s else set()) | ({n - 1} if n in s else set())
        primed = (frozenset(swap(one)), frozenset(swap(two)))
        splits = ((one, two),)
        if {primed[0], primed[1]} != {one, two}:
            splits = ((one, two), primed)
    elif tag == "iii-b-3":
        splits = (_interleave(sorted(theta1)),)
    return ThetaSplit(theta0, theta1, theta2, tag, splits)


@dataclass(frozen=True)
class Candidate:
    diagram: MarkedDiagram
    label: str
    kind: str  # "contraction" for Theta-built Q's, "levi-flag" for the residual polarization
    predicted_pass: bool
    report: ContractionReport


def _levi_flag_for_iii_b_3(parts: Sequence[int]) -> tuple[int, ...]:
    """GL block sizes of the residual polarization: half of the dual of d'."""
    odds = _odd_positions(parts)
    d_prime = list(parts)
    d_prime[odds[0] - 1] += 1
    d_prime[odds[1] - 1] -= 1
    d_prime = [d for d in sorted(d_prime, reverse=True) if d > 0]
    dual = dual_partition(d_prime)
    # all parts of d' are even, so the dual pairs up column counts
    assert all(dual[i] == dual[i + 1] for i in range(0, len(dual), 2))
    return tuple(dual[1::2])


def flag_to_marked(t: LieType | str, flag: Sequence[int]) -> list[MarkedDiagram]:
    """Marked diagrams of the parabolic stabilizing a flag with these block sizes.

    The composition must sum to n+1 in type A (full flags of the natural
    module) and to n otherwise (isotropic flags).  Marks sit at the partial
    sums; in type D a final sum of n stands for either ruling family, so the
    two spin choices are both returned unless alpha_{n-1} is already marked.
    """
    t = LieType.parse(t)
    if any(not isinstance(p, int) or p <= 0 for p in flag):
        raise ValueError(f"flag blocks must be positive integers, got {list(flag)}")
    n = t.rank
    total = sum(flag)
    expected = n + 1 if t.family == "A" else n
    if total != expected:
        raise ValueError(f"flag must sum to {expected} for {t}, got {total}")
    sums = []
    acc = 0
    for p in flag:
        acc += p
        sums.append(acc)
    if t.family == "A":
        return [MarkedDiagram(t, frozenset(s for s in sums if s <= n))]
    if t.family in ("B", "C"):
        return [MarkedDiagram(t, frozenset(sums))]
    # family D: the final sum n marks one of the spin nodes
    body = frozenset(s for s in sums if s < n)
    if n - 1 in body:
        return [MarkedDiagram(t, body | {n})]
    return [MarkedDiagram(t, body | {n - 1}), MarkedDiagram(t, body | {n})]


def richardson_type_A(flag: Sequence[int]) -> tuple[int, ...]:
    """Jordan type of the dense orbit in the nilradical: the dual of the flag."""
    if any(not isinstance(p, int) or p <= 0 for p in flag):
        raise ValueError(f"flag blocks must be positive integers, got {list(flag)}")
    return dual_partition(tuple(sorted(flag, reverse=True)))


def resolution_candidates(t: LieType | str, parts: Sequence[int]) -> list[Candidate]:
    """Candidate resolutions built from the Theta-split, with predicted verdicts."""
    t = LieType.parse(t)
    ws = weighted_diagram_from_partition(t, parts)
    split = theta_split(t, parts)
    tag = split.case_tag
    out: list[Candidate] = []

    def add(marks: frozenset[int], label: str, kind: str, predicted: bool) -> None:
        md = MarkedDiagram(t, marks)
        out.append(Candidate(md, label, kind, predicted, check_extremal_contraction(ws, md)))

    if tag == "even":
        add(split.theta2, "mu", "contraction", True)
        return out
    if tag == "none":
        return out
    predicted = {
        "i": (True, True),
        "ii": (False, True),
        "iii-a": (False, True),
        "iii-b-1": (False, True),
        # with two distinct decompositions only the II sides survive the
        # balance check; when the primed copy collapses onto the unprimed
        # one, Q1 == Q2' and both candidates pass
        "iii-b-2": (len(split.splits) == 1, True),
        "iii-b-3": (False, False),
    }[tag]
    for idx, (one, two) in enumerate(split.splits):
        prime = "'" * idx
        add(one | split.theta2, f"Q1{prime}", "contraction", predicted[0])
        add(two | split.theta2, f"Q2{prime}", "contraction", predicted[1])
    if tag == "iii-b-3":
        flag = _levi_flag_for_iii_b_3(parts)
        for md in flag_to_marked(t, flag):
            out.append(
                Candidate(md, f"levi{list(flag)}", "levi-flag", False, check_extremal_contraction(ws, md))
            )
    return out


def partition_from_diagram(ws: WeightedDiagram) -> tuple[int, ...] | None:
    """Invert the diagram recipe; None when the weights fit no Jordan type."""
    t = ws.lie_type
    n = t.rank
    w = ws.weights
    if t.family == "A":
        suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix[i] = suffix[i + 1] + w[i]
        total = sum(suffix)
        if total % (n + 1) != 0:
            return None
        x = -total // (n + 1)
        h = [s + x for s in suffix]
        full = h
    elif t.family == "B":
        h = [0] * n
        h[n - 1] = w[n - 1]
        for i in range(n - 2, -1, -1):
            h[i] = h[i + 1] + w[i]
        full = h + [0] + [-v for v in h]
    elif t.family == "C":
        if w[n - 1] % 2 != 0:
            return None
        h = [0] * n
        h[n - 1] = w[n - 1] // 2
        for i in range(n - 2, -1, -1):
            h[i] = h[i + 1] + w[i]
        full = h + [-v for v in h]
    else:
        if (w[n - 1] - w[n - 2]) % 2 != 0:
            return None
        h = [0] * n
        h[n - 1] = (w[n - 1] - w[n - 2]) // 2
        h[n - 2] = (w[n - 1] + w[n - 2]) // 2
        for i in range(n - 3, -1, -1):
            h[i] = h[i + 1] + w[i]
        full = h + [-v for v in h]
    remaining: dict[int, int] = {}
    for v in full:
        remaining[v] = remaining.get(v, 0) + 1
    parts = []
    while any(c > 0 for c in remaining.values()):
        v = max(val for val, c in remaining.items() if c > 0)
        for u in range(v, -v - 1, -2):
            if remaining.get(u, 0) <= 0:
                return None
            remaining[u] -= 1
        parts.append(v + 1)
    parts_t = tuple(sorted(parts, reverse=True))
    if partition_violation(t, parts_t) is not None:
        return None
    return parts_t


def valid_partitions(t: LieType | str) -> Iterator[tuple[int, ...]]:
    """All Jordan types for this algebra, in descending lexicographic order."""
    t = LieType.parse(t)
    n = t.rank
    total = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}.get(t.family)
    if total is None:
        raise ValueError(f"no partition orbits in family {t.family}")

    def gen(remaining: int, cap: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(acc)
            return
        for d in range(min(cap, remaining), 0, -1):
            acc.append(d)
            yield from gen(remaining - d, d, acc)
            acc.pop()

    for parts in gen(total, total, []):
        if partition_violation(t, parts) is None:
            yield parts
