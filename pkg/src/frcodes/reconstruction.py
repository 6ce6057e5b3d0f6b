"""Reconstruction degrees and the rate profile of a code.

The file behind a code is recoverable from any theta-1 distinct packets,
so every question here reduces to set coverage: k_star asks for the
smallest node subset reaching theta-1 packets, k_fr for the smallest
size at which every subset reaches it, and R(k) for the worst coverage
among k-subsets.

Two routes are kept deliberately separate and are never allowed to feed
each other: exhaustive oracles that enumerate node subsets (bounded by a
configurable cap), and two seeded greedy procedures that reproduce the
published step sequences faithfully, recording a step trace per seed.
The greedy k_star value is an upper bound on the exact one; the greedy
k_fr value carries no guarantee and is always reported beside the exact
quantifier rather than instead of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import EnumerationCapExceeded, InfeasibleError
from .model import FRCode, NodeId

DEFAULT_CAP = 10_000_000

COMPLETED = "completed"
FAILED = "failed"


@dataclass(frozen=True)
class CoverageTarget:
    """Packets needed to rebuild the file: theta - 1 distinct ones."""

    required: int

    @classmethod
    def for_code(cls, code: FRCode) -> "CoverageTarget":
        return cls(required=code.theta - 1)


@dataclass(frozen=True)
class TraceStep:
    """One union in a greedy run: chosen node, coverage after, counter."""

    node: NodeId
    covered: tuple[int, ...]
    counter: int


@dataclass(frozen=True)
class GreedyTrace:
    """Full record of one seeded greedy run.

    The seed itself is the first step (counter 1), so the final counter
    equals the number of nodes unioned.  ``algorithm`` is "k_star" for
    the upper-bound search (which works on node sets with the last packet
    removed) and "k_fr" for the worst-case search (full packet sets).
    Runs that stall before reaching their success test are marked FAILED.
    """

    algorithm: str
    seed: NodeId
    steps: tuple[TraceStep, ...]
    outcome: str


@dataclass(frozen=True)
class DegreeReport:
    """All four reconstruction degrees plus every greedy trace.

    k_fr_greedy is None when every seeded run stalled ("no valid run").
    """

    target: CoverageTarget
    k_star_greedy: int
    k_star_exact: int
    k_fr_greedy: int | None
    k_fr_exact: int
    traces: tuple[GreedyTrace, ...]


class _Budget:
    """Countdown over enumerated subsets; raises once the cap is spent."""

    __slots__ = ("cap", "left")

    def __init__(self, cap: int):
        if cap < 1:
            raise ValueError(f"enumeration cap must be >= 1, got {cap}")
        self.cap = cap
        self.left = cap

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise EnumerationCapExceeded(
                f"enumeration cap of {self.cap} subsets exceeded", cap=self.cap
            )


def _node_masks(code: FRCode) -> list[int]:
    # packet p occupies bit p-1; masks make subset unions a single OR
    return [sum(1 << (p - 1) for p in packets) for packets in code.nodes]


def coverage(code: FRCode, nodes: Iterable[NodeId]) -> int:
    """Number of distinct packets held by the given nodes together."""
    union: frozenset[int] = frozenset()
    for i in set(nodes):
        union |= code.node(i)
    return len(union)


def _min_union(masks: list[int], k: int) -> int:
    best = None
    for combo in combinations(masks, k):
        u = 0
        for m in combo:
            u |= m
        size = u.bit_count()
        if best is None or size < best:
            best = size
    assert best is not None
    return best


def rate(code: FRCode, k: int, *, cap: int = DEFAULT_CAP) -> int:
    """Worst-case coverage over all k-subsets of nodes: R(k).

    Refuses upfront when C(n, k) exceeds the cap.
    """
    if not 1 <= k <= code.n:
        raise ValueError(f"k={k} out of range 1..{code.n}")
    count = comb(code.n, k)
    if count > cap:
        raise EnumerationCapExceeded(
            f"C({code.n},{k}) = {count} subsets exceeds cap {cap}", cap=cap
        )
    return _min_union(_node_masks(code), k)


def rate_profile(code: FRCode, *, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    """R(k) for k = 1..n.  Never decreases; R(n) is the full coverage."""
    peak = comb(code.n, code.n // 2)
    if peak > cap:
        raise EnumerationCapExceeded(
            f"C({code.n},{code.n // 2}) = {peak} subsets exceeds cap {cap}", cap=cap
        )
    masks = _node_masks(code)
    return tuple(_min_union(masks, k) for k in range(1, code.n + 1))


def _require_feasible(code: FRCode, masks: list[int], required: int) -> None:
    total = 0
    for m in masks:
        total |= m
    if total.bit_count() < required:
        raise InfeasibleError(
            f"all {code.n} nodes together hold {total.bit_count()} distinct packets, "
            f"need {required}"
        )


def k_star_exact(code: FRCode, *, cap: int = DEFAULT_CAP) -> int:
    """Smallest t such that some t-subset of nodes covers theta-1 packets."""
    required = CoverageTarget.for_code(code).required
    masks = _node_masks(code)
    _require_feasible(code, masks, required)
    budget = _Budget(cap)
    for t in range(1, code.n + 1):
        for combo in combinations(masks, t):
            budget.spend()
            u = 0
            for m in combo:
                u |= m
            if u.bit_count() >= required:
                return t
    raise AssertionError("unreachable: full node set passed the feasibility check")


def k_fr_exact(code: FRCode, *, cap: int = DEFAULT_CAP) -> int:
    """Smallest t such that every t-subset of nodes covers theta-1 packets.

    Direct quantification over all subsets of each size; the equivalent
    route min{k : R(k) >= theta-1} lives in :func:`rate_profile` and is
    cross-checked in the tests rather than reused here.
    """
    required = CoverageTarget.for_code(code).required
    masks = _node_masks(code)
    _require_feasible(code, masks, required)
    budget = _Budget(cap)
    for t in range(1, code.n + 1):
        ok = True
        for combo in combinations(masks, t):
            budget.spend()
            u = 0
            for m in combo:
                u |= m
            if u.bit_count() < required:
                ok = False
                break
        if ok:
            return t
    raise AssertionError("unreachable: the full node set passed the feasibility check")


def _pick(candidates: list[tuple[int, frozenset[int]]], key) -> tuple[int, frozenset[int]]:
    # max by key, smallest node id on ties
    return max(candidates, key=lambda item: (key(item[1]), -item[0]))


def k_star_greedy(code: FRCode) -> tuple[int, tuple[GreedyTrace, ...]]:
    """Seeded greedy upper bound on k_star, with one trace per seed.

    Procedure: remove the last packet (theta) from every node, drop nodes
    that became empty, then drop every node whose set is contained in
    another kept node (equal sets keep the smallest id).  Seeds are all
    kept nodes of maximum cardinality.  Each run first unions a
    maximum-cardinality node disjoint from the pool while one exists,
    then repeatedly unions the node adding the most new packets until
    every kept node is contained in the pool.  The result is the minimum
    counter over seeds and always bounds k_star_exact from above on
    rho-regular codes.
    """
    if code.theta < 2:
        raise ValueError(f"need theta >= 2 to sacrifice a packet, got {code.theta}")
    sacrificed = code.theta
    reduced = [
        (i, frozenset(packets - {sacrificed}))
        for i, packets in enumerate(code.nodes, start=1)
    ]
    reduced = [(i, v) for i, v in reduced if v]
    if not reduced:
        raise InfeasibleError(
            f"every node is empty once packet {sacrificed} is removed"
        )
    kept: list[tuple[int, frozenset[int]]] = []
    for i, v in reduced:
        dominated = any(
            v < w or (v == w and j < i) for j, w in reduced if j != i
        )
        if not dominated:
            kept.append((i, v))
    top = max(len(v) for _, v in kept)
    seeds = [(i, v) for i, v in kept if len(v) == top]

    traces: list[GreedyTrace] = []
    counts: list[int] = []
    for seed_id, seed_set in seeds:
        covered = set(seed_set)
        counter = 1
        steps = [TraceStep(node=seed_id, covered=tuple(sorted(covered)), counter=1)]
        while True:  # disjoint phase
            cands = [(i, v) for i, v in kept if not (v & covered)]
            if not cands:
                break
            i, v = _pick(cands, len)
            covered |= v
            counter += 1
            steps.append(TraceStep(node=i, covered=tuple(sorted(covered)), counter=counter))
        while True:  # marginal-gain phase, runs until containment
            cands = [(i, v) for i, v in kept if not (v <= covered)]
            if not cands:
                break
            i, v = _pick(cands, lambda s: len(s - covered))
            covered |= v
            counter += 1
            steps.append(TraceStep(node=i, covered=tuple(sorted(covered)), counter=counter))
        traces.append(
            GreedyTrace(algorithm="k_star", seed=seed_id, steps=tuple(steps), outcome=COMPLETED)
        )
        counts.append(counter)
    return min(counts), tuple(traces)


def k_fr_greedy(code: FRCode) -> tuple[int | None, tuple[GreedyTrace, ...]]:
    """Seeded greedy estimate of k_fr, with one trace per seed.

    One run per node, highest id first: the run for seed m works inside
    the prefix collection {U_1..U_m} with pool P = U_m.  A run succeeds
    as soon as at most one packet of {1..theta} is missing from P.
    Growth first unions a maximum-cardinality node disjoint from P while
    one exists, then switches permanently to the node adding the most new
    packets.  A run with no way to grow before succeeding is FAILED and
    excluded; the result is the maximum counter over completed runs, or
    None when every run failed.
    """
    omega = set(range(1, code.theta + 1))
    traces: list[GreedyTrace] = []
    completed: list[int] = []
    for m in range(code.n, 0, -1):
        prefix = [(j, code.nodes[j - 1]) for j in range(1, m + 1)]
        covered = set(code.nodes[m - 1])
        counter = 1
        steps = [TraceStep(node=m, covered=tuple(sorted(covered)), counter=1)]
        outcome = COMPLETED if len(omega - covered) <= 1 else None
        while outcome is None:  # disjoint phase, re-tested after each union
            cands = [(j, u) for j, u in prefix if not (u & covered)]
            if not cands:
                break
            j, u = _pick(cands, len)
            covered |= u
            counter += 1
            steps.append(TraceStep(node=j, covered=tuple(sorted(covered)), counter=counter))
            if len(omega - covered) <= 1:
                outcome = COMPLETED
        while outcome is None:  # marginal-gain phase, no return to the disjoint one
            cands = [(j, u) for j, u in prefix if not (u <= covered)]
            if not cands:
                outcome = FAILED
                break
            j, u = _pick(cands, lambda s: len(s - covered))
            covered |= u
            counter += 1
            steps.append(TraceStep(node=j, covered=tuple(sorted(covered)), counter=counter))
            if len(omega - covered) <= 1:
                outcome = COMPLETED
        traces.append(
            GreedyTrace(algorithm="k_fr", seed=m, steps=tuple(steps), outcome=outcome)
        )
        if outcome == COMPLETED:
            completed.append(counter)
    if not completed:
        return None, tuple(traces)
    return max(completed), tuple(traces)


def degree_report(code: FRCode, *, cap: int = DEFAULT_CAP) -> DegreeReport:
    """Run both greedy procedures and both exact oracles on one code."""
    star_greedy, star_traces = k_star_greedy(code)
    fr_greedy, fr_traces = k_fr_greedy(code)
    return DegreeReport(
        target=CoverageTarget.for_code(code),
        k_star_greedy=star_greedy,
        k_star_exact=k_star_exact(code, cap=cap),
        k_fr_greedy=fr_greedy,
        k_fr_exact=k_fr_exact(code, cap=cap),
        traces=star_traces + fr_traces,
    )
