"""Per-node repair degrees.

When node i fails, each of its packets must be fetched from some
surviving replica.  The repair degree d_i is the number of distinct
helper nodes contacted.  Two routes: a grouping greedy that repeatedly
batches the largest set of pending packets sharing a common helper, and
an exhaustive oracle that finds a minimum helper cover.  As with
reconstruction, the greedy is reported beside the oracle, never instead
of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import EnumerationCapExceeded, UnrepairableError
from .model import FRCode, NodeId, PacketId
from .reconstruction import DEFAULT_CAP, _Budget


@dataclass(frozen=True)
class HelperSets:
    """For a failed node: packet -> surviving nodes holding that packet.

    Entries may be empty (a packet with no other replica); the repair
    operations treat any empty entry as unrepairable, while this view
    itself stays purely descriptive.
    """

    node: NodeId
    entries: dict[PacketId, frozenset[NodeId]]


@dataclass(frozen=True)
class RepairGroup:
    """Packets fetched together from one common helper node."""

    packets: tuple[PacketId, ...]
    helper: NodeId

    @property
    def gain(self) -> int:
        # transfers saved versus fetching each packet separately
        return len(self.packets) - 1


@dataclass(frozen=True)
class NodeRepair:
    """Repair summary for one node; missing_packets non-empty means unrepairable."""

    node: NodeId
    alpha_i: int
    d_greedy: int | None
    d_exact: int | None
    groups: tuple[RepairGroup, ...]
    missing_packets: tuple[PacketId, ...]


@dataclass(frozen=True)
class RepairReport:
    per_node: tuple[NodeRepair, ...]


def helper_sets(code: FRCode, i: NodeId) -> HelperSets:
    """Map each packet of node i to the other nodes that hold it."""
    target = code.node(i)
    entries = {
        p: frozenset(
            h for h in range(1, code.n + 1) if h != i and p in code.nodes[h - 1]
        )
        for p in sorted(target)
    }
    return HelperSets(node=i, entries=entries)


def _missing(entries: dict[PacketId, frozenset[NodeId]]) -> tuple[PacketId, ...]:
    return tuple(sorted(p for p, helpers in entries.items() if not helpers))


def repair_degree_greedy(code: FRCode, i: NodeId) -> tuple[int, tuple[RepairGroup, ...]]:
    """Grouping greedy repair of node i.

    Each round picks the surviving node appearing in the most pending
    helper entries (smallest id on ties), batches every pending packet it
    holds into one group, and removes those entries.  The degree is
    alpha_i minus the summed per-group gains, which equals the number of
    groups.  Raises UnrepairableError when some packet of node i has no
    surviving replica.
    """
    hs = helper_sets(code, i)
    missing = _missing(hs.entries)
    if missing:
        raise UnrepairableError(node=i, packets=missing)
    alpha_i = len(code.node(i))
    remaining = dict(hs.entries)
    groups: list[RepairGroup] = []
    while remaining:
        tally: dict[NodeId, int] = {}
        for helpers in remaining.values():
            for h in helpers:
                tally[h] = tally.get(h, 0) + 1
        best = max(tally, key=lambda h: (tally[h], -h))
        batch = tuple(sorted(p for p, helpers in remaining.items() if best in helpers))
        groups.append(RepairGroup(packets=batch, helper=best))
        for p in batch:
            del remaining[p]
    degree = alpha_i - sum(g.gain for g in groups)
    return degree, tuple(groups)


def repair_degree_exact(code: FRCode, i: NodeId, *, cap: int = DEFAULT_CAP) -> int:
    """Minimum number of helper nodes whose holdings cover node i.

    Enumerates helper subsets by increasing size under the enumeration
    cap.  Raises UnrepairableError when no helper family can cover the
    node.
    """
    target = code.node(i)
    if not target:
        return 0  # nothing stored, nothing to fetch
    target_mask = sum(1 << (p - 1) for p in target)
    pieces = []
    for h in range(1, code.n + 1):
        if h == i:
            continue
        shared = code.nodes[h - 1] & target
        if shared:
            pieces.append(sum(1 << (p - 1) for p in shared))
    reachable = 0
    for m in pieces:
        reachable |= m
    if reachable != target_mask:
        uncovered = tuple(sorted(p for p in target if not (reachable >> (p - 1)) & 1))
        raise UnrepairableError(node=i, packets=uncovered)
    budget = _Budget(cap)
    for size in range(1, len(pieces) + 1):
        for combo in combinations(pieces, size):
            budget.spend()
            u = 0
            for m in combo:
                u |= m
            if u == target_mask:
                return size
    raise AssertionError("unreachable: the full helper family covers the node")


def repair_report(code: FRCode, *, cap: int = DEFAULT_CAP) -> RepairReport:
    """Both repair degrees for every node; unrepairable nodes are flagged,
    not fatal."""
    rows = []
    for i in range(1, code.n + 1):
        alpha_i = len(code.node(i))
        missing = _missing(helper_sets(code, i).entries)
        if missing:
            rows.append(
                NodeRepair(
                    node=i,
                    alpha_i=alpha_i,
                    d_greedy=None,
                    d_exact=None,
                    groups=(),
                    missing_packets=missing,
                )
            )
            continue
        d_greedy, groups = repair_degree_greedy(code, i)
        d_exact = repair_degree_exact(code, i, cap=cap)
        rows.append(
            NodeRepair(
                node=i,
                alpha_i=alpha_i,
                d_greedy=d_greedy,
                d_exact=d_exact,
                groups=groups,
                missing_packets=(),
            )
        )
    return RepairReport(per_node=tuple(rows))
