"""Node-packet set systems and their structural derivations.

A fractional repetition code spreads theta packets over n storage nodes
with a declared per-packet replication rho.  The code itself is just the
family of per-node packet sets; everything else (validation against the
declared replication, the storage profile alpha_i / delta_i, the
incidence matrix) is derived here.

Counting convention used throughout the package: nodes and packets are
1-based, matching the on-disk FRC1 format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

NodeId = int
PacketId = int


@dataclass(frozen=True)
class FRCode:
    """An (n, theta, rho) code: node i holds the packet set ``nodes[i-1]``.

    Instances are immutable value objects.  Construction via :meth:`build`
    enforces only structural sanity (positive parameters, one set per
    node, integer packet ids >= 1); semantic deviations such as a packet
    replicated the wrong number of times, an empty node, or an id above
    theta are deliberately representable so that :func:`validate` can
    report them instead of the constructor refusing the input.
    """

    n: int
    theta: int
    rho: int
    nodes: tuple[frozenset[PacketId], ...]

    @classmethod
    def build(
        cls,
        n: int,
        theta: int,
        rho: int,
        node_packets: Iterable[Iterable[PacketId]],
    ) -> "FRCode":
        """Normalize and structurally check the inputs.

        Raises ValueError when n/theta/rho are not positive, when the
        number of node sets differs from n, or when a packet id is not a
        positive integer.
        """
        if n < 1 or theta < 1 or rho < 1:
            raise ValueError(
                f"parameters must be positive, got n={n} theta={theta} rho={rho}"
            )
        sets = []
        for raw in node_packets:
            packets = frozenset(raw)
            for p in packets:
                if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                    raise ValueError(f"packet ids must be integers >= 1, got {p!r}")
            sets.append(packets)
        if len(sets) != n:
            raise ValueError(f"expected {n} node sets, got {len(sets)}")
        return cls(n=n, theta=theta, rho=rho, nodes=tuple(sets))

    def node(self, i: NodeId) -> frozenset[PacketId]:
        """Packet set of node i, 1-based.  Raises ValueError out of range."""
        if not 1 <= i <= self.n:
            raise ValueError(f"node id {i} out of range 1..{self.n}")
        return self.nodes[i - 1]

    @property
    def universe(self) -> frozenset[PacketId]:
        """The declared packet universe {1..theta}."""
        return frozenset(range(1, self.theta + 1))


@dataclass(frozen=True)
class Violation:
    """One structured validation finding.

    kind is one of "replication" (packet, actual, expected set),
    "empty_node" (node set) or "out_of_range" (node, packet set).
    """

    kind: str
    node: NodeId | None = None
    packet: PacketId | None = None
    actual: int | None = None
    expected: int | None = None

    def message(self) -> str:
        if self.kind == "replication":
            return (
                f"packet {self.packet} replicated {self.actual} time"
                f"{'s' if self.actual != 1 else ''}, expected {self.expected}"
            )
        if self.kind == "empty_node":
            return f"node {self.node} holds no packets"
        if self.kind == "out_of_range":
            return f"node {self.node} holds packet {self.packet} outside 1..{self.expected}"
        return self.kind


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a code against its declared parameters.

    eq1_residual is n*alpha - rho*theta - delta, which collapses to
    sum(alpha_i) - rho*theta; it is 0 exactly when the total number of
    stored packet copies matches a rho-regular placement.
    """

    ok: bool
    per_packet_replication: tuple[int, ...]
    violations: tuple[Violation, ...]
    eq1_residual: int


@dataclass(frozen=True)
class DerivedParams:
    """Storage profile: alpha_i = |U_i|, alpha = max, delta_i = alpha - alpha_i."""

    alpha: int
    alpha_i: tuple[int, ...]
    delta_i: tuple[int, ...]
    delta: int
    strong: bool


@dataclass(frozen=True)
class IncidenceMatrix:
    """n x theta binary matrix: bits[i][j] == 1 iff packet j+1 sits on node i+1."""

    rows: int
    cols: int
    bits: tuple[tuple[int, ...], ...]


def validate(code: FRCode) -> ValidationReport:
    """Check the declared replication and report structural deviations.

    Records a violation for every packet whose replica count differs from
    rho, every empty node, and every stored id above theta.  Analysis
    operations accept codes that fail validation; callers that want
    strictness gate on ``report.ok``.
    """
    counts = []
    violations: list[Violation] = []
    for j in range(1, code.theta + 1):
        c = sum(1 for packets in code.nodes if j in packets)
        counts.append(c)
        if c != code.rho:
            violations.append(
                Violation(kind="replication", packet=j, actual=c, expected=code.rho)
            )
    for i, packets in enumerate(code.nodes, start=1):
        if not packets:
            violations.append(Violation(kind="empty_node", node=i))
        for p in sorted(packets):
            if p > code.theta:
                violations.append(
                    Violation(kind="out_of_range", node=i, packet=p, expected=code.theta)
                )
    total_stored = sum(len(packets) for packets in code.nodes)
    residual = total_stored - code.rho * code.theta
    return ValidationReport(
        ok=not violations,
        per_packet_replication=tuple(counts),
        violations=tuple(violations),
        eq1_residual=residual,
    )


def derive_params(code: FRCode) -> DerivedParams:
    """Per-node storage profile and the strong flag (delta == 0)."""
    alpha_i = tuple(len(packets) for packets in code.nodes)
    alpha = max(alpha_i)
    delta_i = tuple(alpha - a for a in alpha_i)
    delta = sum(delta_i)
    return DerivedParams(
        alpha=alpha,
        alpha_i=alpha_i,
        delta_i=delta_i,
        delta=delta,
        strong=delta == 0,
    )


def incidence_matrix(code: FRCode) -> IncidenceMatrix:
    """Node-by-packet 0/1 matrix.  Ids above theta have no column."""
    bits = tuple(
        tuple(1 if j in packets else 0 for j in range(1, code.theta + 1))
        for packets in code.nodes
    )
    return IncidenceMatrix(rows=code.n, cols=code.theta, bits=bits)


def column_support(matrix: IncidenceMatrix, j: PacketId) -> frozenset[NodeId]:
    """Set of nodes holding packet j, read off column j of the matrix."""
    if not 1 <= j <= matrix.cols:
        raise ValueError(f"packet id {j} out of range 1..{matrix.cols}")
    return frozenset(i + 1 for i in range(matrix.rows) if matrix.bits[i][j - 1])
