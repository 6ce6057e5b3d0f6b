"""Exception types shared across the analysis operations.

The CLI maps these onto distinct exit codes, so the split matters more
than it would for a pure library: cap exhaustion, impossible analysis
outcomes, and generator give-ups are different failure modes.
"""

from __future__ import annotations


class FRCodeError(Exception):
    """Base class for all errors raised by this package."""


class EnumerationCapExceeded(FRCodeError):
    """An exhaustive search would enumerate more subsets than allowed."""

    def __init__(self, message: str, *, cap: int):
        super().__init__(message)
        self.cap = cap


class InfeasibleError(FRCodeError):
    """The requested coverage target cannot be met by any node subset."""


class UnrepairableError(FRCodeError):
    """A failed node holds packets with no surviving replica."""

    def __init__(self, node: int, packets: tuple[int, ...]):
        plural = "s" if len(packets) > 1 else ""
        listed = ", ".join(str(p) for p in packets)
        super().__init__(
            f"node {node} cannot be repaired: "
            f"packet{plural} {listed} ha{'ve' if plural else 's'} no surviving replica"
        )
        self.node = node
        self.packets = packets


class GenerationExhausted(FRCodeError):
    """The randomized generator ran out of retries without a valid code."""
