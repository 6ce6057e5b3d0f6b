"""The FRC1 text format.

Layout::

    FRC1
    n theta rho
    <n node lines, each the node's packets ascending, single spaces>

Lines that are blank or start with ``#`` are ignored when parsing; the
writer emits the canonical form (no comments, single spaces, one
trailing newline).  parse_frc(write_frc(code)) is the identity for any
representable code; empty nodes are not representable because a blank
line is skipped.
"""

from __future__ import annotations

from .errors import FRCodeError
from .model import FRCode

MAGIC = "FRC1"


class FrcFileError(FRCodeError):
    """Base for FRC1 reading problems; carries the 1-based line number."""

    def __init__(self, message: str, *, line: int | None = None):
        if line is not None:
            message = f"{message}, line {line}"
        super().__init__(message)
        self.line = line


class FrcParseError(FrcFileError):
    """The text deviates from the grammar."""


class FrcSemanticError(FrcFileError):
    """Well-formed text describing an impossible code."""


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    rows = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped))
    return rows


def _fields(line: str, lineno: int) -> list[str]:
    parts = line.split(" ")
    if any(p == "" for p in parts):
        raise FrcParseError("fields must be separated by single spaces", line=lineno)
    return parts


def _int_fields(line: str, lineno: int) -> list[int]:
    values = []
    for part in _fields(line, lineno):
        try:
            values.append(int(part, 10))
        except ValueError:
            raise FrcParseError(f"expected an integer, got {part!r}", line=lineno) from None
    return values


def parse_frc(text: str) -> FRCode:
    """Parse FRC1 text into a code.

    Grammar deviations raise FrcParseError and impossible contents
    (ids outside 1..theta, duplicates within a node, wrong node count)
    raise FrcSemanticError, both carrying a line number where one makes
    sense.
    """
    rows = _meaningful_lines(text)
    if not rows:
        raise FrcParseError("empty input, expected an FRC1 document")
    magic_line, magic = rows[0]
    if magic != MAGIC:
        raise FrcParseError(f"expected {MAGIC!r} magic, got {magic!r}", line=magic_line)
    if len(rows) < 2:
        raise FrcParseError("missing header line after the magic", line=magic_line)
    header_line, header = rows[1]
    header_values = _int_fields(header, header_line)
    if len(header_values) != 3:
        raise FrcParseError(
            f"header must be 'n theta rho', got {len(header_values)} fields",
            line=header_line,
        )
    n, theta, rho = header_values
    if n < 1 or theta < 1 or rho < 1:
        raise FrcSemanticError(
            f"header values must be positive, got n={n} theta={theta} rho={rho}",
            line=header_line,
        )

    node_rows = rows[2:]
    if len(node_rows) != n:
        raise FrcSemanticError(f"expected {n} node lines, found {len(node_rows)}")
    nodes = []
    for lineno, line in node_rows:
        packets = _int_fields(line, lineno)
        previous = None
        for p in packets:
            if previous is not None:
                if p == previous:
                    raise FrcSemanticError(f"duplicate packet id {p}", line=lineno)
                if p < previous:
                    raise FrcParseError("packets not ascending", line=lineno)
            if not 1 <= p <= theta:
                raise FrcSemanticError(
                    f"packet id {p} out of range 1..{theta}", line=lineno
                )
            previous = p
        nodes.append(packets)
    return FRCode.build(n, theta, rho, nodes)


def write_frc(code: FRCode) -> str:
    """Canonical FRC1 text for a code.

    Raises ValueError for empty nodes, which the format cannot express.
    """
    lines = [MAGIC, f"{code.n} {code.theta} {code.rho}"]
    for i, packets in enumerate(code.nodes, start=1):
        if not packets:
            raise ValueError(f"node {i} is empty and cannot be written as FRC1")
        lines.append(" ".join(str(p) for p in sorted(packets)))
    return "\n".join(lines) + "\n"
