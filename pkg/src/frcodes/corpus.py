"""Bundled reference codes.

Four small codes exercised throughout the tests and documentation.
table1, table2 and m11x8 are valid rho-regular codes; table3 is kept
deliberately broken (packet 5 has a single replica against a declared
rho of 2) so that validation and unrepairable-node paths stay covered.
"""

from __future__ import annotations

from .model import FRCode

CORPUS_NAMES = ("table1", "table2", "table3", "m11x8")


def corpus() -> dict[str, FRCode]:
    """Name -> code, in a fixed order."""
    return {
        # 7 nodes, 8 packets, replication 3; node sizes taper from 4 to 2
        "table1": FRCode.build(
            7,
            8,
            3,
            [
                [1, 6, 7, 8],
                [1, 2, 7, 8],
                [1, 2, 3, 8],
                [2, 3, 4, 7],
                [3, 4, 5],
                [4, 5, 6],
                [5, 6],
            ],
        ),
        # 5 nodes, 9 packets, replication 2
        "table2": FRCode.build(
            5,
            9,
            2,
            [
                [1, 2, 3, 4],
                [1, 6, 9],
                [2, 5, 7, 9],
                [3, 5, 6, 8],
                [4, 7, 8],
            ],
        ),
        # 5 nodes, 8 packets, declared replication 2; packet 5 has one replica
        "table3": FRCode.build(
            5,
            8,
            2,
            [
                [1, 2, 3, 4],
                [1, 2, 5, 7],
                [3, 4, 6, 8],
                [7, 8],
                [6],
            ],
        ),
        # 11 nodes, 8 packets, replication 3; node sizes range from 1 to 4
        "m11x8": FRCode.build(
            11,
            8,
            3,
            [
                [1, 4, 7],
                [2, 5, 8],
                [3],
                [6],
                [1, 2, 3, 4],
                [5, 8],
                [6, 7],
                [1, 4, 5],
                [2, 3, 6],
                [7],
                [8],
            ],
        ),
    }
