"""Seeded pseudo-random code generators.

Two flavors.  ``random`` places each packet on rho distinct nodes chosen
uniformly, which is rho-regular by construction but may leave a node
empty (re-rolled a bounded number of times).  ``strong`` additionally
forces every node to store exactly rho*theta/n packets, dealing replica
slots into equal chunks and swap-repairing duplicate packets within a
node.  Same seed, same code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GenerationExhausted
from .model import FRCode

MAX_ATTEMPTS = 1000

KIND_RANDOM = "random"
KIND_STRONG = "strong"


@dataclass(frozen=True)
class GenSpec:
    """Generation request.  Invalid parameter combinations raise here."""

    n: int
    theta: int
    rho: int
    seed: int = 0
    kind: str = KIND_RANDOM

    def __post_init__(self):
        if self.n < 1 or self.theta < 1 or self.rho < 1:
            raise ValueError(
                f"parameters must be positive, got n={self.n} "
                f"theta={self.theta} rho={self.rho}"
            )
        if self.rho > self.n:
            raise ValueError(
                f"replication rho={self.rho} cannot exceed node count n={self.n}"
            )
        if self.kind not in (KIND_RANDOM, KIND_STRONG):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == KIND_STRONG and (self.rho * self.theta) % self.n != 0:
            raise ValueError(
                f"strong codes need n | rho*theta, got {self.n} nodes for "
                f"{self.rho}*{self.theta} = {self.rho * self.theta} replicas"
            )


def generate(spec: GenSpec) -> FRCode:
    """Dispatch on spec.kind."""
    if spec.kind == KIND_STRONG:
        return generate_strong(spec)
    return generate_random(spec)


def generate_random(spec: GenSpec) -> FRCode:
    """rho-regular placement; retries until no node is empty."""
    if spec.kind != KIND_RANDOM:
        raise ValueError(f"spec kind is {spec.kind!r}, expected {KIND_RANDOM!r}")
    rng = random.Random(spec.seed)
    for _ in range(MAX_ATTEMPTS):
        nodes: list[set[int]] = [set() for _ in range(spec.n)]
        for p in range(1, spec.theta + 1):
            for idx in rng.sample(range(spec.n), spec.rho):
                nodes[idx].add(p)
        if all(nodes):
            return FRCode.build(spec.n, spec.theta, spec.rho, nodes)
    raise GenerationExhausted(
        f"no placement without empty nodes in {MAX_ATTEMPTS} attempts "
        f"for n={spec.n} theta={spec.theta} rho={spec.rho} seed={spec.seed}"
    )


def generate_strong(spec: GenSpec) -> FRCode:
    """Equal-size rho-regular placement via dealt slots plus swap repair."""
    if spec.kind != KIND_STRONG:
        raise ValueError(f"spec kind is {spec.kind!r}, expected {KIND_STRONG!r}")
    size = spec.rho * spec.theta // spec.n
    rng = random.Random(spec.seed)
    for _ in range(MAX_ATTEMPTS):
        slots = [p for p in range(1, spec.theta + 1) for _ in range(spec.rho)]
        rng.shuffle(slots)
        chunks = [slots[i * size : (i + 1) * size] for i in range(spec.n)]
        if _swap_repair(chunks, rng):
            return FRCode.build(spec.n, spec.theta, spec.rho, chunks)
    raise GenerationExhausted(
        f"no duplicate-free deal in {MAX_ATTEMPTS} attempts for "
        f"n={spec.n} theta={spec.theta} rho={spec.rho} seed={spec.seed}"
    )


def _surplus(chunk: list[int]) -> list[int]:
    seen: set[int] = set()
    dup = []
    for p in chunk:
        if p in seen:
            dup.append(p)
        seen.add(p)
    return dup


def _swap_repair(chunks: list[list[int]], rng: random.Random) -> bool:
    """Eliminate within-node duplicates by swapping slots between nodes.

    A swap moves one surplus copy of p out of node i in exchange for a
    packet q with q not in node i and p not in node j, so it never
    creates a new duplicate and strictly shrinks the total surplus.
    Returns False when some duplicate admits no such swap (caller
    re-deals).
    """
    while True:
        dirty = [(i, p) for i, chunk in enumerate(chunks) for p in _surplus(chunk)]
        if not dirty:
            return True
        progressed = False
        for i, p in dirty:
            if chunks[i].count(p) < 2:
                continue  # cleaned up by an earlier swap this round
            members = set(chunks[i])
            order = list(range(len(chunks)))
            rng.shuffle(order)
            for j in order:
                if j == i or p in chunks[j]:
                    continue
                swapped = False
                for q_at, q in enumerate(chunks[j]):
                    if q == p or q in members:
                        continue
                    p_at = chunks[i].index(p)
                    chunks[i][p_at], chunks[j][q_at] = q, p
                    progressed = True
                    swapped = True
                    break
                if swapped:
                    break
        if not progressed:
            return False
