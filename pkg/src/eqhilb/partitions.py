"""Young diagrams: enumeration, hooks, box weights, M-cores and M-quotients.

A partition ``(b_0, b_1, ..., b_{r-1})`` is drawn with row ``j`` holding the
monomials ``x^a y^j`` for ``0 <= a < b_j``; this is the monomial ideal of
colength ``|p|`` in C[x, y] that the diagram stands for.  Under the action
``(x, y) -> (s x, s^N y)`` of the cyclic group of order M the box ``x^a y^b``
has weight ``(a + N b) mod M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .series import MotivicSeries, product_of_factors

__all__ = [
    "Partition",
    "CoreQuotient",
    "iter_partitions",
    "enumerate_partitions",
    "partition_count",
    "hook_lengths",
    "box_weights",
    "is_equidistributed",
    "core_and_quotient",
    "core_by_rim_hooks",
    "is_core",
    "core_counting_series",
]


class Partition:
    """Weakly decreasing tuple of positive parts."""

    __slots__ = ("parts", "size")

    def __init__(self, parts=()):
        parts = tuple(int(b) for b in parts)
        if any(b <= 0 for b in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts
        self.size = sum(parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, j):
        return self.parts[j]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(sum(1 for b in self.parts if b > a) for a in range(self.parts[0]))

    def boxes(self) -> Iterator[tuple]:
        """Boxes ``(a, b)`` standing for the monomials ``x^a y^b``."""
        for b, row in enumerate(self.parts):
            for a in range(row):
                yield a, b


@dataclass(frozen=True)
class CoreQuotient:
    core: Partition
    quotient: tuple

    @property
    def quotient_sizes(self) -> tuple:
        return tuple(q.size for q in self.quotient)

    @property
    def weight(self) -> int:
        return sum(self.quotient_sizes)


def _descending(k: int, largest: int) -> Iterator[tuple]:
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _descending(k - first, first):
            yield (first,) + rest


def iter_partitions(k: int) -> Iterator[Partition]:
    """Partitions of ``k`` in descending lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    for parts in _descending(k, k):
        yield Partition(parts)


def enumerate_partitions(k: int) -> list:
    return list(iter_partitions(k))


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """p(k) by Euler's pentagonal-number recurrence."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    total, g = 0, 1
    while True:
        for pent in (g * (3 * g - 1) // 2, g * (3 * g + 1) // 2):
            if pent > k:
                return total
            total += (-1) ** (g + 1) * partition_count(k - pent)
        g += 1


def hook_lengths(p: Partition) -> list:
    """Hook length (arm + leg + 1) of every box, row by row."""
    conj = p.conjugate().parts
    return [
        (row - a - 1) + (conj[a] - j - 1) + 1
        for j, row in enumerate(p.parts)
        for a in range(row)
    ]


def box_weights(p: Partition, M: int, N: int) -> list:
    if M < 1:
        raise ValueError("M must be positive")
    counts = [0] * M
    for a, b in p.boxes():
        counts[(a + N * b) % M] += 1
    return counts


def is_equidistributed(p: Partition, M: int, N: int) -> bool:
    """All M weights occur on the same number of boxes."""
    counts = box_weights(p, M, N)
    return all(c == counts[0] for c in counts)


def _beta_numbers(parts: tuple, n: int) -> list:
    # first-column hook lengths of the diagram padded to n rows
    padded = list(parts) + [0] * (n - len(parts))
    return [padded[i] + n - 1 - i for i in range(n)]


def _from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return Partition(b for b in (beta[i] - (n - 1 - i) for i in range(n)) if b > 0)


def core_and_quotient(p: Partition, M: int) -> CoreQuotient:
    """M-core and M-quotient on the M-runner abacus.

    The diagram is padded to a multiple of M rows, so runner ``t`` holds the
    beta-numbers congruent to ``t`` mod M; ``quotient[t]`` is read off
    runner ``t`` and the core comes from pushing every bead up its runner.
    """
    if M < 1:
        raise ValueError("M must be positive")
    n = -(-len(p.parts) // M) * M
    beta = _beta_numbers(p.parts, n)
    runners = [sorted(b // M for b in beta if b % M == t) for t in range(M)]
    quotient = tuple(_from_beta(r) for r in runners)
    core_beta = [t + M * pos for t, r in enumerate(runners) for pos in range(len(r))]
    return CoreQuotient(_from_beta(core_beta), quotient)


def core_by_rim_hooks(p: Partition, M: int) -> Partition:
    """M-core by stripping rim hooks of length M one at a time.

    Independent of the abacus construction above; on beta-numbers, removing
    a rim M-hook is moving one bead from position ``b`` to a free ``b - M``.
    Always takes the largest removable bead, so this also exercises a
    different removal order from the abacus push.
    """
    beta = set(_beta_numbers(p.parts, len(p.parts)))
    while True:
        movable = [b for b in beta if b >= M and (b - M) not in beta]
        if not movable:
            return _from_beta(beta)
        b = max(movable)
        beta.remove(b)
        beta.add(b - M)


def is_core(p: Partition, M: int) -> bool:
    return all(h % M for h in hook_lengths(p))


def core_counting_series(M: int, order: int) -> MotivicSeries:
    """prod_{i>=1} (1 - T^{Mi})^M / (1 - T^i): counts M-cores by size."""
    if M < 1:
        raise ValueError("M must be positive")
    factors = [(i, 0, 1) for i in range(1, order + 1)]
    factors += [(M * i, 0, -M) for i in range(1, order // M + 1)]
    return product_of_factors(factors, order)
