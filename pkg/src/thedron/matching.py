"""Deterministic maximum bipartite matching and Hall-condition checks.

The left side is an ordered list of sets (a multiset is fine, repeated sets
are distinct left vertices); the right side is the union of their elements.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Sequence

__all__ = ["maximum_matching", "matching_size", "hall_condition_bruteforce"]


def maximum_matching(sets: Sequence[Iterable[Hashable]]) -> tuple[int, tuple]:
    """Maximum matching of ``sets`` to distinct representatives.

    Returns ``(size, witness)`` where ``witness[i]`` is the representative
    chosen for ``sets[i]`` or ``None``. Sets are processed in the given order
    and candidate representatives in ascending order, so the witness is
    reproducible.
    """
    adj = [sorted(s) for s in sets]
    owner: dict = {}

    def augment(i: int, seen: set) -> bool:
        for v in adj[i]:
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or augment(owner[v], seen):
                owner[v] = i
                return True
        return False

    size = 0
    for i in range(len(adj)):
        if augment(i, set()):
            size += 1
    witness: list = [None] * len(adj)
    for v, i in owner.items():
        witness[i] = v
    return size, tuple(witness)


def matching_size(sets: Sequence[Iterable[Hashable]]) -> int:
    return maximum_matching(sets)[0]


def hall_condition_bruteforce(sets: Sequence[Iterable[Hashable]]) -> bool:
    """Exhaustive Hall check: every ``t`` sets have a union of size ``>= t``.

    Exponential in ``len(sets)``; intended as a test oracle.
    """
    frozen = [frozenset(s) for s in sets]
    for t in range(1, len(frozen) + 1):
        for chosen in combinations(frozen, t):
            if len(frozenset().union(*chosen)) < t:
                return False
    return True
