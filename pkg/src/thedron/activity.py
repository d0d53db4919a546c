"""Internal/external activity and h-vectors of transversal matroids.

External activity follows the largest-element convention: ``e`` outside a
basis ``B`` is externally active when no ``j > e`` makes ``(B + e) - j`` a
basis. The aggregate counts agree with the classical convention; the
per-basis values are what the degree correspondence in
:mod:`thedron.polytope` reproduces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .matching import matching_size
from .matroid import Presentation, enumerate_bases, is_basis

__all__ = [
    "ActivityReport",
    "internally_active_set",
    "externally_passive_count",
    "h_vector_via_activity",
    "f_vector",
    "h_from_f",
    "dual_h_vector",
    "dual_h_oracle",
]


@dataclass(frozen=True)
class ActivityReport:
    basis: tuple[int, ...]
    internally_active: frozenset[int]
    externally_active: frozenset[int]
    externally_passive: frozenset[int]

    @property
    def ep(self) -> int:
        return len(self.externally_passive)


def _require_basis(P: Presentation, B: Iterable[int]) -> frozenset[int]:
    B = frozenset(B)
    if not is_basis(P, B):
        raise ValueError(f"{sorted(B)} is not a basis")
    return B


def internally_active_set(P: Presentation, B: Iterable[int]) -> frozenset[int]:
    """Elements ``i`` of ``B`` such that no ``j < i`` makes ``(B - i) + j`` a basis."""
    B = _require_basis(P, B)
    return frozenset(
        i for i in B
        if not any(is_basis(P, (B - {i}) | {j}) for j in range(1, i) if j not in B)
    )


def _externally_passive(P: Presentation, B: frozenset[int]) -> frozenset[int]:
    passive = set()
    for e in range(1, P.n + 1):
        if e in B:
            continue
        Be = B | {e}
        if any(is_basis(P, Be - {j}) for j in B if j > e):
            passive.add(e)
    return frozenset(passive)


def externally_passive_count(P: Presentation, B: Iterable[int]) -> ActivityReport:
    B = _require_basis(P, B)
    passive = _externally_passive(P, B)
    outside = frozenset(range(1, P.n + 1)) - B
    return ActivityReport(
        tuple(sorted(B)),
        internally_active_set(P, B),
        outside - passive,
        passive,
    )


def h_vector_via_activity(P: Presentation) -> tuple[int, ...]:
    """``h_i`` counts bases with ``r - i`` internally active elements."""
    h = [0] * (P.r + 1)
    for B in enumerate_bases(P):
        h[P.r - len(internally_active_set(P, B))] += 1
    return tuple(h)


def f_vector(P: Presentation) -> tuple[int, ...]:
    """``f[k]`` is the number of independent sets of size ``k``, ``k = 0..r``."""
    f = [1] + [0] * P.r
    types = P.element_types
    for k in range(1, P.r + 1):
        f[k] = sum(
            1 for S in combinations(range(1, P.n + 1), k)
            if matching_size([types[e] for e in S]) == k
        )
    return tuple(f)


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    """Binomial transform ``h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_i`` with ``d = len(f) - 1``."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def dual_h_vector(P: Presentation) -> tuple[int, ...]:
    """h-vector of the dual matroid: ``h_i`` counts bases with ``ep = i``."""
    h = [0] * (P.n - P.r + 1)
    for B in enumerate_bases(P):
        h[len(_externally_passive(P, frozenset(B)))] += 1
    return tuple(h)


def dual_h_oracle(P: Presentation) -> tuple[int, ...]:
    """Dual h-vector from the f-vector of the dual independence complex.

    Bases of the dual are complements of bases; independent sets of the dual
    are their subsets, collected by a downward closure over bitmasks.
    """
    full = (1 << P.n) - 1
    independent = bytearray(1 << P.n)
    for B in enumerate_bases(P):
        mask = full
        for e in B:
            mask &= ~(1 << (e - 1))
        independent[mask] = 1
    for mask in range(full, -1, -1):
        if independent[mask]:
            bits = mask
            while bits:
                low = bits & -bits
                independent[mask ^ low] = 1
                bits ^= low
    f = [0] * (P.n - P.r + 1)
    for mask in range(full + 1):
        if independent[mask]:
            f[bin(mask).count("1")] += 1
    return h_from_f(f)
