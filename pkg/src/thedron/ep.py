"""EP-sets of maximal valid type sequences and the split of ``ep`` per basis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .matroid import (
    TypeTable,
    cm,
    is_base_sequence,
    is_maximal,
    is_valid,
    restrict,
    restrict_sequence,
    restricted_indices,
    trim,
    type_order_key,
    type_sequence,
)

__all__ = [
    "EpDecomposition",
    "CutDecomposition",
    "ep_set",
    "ep_decompose",
    "cut_decomposition",
    "max_class_ranks",
]


@dataclass(frozen=True)
class EpDecomposition:
    base_part: int
    relative_part: int
    ep_set: frozenset[int]

    @property
    def total(self) -> int:
        return self.base_part + self.relative_part


@dataclass(frozen=True)
class CutDecomposition:
    H: frozenset[int]
    q: int
    ep_set: frozenset[int]


def _require_maximal_valid(T: TypeTable, a: Sequence[int]) -> None:
    if not (is_maximal(T, a) and is_valid(T, a)):
        raise ValueError(f"{tuple(a)} is not a maximal valid type sequence")


def ep_set(T: TypeTable, a: Sequence[int]) -> frozenset[int]:
    """1-based indices ``k`` such that trading one copy of a larger type for
    ``I_k`` keeps the sequence valid."""
    _require_maximal_valid(T, a)
    keys = [type_order_key(I) for I in T.types]
    out = set()
    for k in range(T.m):
        for j in range(T.m):
            if a[j] < 1 or not keys[k] < keys[j]:
                continue
            b = list(a)
            b[j] -= 1
            b[k] += 1
            if is_valid(T, b):
                out.add(k + 1)
                break
    return frozenset(out)


def max_class_ranks(T: TypeTable, B: Iterable[int]) -> tuple[int, ...]:
    """Per type, the within-class rank of ``max(B & C_k)``; 0 if empty."""
    B = frozenset(B)
    ranks = []
    for k, cls in enumerate(T.classes):
        inside = [e for e in cls if e in B]
        ranks.append(T.class_rank(k, max(inside)) if inside else 0)
    return tuple(ranks)


def ep_decompose(T: TypeTable, B: Iterable[int]) -> EpDecomposition:
    B = frozenset(B)
    a = type_sequence(T, B)
    if sum(a) != len(B) or not is_base_sequence(T, a):
        raise ValueError(f"{sorted(B)} is not a basis")
    ep = ep_set(T, a)
    s = max_class_ranks(T, B)
    base_part = sum(l - x for k, (l, x) in enumerate(zip(T.multiplicities, a), 1) if k in ep)
    relative_part = sum(s[k - 1] - a[k - 1] for k in range(1, T.m + 1) if k not in ep and a[k - 1] > 0)
    return EpDecomposition(base_part, relative_part, ep)


def cut_decomposition(T: TypeTable, a: Sequence[int]) -> CutDecomposition:
    """Recursive EP-set through ``H = cm(trim(a))`` and restriction to ``H``.

    The part inside ``H`` is computed recursively on the restricted table;
    a type meeting the complement of ``H`` belongs to EP exactly when it
    precedes the last used type ``I_q``.
    """
    _require_maximal_valid(T, a)
    trimmed, q = trim(a)
    H = cm(T, trimmed)
    keep = restricted_indices(T, H)
    sub = restrict(T, H)
    a_sub = restrict_sequence(T, H, a)
    if not (is_maximal(sub, a_sub) and is_valid(sub, a_sub)):
        raise AssertionError(f"restriction of {tuple(a)} to {sorted(H)} is not maximal valid")
    inner: frozenset[int] = frozenset()
    if any(a_sub):
        inner = frozenset(keep[k - 1] + 1 for k in cut_decomposition(sub, a_sub).ep_set)
    q_key = type_order_key(T.types[q - 1])
    outer = frozenset(
        k + 1 for k, I in enumerate(T.types)
        if not I <= H and type_order_key(I) < q_key
    )
    return CutDecomposition(H, q, inner | outer)
