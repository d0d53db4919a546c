"""Presentations of transversal matroids, their bases, and type sequences.

Ground elements and members are 1-indexed. Type indices ``k`` (positions in
``TypeTable.types``) are also reported 1-indexed wherever a function returns
a set of them (``ep_set``, ``zero_pattern``, the index ``q`` of ``trim``);
type sequences themselves are plain tuples indexed from 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .matching import matching_size

__all__ = [
    "PresentationError",
    "Presentation",
    "TypeTable",
    "parse_presentation",
    "is_basis",
    "enumerate_bases",
    "type_order_key",
    "build_type_table",
    "relabel_presentation",
    "canonical_form",
    "type_sequence",
    "expand",
    "is_valid",
    "is_maximal",
    "is_base_sequence",
    "enumerate_maximal_valid",
    "restrict",
    "restricted_indices",
    "restrict_sequence",
    "trim",
    "cm",
]

Basis = tuple[int, ...]
TypeSequence = tuple[int, ...]


class PresentationError(ValueError):
    """Raised for malformed or invalid presentations."""


@dataclass(frozen=True)
class Presentation:
    """A family of ``r`` members, subsets of ``{1..n}``, with a transversal."""

    n: int
    r: int
    members: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise PresentationError(f"n and r must be positive, got n={self.n}, r={self.r}")
        if len(self.members) != self.r:
            raise PresentationError(f"expected {self.r} members, got {len(self.members)}")
        for j, member in enumerate(self.members, start=1):
            if not member:
                raise PresentationError(f"member {j} is empty")
            bad = sorted(e for e in member if not 1 <= e <= self.n)
            if bad:
                raise PresentationError(f"member {j} has elements outside 1..{self.n}: {bad}")
        if matching_size(self.members) < self.r:
            raise PresentationError(f"the members have no transversal of size {self.r}")
        covered = frozenset().union(*self.members)
        for e in range(1, self.n + 1):
            if e not in covered:
                raise PresentationError(f"element {e} is a loop (it belongs to no member)")

    @classmethod
    def from_lists(cls, n: int, members: Iterable[Iterable[int]]) -> "Presentation":
        members = tuple(frozenset(m) for m in members)
        return cls(n, len(members), members)

    @cached_property
    def element_types(self) -> dict[int, frozenset[int]]:
        """Map each ground element to the set of members containing it."""
        return {
            e: frozenset(j for j, member in enumerate(self.members, start=1) if e in member)
            for e in range(1, self.n + 1)
        }

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "members": [sorted(m) for m in self.members]}


def _parse_int(token, what: str) -> int:
    if isinstance(token, bool) or not isinstance(token, int):
        raise PresentationError(f"{what} must be an integer, got {token!r}")
    return token


def parse_presentation(text: str | bytes) -> Presentation:
    """Parse a presentation from JSON or the plain-text format.

    JSON: ``{"n": 9, "r": 2, "members": [[1, 2], [3, 4]]}``.
    Plain text: first line ``n r``, then one line of elements per member.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    stripped = text.strip()
    if not stripped:
        raise PresentationError("empty input")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PresentationError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict) or not {"n", "r", "members"} <= doc.keys():
            raise PresentationError('JSON must be an object with keys "n", "r", "members"')
        n = _parse_int(doc["n"], "n")
        r = _parse_int(doc["r"], "r")
        raw = doc["members"]
        if not isinstance(raw, list) or not all(isinstance(m, list) for m in raw):
            raise PresentationError('"members" must be a list of lists')
        members = [[_parse_int(e, "member element") for e in m] for m in raw]
    else:
        lines = [line for line in stripped.splitlines() if line.strip()]
        try:
            header = [int(t) for t in lines[0].split()]
            members = [[int(t) for t in line.split()] for line in lines[1:]]
        except ValueError as exc:
            raise PresentationError(f"invalid plain-text presentation: {exc}") from None
        if len(header) != 2:
            raise PresentationError("first line must be 'n r'")
        n, r = header
    return Presentation(n, r, tuple(frozenset(m) for m in members))


def is_basis(P: Presentation, S: Iterable[int]) -> bool:
    S = frozenset(S)
    if len(S) != P.r or not S <= P.element_types.keys():
        return False
    return matching_size([P.element_types[e] for e in sorted(S)]) == P.r


def enumerate_bases(P: Presentation) -> list[Basis]:
    """All bases, as sorted tuples, in lexicographic order."""
    return [B for B in combinations(range(1, P.n + 1), P.r) if is_basis(P, B)]


def type_order_key(I: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key for the type order: cardinality, then lexicographic."""
    s = tuple(sorted(I))
    return len(s), s


@dataclass(frozen=True)
class TypeTable:
    """Ordered catalogue of the non-empty types of a presentation.

    ``members`` is the set of right-side vertices (``{1..r}`` for a full
    table, ``H`` after restriction). ``classes[k]`` lists the relabeled
    elements of type ``types[k]`` in increasing order.
    """

    members: frozenset[int]
    types: tuple[frozenset[int], ...]
    classes: tuple[tuple[int, ...], ...]
    relabel: dict[int, int] = field(default_factory=dict, compare=False)

    @property
    def rank(self) -> int:
        return len(self.members)

    @property
    def m(self) -> int:
        return len(self.types)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def n(self) -> int:
        return sum(self.multiplicities)

    def class_rank(self, k: int, element: int) -> int:
        """1-based position of ``element`` inside ``classes[k]`` (0-based ``k``)."""
        return self.classes[k].index(element) + 1


def build_type_table(P: Presentation) -> TypeTable:
    """Sort the types and relabel ``[n]`` so that classes occupy increasing ranges.

    Inside each class the original relative order of elements is kept.
    """
    by_type: dict[frozenset[int], list[int]] = {}
    for e in range(1, P.n + 1):
        by_type.setdefault(P.element_types[e], []).append(e)
    types = sorted(by_type, key=type_order_key)
    relabel: dict[int, int] = {}
    classes = []
    label = 0
    for I in types:
        cls = []
        for e in by_type[I]:
            label += 1
            relabel[e] = label
            cls.append(label)
        classes.append(tuple(cls))
    return TypeTable(frozenset(range(1, P.r + 1)), tuple(types), tuple(classes), relabel)


def relabel_presentation(P: Presentation, T: TypeTable) -> Presentation:
    members = tuple(frozenset(T.relabel[e] for e in member) for member in P.members)
    return Presentation(P.n, P.r, members)


def canonical_form(P: Presentation) -> tuple[Presentation, TypeTable]:
    """Relabeled presentation together with its type table.

    The table of the relabeled presentation has the identity relabeling.
    """
    T = build_type_table(P)
    Q = relabel_presentation(P, T)
    return Q, build_type_table(Q)


def type_sequence(T: TypeTable, S: Iterable[int]) -> TypeSequence:
    S = frozenset(S)
    return tuple(len(S.intersection(c)) for c in T.classes)


def _check_length(T: TypeTable, a: Sequence[int]) -> None:
    if len(a) != T.m:
        raise ValueError(f"type sequence has length {len(a)}, table has {T.m} types")


def expand(T: TypeTable, a: Sequence[int]) -> list[frozenset[int]]:
    """The multiset of types encoded by ``a``, as a list with repetitions."""
    _check_length(T, a)
    out: list[frozenset[int]] = []
    for I, count in zip(T.types, a):
        out.extend([I] * count)
    return out


def is_valid(T: TypeTable, a: Sequence[int]) -> bool:
    """Hall's condition for the multiset of types encoded by ``a``."""
    if any(x < 0 for x in a):
        return False
    sets = expand(T, a)
    return matching_size(sets) == len(sets)


def is_maximal(T: TypeTable, a: Sequence[int]) -> bool:
    return sum(a) == T.rank


def is_base_sequence(T: TypeTable, a: Sequence[int]) -> bool:
    return (
        is_maximal(T, a)
        and is_valid(T, a)
        and all(x <= l for x, l in zip(a, T.multiplicities))
    )


def _compositions(total: int, parts: int) -> Iterator[TypeSequence]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_maximal_valid(T: TypeTable) -> list[TypeSequence]:
    """All maximal valid type sequences in ascending lexicographic order."""
    return [a for a in _compositions(T.rank, T.m) if is_valid(T, a)]


def restricted_indices(T: TypeTable, H: Iterable[int]) -> list[int]:
    """0-based positions of the types of ``T`` contained in ``H``."""
    H = frozenset(H)
    return [k for k, I in enumerate(T.types) if I <= H]


def restrict(T: TypeTable, H: Iterable[int]) -> TypeTable:
    """Keep only the types contained in ``H``; ``H`` becomes the member set."""
    H = frozenset(H)
    if not H <= T.members:
        raise ValueError(f"{sorted(H)} is not a subset of the members {sorted(T.members)}")
    keep = restricted_indices(T, H)
    kept = frozenset(e for k in keep for e in T.classes[k])
    return TypeTable(
        H,
        tuple(T.types[k] for k in keep),
        tuple(T.classes[k] for k in keep),
        {old: new for old, new in T.relabel.items() if new in kept},
    )


def restrict_sequence(T: TypeTable, H: Iterable[int], a: Sequence[int]) -> TypeSequence:
    _check_length(T, a)
    return tuple(a[k] for k in restricted_indices(T, H))


def trim(a: Sequence[int]) -> tuple[TypeSequence, int]:
    """Set the last nonzero entry to 0; also return its 1-based index."""
    for k in range(len(a) - 1, -1, -1):
        if a[k]:
            return tuple(a[:k]) + (0,) + tuple(a[k + 1:]), k + 1
    raise ValueError("cannot trim an all-zero sequence")


def cm(T: TypeTable, a: Sequence[int]) -> frozenset[int]:
    """Members covered by every full matching of the multiset encoded by ``a``."""
    sets = expand(T, a)
    if matching_size(sets) != len(sets):
        raise ValueError(f"type sequence {tuple(a)} is not valid")
    return frozenset(
        j for j in sorted(T.members)
        if matching_size([I - {j} for I in sets]) < len(sets)
    )
