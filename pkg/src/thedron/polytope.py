"""The transversalhedron of a type table, its good lattice points and cells.

Cells of the canonical subdivision are described combinatorially: a cell is
a maximal valid type sequence ``a`` together with its zero pattern, the
types whose simplex summand contains the origin (the complement of the
EP-set). Degrees and good-point counts follow from ``(a, zero_pattern)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .activity import dual_h_vector, externally_passive_count
from .ep import ep_set, max_class_ranks
from .matroid import (
    Presentation,
    TypeTable,
    canonical_form,
    enumerate_bases,
    enumerate_maximal_valid,
    is_base_sequence,
    type_sequence,
)

__all__ = [
    "HDescription",
    "CellDescriptor",
    "OrderIdeal",
    "DegreeSplit",
    "Check",
    "VerificationReport",
    "h_description",
    "good_lattice_points",
    "degree_gf",
    "order_ideal",
    "zero_pattern",
    "cell_degree_gf",
    "cells",
    "basis_degree",
    "ep_of_basis",
    "verify_main_theorem",
    "polygon_vertices",
    "render_rank2_svg",
]


@dataclass(frozen=True)
class HDescription:
    """``x >= 0`` and ``sum(x_i for i in I) <= bounds[I]`` for non-empty ``I``."""

    coordinates: tuple[int, ...]
    bounds: dict[frozenset[int], int]
    n: int

    @property
    def r(self) -> int:
        return len(self.coordinates)


def h_description(T: TypeTable) -> HDescription:
    coords = tuple(sorted(T.members))
    bounds = {}
    for k in range(1, len(coords) + 1):
        for I in combinations(coords, k):
            I = frozenset(I)
            bounds[I] = sum(l for H, l in zip(T.types, T.multiplicities) if H & I)
    return HDescription(coords, bounds, T.n)


def good_lattice_points(H: HDescription) -> list[tuple[int, ...]]:
    """Lattice points with every coordinate ``>= 1``, in lexicographic order."""
    if H.r == 0:
        return [()]
    box = [range(1, H.bounds[frozenset([i])] + 1) for i in H.coordinates]
    pts = np.array(list(product(*box)), dtype=np.int64).reshape(-1, H.r)
    subsets = list(H.bounds)
    A = np.array([[i in I for i in H.coordinates] for I in subsets], dtype=np.int64)
    u = np.array([H.bounds[I] for I in subsets], dtype=np.int64)
    keep = np.all(pts @ A.T <= u, axis=1)
    return [tuple(int(x) for x in p) for p in pts[keep]]


def degree_gf(points: Iterable[Sequence[int]], n: int) -> tuple[int, ...]:
    """Coefficients, indexed by degree ``0..n``, of ``sum q^(sum of coordinates)``."""
    gf = [0] * (n + 1)
    for p in points:
        gf[sum(p)] += 1
    return tuple(gf)


@dataclass(frozen=True)
class OrderIdeal:
    monomials: frozenset[tuple[int, ...]]
    degree_sequence: tuple[int, ...]
    pure: bool
    top_degree: int

    def maximal_monomials(self) -> list[tuple[int, ...]]:
        def up(x, i):
            return x[:i] + (x[i] + 1,) + x[i + 1:]

        return sorted(
            x for x in self.monomials
            if not any(up(x, i) in self.monomials for i in range(len(x)))
        )

    def is_downward_closed(self) -> bool:
        for x in self.monomials:
            for i, e in enumerate(x):
                if e > 0 and x[:i] + (e - 1,) + x[i + 1:] not in self.monomials:
                    return False
        return True


def order_ideal(T: TypeTable) -> OrderIdeal:
    """Exponent vectors ``c - 1`` over the good lattice points ``c``."""
    monomials = frozenset(
        tuple(x - 1 for x in c) for c in good_lattice_points(h_description(T))
    )
    top = max(sum(x) for x in monomials)
    seq = [0] * (top + 1)
    for x in monomials:
        seq[sum(x)] += 1
    ideal = OrderIdeal(monomials, tuple(seq), False, top)
    pure = all(sum(x) == top for x in ideal.maximal_monomials())
    return OrderIdeal(monomials, tuple(seq), pure, top)


@dataclass(frozen=True)
class CellDescriptor:
    a: tuple[int, ...]
    ep_set: frozenset[int]
    zero_pattern: frozenset[int]
    gf: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "ep_set": sorted(self.ep_set),
            "zero_pattern": sorted(self.zero_pattern),
            "gf": None if self.gf is None else list(self.gf),
        }


def zero_pattern(T: TypeTable, a: Sequence[int]) -> CellDescriptor:
    """Cell descriptor of ``a``: types outside the EP-set keep the origin."""
    ep = ep_set(T, a)
    return CellDescriptor(tuple(a), ep, frozenset(range(1, T.m + 1)) - ep)


def cell_degree_gf(T: TypeTable, cell: CellDescriptor) -> tuple[int, ...]:
    """Degree generating function of the good lattice points of a cell.

    A type in the EP-set contributes ``C(l, a) q^l``; a type keeping the
    origin contributes ``sum_{s=a..l} C(s-1, a-1) q^s`` (or 1 when ``a = 0``).
    """
    gf = np.array([1], dtype=np.int64)
    for k, (l, x) in enumerate(zip(T.multiplicities, cell.a), start=1):
        factor = np.zeros(l + 1, dtype=np.int64)
        if k in cell.ep_set:
            factor[l] = comb(l, x)
        elif x == 0:
            factor[0] = 1
        else:
            for s in range(x, l + 1):
                factor[s] = comb(s - 1, x - 1)
        gf = np.convolve(gf, factor)
    out = [0] * (T.n + 1)
    for d, c in enumerate(gf):
        if c:
            out[d] = int(c)
    return tuple(out)


def cells(T: TypeTable) -> list[CellDescriptor]:
    """One descriptor per maximal valid type sequence, with its generating function."""
    out = []
    for a in enumerate_maximal_valid(T):
        cell = zero_pattern(T, a)
        out.append(CellDescriptor(cell.a, cell.ep_set, cell.zero_pattern, cell_degree_gf(T, cell)))
    return out


@dataclass(frozen=True)
class DegreeSplit:
    total: int
    base_part: int
    relative_part: int


def basis_degree(T: TypeTable, B: Iterable[int]) -> DegreeSplit:
    """Degree of the good lattice point matched with ``B``.

    EP types add ``l_k``; other used types add ``a_k`` to the base part and
    ``s_k - a_k`` to the relative part, ``s_k`` being the within-class rank of
    the largest element of ``B`` of that type.
    """
    B = frozenset(B)
    a = type_sequence(T, B)
    if sum(a) != len(B) or not is_base_sequence(T, a):
        raise ValueError(f"{sorted(B)} is not a basis")
    ep = ep_set(T, a)
    s = max_class_ranks(T, B)
    base = relative = 0
    for k, (l, x) in enumerate(zip(T.multiplicities, a), start=1):
        if k in ep:
            base += l
        elif x > 0:
            base += x
            relative += s[k - 1] - x
    return DegreeSplit(base + relative, base, relative)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)


def ep_of_basis(P: Presentation, B: Sequence[int]) -> int:
    return externally_passive_count(P, B).ep


def verify_main_theorem(
    P: Presentation,
    ep_fn: Callable[[Presentation, Sequence[int]], int] = ep_of_basis,
) -> VerificationReport:
    """Check ``d(B) - r = ep(B)``, the cell/lattice-point partition and the order ideal.

    ``ep_fn`` computes ``ep`` of a basis of the relabeled presentation; it is
    replaceable so that negative controls can feed corrupted values.
    """
    Q, T = canonical_form(P)
    checks = []

    bad = None
    for B in enumerate_bases(Q):
        d = basis_degree(T, B).total
        ep = ep_fn(Q, B)
        if d - Q.r != ep:
            bad = f"basis {list(B)}: d - r = {d - Q.r}, ep = {ep}"
            break
    checks.append(Check("main identity d(B) - r = ep(B)", bad is None, bad))

    total = np.zeros(T.n + 1, dtype=np.int64)
    for cell in cells(T):
        total += np.array(cell.gf, dtype=np.int64)
    points = degree_gf(good_lattice_points(h_description(T)), T.n)
    same = tuple(int(x) for x in total) == points
    checks.append(Check(
        "cells partition the good lattice points by degree",
        same,
        None if same else f"cells {list(map(int, total))} vs points {list(points)}",
    ))

    X = order_ideal(T)
    dual_h = dual_h_vector(Q)
    ok = X.degree_sequence == dual_h and X.pure and X.is_downward_closed()
    checks.append(Check(
        "order ideal is pure with degree sequence equal to the dual h-vector",
        ok,
        None if ok else f"degree sequence {list(X.degree_sequence)}, pure={X.pure}, dual h {list(dual_h)}",
    ))
    return VerificationReport(tuple(checks))


def polygon_vertices(H: HDescription) -> list[tuple[int, int]]:
    """Vertices of a rank-2 transversalhedron, counterclockwise from the origin."""
    if H.r != 2:
        raise ValueError(f"polygon_vertices needs rank 2, got {H.r}")
    i, j = H.coordinates
    u1, u2 = H.bounds[frozenset([i])], H.bounds[frozenset([j])]
    u12 = H.bounds[frozenset([i, j])]
    raw = [(0, 0), (u1, 0), (u1, u12 - u1), (u12 - u2, u2), (0, u2)]
    out: list[tuple[int, int]] = []
    for v in raw:
        if not out or out[-1] != v:
            out.append(v)
    if len(out) > 1 and out[-1] == out[0]:
        out.pop()
    return out


def render_rank2_svg(T: TypeTable, path: str | Path | None = None, scale: int = 40) -> str:
    """SVG 1.1 drawing of the polygon, its lattice points and the good points with degrees."""
    H = h_description(T)
    if H.r != 2:
        raise ValueError(f"plots need rank 2, got rank {H.r}")
    verts = polygon_vertices(H)
    good = set(good_lattice_points(H))
    xmax = max(x for x, _ in verts)
    ymax = max(y for _, y in verts)
    pad = scale
    width, height = xmax * scale + 2 * pad, ymax * scale + 2 * pad

    def X(x):
        return pad + x * scale

    def Y(y):
        return height - pad - y * scale

    u12 = H.bounds[frozenset(H.coordinates)]
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<polygon points="' + " ".join(f"{X(x)},{Y(y)}" for x, y in verts)
        + '" fill="#eef3fb" stroke="#1f3b73" stroke-width="2"/>',
    ]
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            inside = (
                x <= H.bounds[frozenset([H.coordinates[0]])]
                and y <= H.bounds[frozenset([H.coordinates[1]])]
                and x + y <= u12
            )
            if not inside:
                continue
            if (x, y) in good:
                lines.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="5" fill="#c0392b" class="good"/>')
                lines.append(
                    f'<text x="{X(x) + 6}" y="{Y(y) - 6}" font-size="11" '
                    f'font-family="sans-serif">{x + y}</text>'
                )
            else:
                lines.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="3" fill="#7f8c8d" class="lattice"/>')
    lines.append("</svg>")
    svg = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(svg)
    return svg
