"""Spanning trees of bipartite graphs ``G`` inside ``K_{m, r+1}``.

Left vertices are ``1..m``; right vertices are ``0..r`` with ``0`` the
augmented vertex. Edges are ``(left, right)`` pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .matroid import TypeTable

__all__ = [
    "BipartiteGraph",
    "SpanningTree",
    "augmented_graph",
    "tree_from_sets",
    "degree_vectors",
    "chi",
    "chi_inverse",
    "LD",
    "t_i0",
    "compatible",
    "infoconn_incompatible",
    "is_draconian",
    "spanning_trees",
    "random_bipartite_graph",
    "random_spanning_tree",
]

Edge = tuple[int, int]


def _connected(m: int, r: int, edges: Iterable[Edge]) -> bool:
    parent = {("L", i): ("L", i) for i in range(1, m + 1)}
    parent.update({("R", j): ("R", j) for j in range(r + 1)})

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = len(parent)
    for i, j in edges:
        a, b = find(("L", i)), find(("R", j))
        if a != b:
            parent[a] = b
            components -= 1
    return components == 1


@dataclass(frozen=True)
class BipartiteGraph:
    m: int
    r: int
    edges: frozenset[Edge]

    def __post_init__(self):
        for i, j in self.edges:
            if not (1 <= i <= self.m and 0 <= j <= self.r):
                raise ValueError(f"edge {(i, j)} out of range for m={self.m}, r={self.r}")
        left = {i for i, _ in self.edges}
        right = {j for _, j in self.edges}
        if len(left) != self.m or len(right) != self.r + 1:
            raise ValueError("graph has isolated vertices")

    def left_sets(self) -> tuple[frozenset[int], ...]:
        """The collection ``I_G``: right neighbours of each left vertex."""
        return tuple(
            frozenset(j for i, j in self.edges if i == k) for k in range(1, self.m + 1)
        )


@dataclass(frozen=True)
class SpanningTree:
    m: int
    r: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if len(self.edges) != self.m + self.r or not _connected(self.m, self.r, self.edges):
            raise ValueError("edges do not form a spanning tree")

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in sorted(self.edges)]

    @classmethod
    def from_json(cls, m: int, r: int, edges: Sequence[Sequence[int]]) -> "SpanningTree":
        return cls(m, r, frozenset((int(i), int(j)) for i, j in edges))


def augmented_graph(T: TypeTable) -> BipartiteGraph:
    """Left vertex ``k`` joined to ``0`` and to every member of ``I_k``."""
    edges = {(k, 0) for k in range(1, T.m + 1)}
    edges |= {(k, j) for k, I in enumerate(T.types, start=1) for j in I}
    return BipartiteGraph(T.m, T.rank, frozenset(edges))


def tree_from_sets(J: Sequence[Iterable[int]], r: int) -> SpanningTree:
    """The graph with edges ``(i, j)`` for ``j in J[i-1]``."""
    edges = frozenset((i, j) for i, Ji in enumerate(J, start=1) for j in Ji)
    return SpanningTree(len(J), r, edges)


def degree_vectors(T: SpanningTree) -> tuple[tuple[int, ...], tuple[int, ...]]:
    ld = [-1] * T.m
    rd = [-1] * (T.r + 1)
    for i, j in T.edges:
        ld[i - 1] += 1
        rd[j] += 1
    return tuple(ld), tuple(rd)


def chi(T: SpanningTree, I: Iterable[int]) -> frozenset[int]:
    I = frozenset(I)
    return frozenset(j for i, j in T.edges if i in I)


def chi_inverse(T: SpanningTree, Ip: Iterable[int]) -> frozenset[int]:
    Ip = frozenset(Ip)
    return frozenset(i for i, j in T.edges if j in Ip)


def LD(T: SpanningTree, I: Iterable[int]) -> int:
    ld, _ = degree_vectors(T)
    return sum(ld[i - 1] for i in frozenset(I))


def t_i0(T: SpanningTree, i: int) -> int:
    """Neighbour of left vertex ``i`` on the tree path from ``i`` to ``0'``."""
    if (i, 0) in T.edges:
        raise ValueError(f"left vertex {i} is adjacent to 0'")
    adj: dict = {}
    for a, b in T.edges:
        adj.setdefault(("L", a), []).append(("R", b))
        adj.setdefault(("R", b), []).append(("L", a))
    # BFS from 0' records each vertex's predecessor toward 0'
    toward = {("R", 0): None}
    frontier = [("R", 0)]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in toward:
                    toward[w] = v
                    nxt.append(w)
        frontier = nxt
    return toward[("L", i)][1]


def _has_long_cycle(succ: dict, min_length: int) -> bool:
    """Whether a digraph has a simple directed cycle with ``>= min_length`` edges."""
    order = {v: k for k, v in enumerate(sorted(succ))}
    for start in sorted(succ):
        s = order[start]
        path = [start]
        on_path = {start}
        stack = [iter(succ[start])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if w == start:
                if len(path) >= min_length:
                    return True
                continue
            if w in on_path or order[w] < s:
                continue
            path.append(w)
            on_path.add(w)
            stack.append(iter(succ.get(w, ())))
    return False


def compatible(T: SpanningTree, Tp: SpanningTree) -> bool:
    """No directed cycle of length ``>= 4`` in ``U(T, T')``.

    ``T`` edges point left to right, ``T'`` edges right to left.
    """
    succ: dict = {}
    for i, j in T.edges:
        succ.setdefault(("L", i), set()).add(("R", j))
    for i, j in Tp.edges:
        succ.setdefault(("R", j), set()).add(("L", i))
    for v in list(succ.values()):
        for w in v:
            succ.setdefault(w, set())
    succ = {v: sorted(ws) for v, ws in succ.items()}
    return not _has_long_cycle(succ, 4)


def infoconn_incompatible(T: SpanningTree, Tp: SpanningTree) -> bool:
    """Whether some choice of two left vertices ``(p, q)`` meets the
    degree/adjacency hypotheses that force ``T`` and ``T'`` to be incompatible.

    ``q`` must gain left degree from ``T`` to ``T'`` while ``p`` loses it,
    every other vertex must not gain, ``0'`` must touch ``p`` and ``q`` in
    ``T'`` and ``q`` in ``T``.
    """
    d, _ = degree_vectors(T)
    dp, _ = degree_vectors(Tp)
    for q in range(1, T.m + 1):
        if not (d[q - 1] < dp[q - 1] and (q, 0) in Tp.edges and (q, 0) in T.edges):
            continue
        if any(d[i - 1] < dp[i - 1] for i in range(1, T.m + 1) if i != q):
            continue
        for p in range(1, T.m + 1):
            if p != q and d[p - 1] > dp[p - 1] and (p, 0) in Tp.edges:
                return True
    return False


def is_draconian(G: BipartiteGraph, a: Sequence[int]) -> bool:
    """``sum(a) = r`` and every union of left neighbourhoods beats its degree sum by one."""
    if len(a) != G.m or any(x < 0 for x in a) or sum(a) != G.r:
        return False
    sets = G.left_sets()
    for k in range(1, G.m + 1):
        for idx in combinations(range(G.m), k):
            if len(frozenset().union(*(sets[i] for i in idx))) < sum(a[i] for i in idx) + 1:
                return False
    return True


def spanning_trees(G: BipartiteGraph) -> Iterator[SpanningTree]:
    """Every spanning tree of ``G``, by exhaustive edge-subset search."""
    for edges in combinations(sorted(G.edges), G.m + G.r):
        if _connected(G.m, G.r, edges):
            yield SpanningTree(G.m, G.r, frozenset(edges))


def random_bipartite_graph(m: int, r: int, rng: random.Random, p: float = 0.5) -> BipartiteGraph:
    """Connected random subgraph of ``K_{m, r+1}`` (rejection sampling)."""
    while True:
        edges = frozenset(
            (i, j) for i in range(1, m + 1) for j in range(r + 1) if rng.random() < p
        )
        if _connected(m, r, edges):
            return BipartiteGraph(m, r, edges)


def random_spanning_tree(G: BipartiteGraph, rng: random.Random) -> SpanningTree:
    """Uniform spanning tree by the Aldous-Broder random walk."""
    adj: dict = {}
    for i, j in sorted(G.edges):
        adj.setdefault(("L", i), []).append(("R", j))
        adj.setdefault(("R", j), []).append(("L", i))
    v = ("R", 0)
    seen = {v}
    edges = set()
    total = G.m + G.r + 1
    while len(seen) < total:
        w = rng.choice(adj[v])
        if w not in seen:
            seen.add(w)
            edges.add((v[1], w[1]) if v[0] == "L" else (w[1], v[1]))
        v = w
    return SpanningTree(G.m, G.r, frozenset(edges))
