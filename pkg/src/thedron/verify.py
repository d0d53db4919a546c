"""Seeded random instances and the invariant suites run by ``thedron verify``."""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Sequence

from .activity import (
    dual_h_oracle,
    dual_h_vector,
    f_vector,
    h_from_f,
    h_vector_via_activity,
)
from .ep import cut_decomposition, ep_decompose, ep_set
from .matroid import (
    Presentation,
    PresentationError,
    canonical_form,
    enumerate_bases,
    enumerate_maximal_valid,
)
from .polytope import Check, VerificationReport, ep_of_basis, verify_main_theorem
from .trees import (
    LD,
    augmented_graph,
    chi,
    chi_inverse,
    compatible,
    degree_vectors,
    infoconn_incompatible,
    random_bipartite_graph,
    random_spanning_tree,
)

__all__ = [
    "random_presentation",
    "random_presentations",
    "thread_count",
    "verify_instance",
    "verify_many",
    "lrtree_holds",
    "tree_lemma_suite",
]

MAX_ATTEMPTS = 10_000


def random_presentation(rng: random.Random, max_n: int = 10, max_r: int = 4) -> Presentation:
    """Each element joins each member with probability 1/2; invalid draws are resampled."""
    for _ in range(MAX_ATTEMPTS):
        r = rng.randint(1, max_r)
        n = rng.randint(r, max_n)
        members = [[e for e in range(1, n + 1) if rng.random() < 0.5] for _ in range(r)]
        try:
            return Presentation(n, r, tuple(frozenset(m) for m in members))
        except PresentationError:
            continue
    raise RuntimeError(f"no valid presentation after {MAX_ATTEMPTS} attempts")


def random_presentations(count: int, seed: int, max_n: int = 10, max_r: int = 4) -> list[Presentation]:
    rng = random.Random(seed)
    return [random_presentation(rng, max_n, max_r) for _ in range(count)]


def thread_count() -> int:
    cap = os.environ.get("THEDRON_THREADS")
    default = os.cpu_count() or 1
    if cap is None:
        return default
    try:
        return max(1, min(default, int(cap)))
    except ValueError:
        return default


def verify_instance(
    P: Presentation,
    ep_fn: Callable[[Presentation, Sequence[int]], int] = ep_of_basis,
) -> VerificationReport:
    """Every per-instance invariant: main theorem, oracles, EP recursion and split."""
    checks = list(verify_main_theorem(P, ep_fn).checks)
    Q, T = canonical_form(P)

    h, h_oracle = h_vector_via_activity(Q), h_from_f(f_vector(Q))
    checks.append(Check("h-vector: activity = f-vector transform", h == h_oracle,
                        None if h == h_oracle else f"{list(h)} vs {list(h_oracle)}"))
    dh, dh_oracle = dual_h_vector(Q), dual_h_oracle(Q)
    checks.append(Check("dual h-vector: ep count = dual f-vector transform", dh == dh_oracle,
                        None if dh == dh_oracle else f"{list(dh)} vs {list(dh_oracle)}"))

    bad = None
    for a in enumerate_maximal_valid(T):
        direct, recursive = ep_set(T, a), cut_decomposition(T, a).ep_set
        if direct != recursive:
            bad = f"a={list(a)}: ep_set {sorted(direct)} vs recursion {sorted(recursive)}"
            break
    checks.append(Check("EP recursion through cm(trim(a))", bad is None, bad))

    bad = None
    for B in enumerate_bases(Q):
        split, ep = ep_decompose(T, B).total, ep_fn(Q, B)
        if split != ep:
            bad = f"basis {list(B)}: decomposition {split}, ep {ep}"
            break
    checks.append(Check("ep decomposition equals activity count", bad is None, bad))

    G = augmented_graph(T)
    cells = set(enumerate_maximal_valid(T))
    rng = random.Random(repr(P.to_json()))
    bad = None
    for _ in range(20):
        tree = random_spanning_tree(G, rng)
        if not lrtree_holds(tree):
            bad = f"tree {tree.to_json()} violates the degree inequalities"
            break
        if degree_vectors(tree)[0] not in cells:
            bad = f"tree {tree.to_json()} has non-draconian left degrees"
            break
    checks.append(Check("spanning trees of the augmented graph", bad is None, bad))
    return VerificationReport(tuple(checks))


def verify_many(
    presentations: Sequence[Presentation],
    ep_fn: Callable[[Presentation, Sequence[int]], int] = ep_of_basis,
    threads: int | None = None,
) -> list[VerificationReport]:
    """Reports in input order; may fan out over ``threads`` workers."""
    threads = threads or thread_count()
    if threads == 1:
        return [verify_instance(P, ep_fn) for P in presentations]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda P: verify_instance(P, ep_fn), presentations))


def lrtree_holds(tree) -> bool:
    """Degree inequalities for every proper right subset and every
    non-empty proper left subset of a spanning tree."""
    right = range(tree.r + 1)
    for k in range(1, tree.r + 1):
        for Ip in combinations(right, k):
            if LD(tree, chi_inverse(tree, Ip)) < len(Ip):
                return False
    for k in range(1, tree.m):
        for I in combinations(range(1, tree.m + 1), k):
            if len(chi(tree, I)) < LD(tree, I) + 1:
                return False
    return True


def tree_lemma_suite(count: int, seed: int, max_m: int = 5, max_r: int = 5) -> tuple[Check, ...]:
    """Degree inequalities on ``count`` random trees, and the incompatibility
    criterion on ``count`` random pairs of trees of a shared graph."""
    rng = random.Random(seed)
    bad = None
    for _ in range(count):
        G = random_bipartite_graph(rng.randint(1, max_m), rng.randint(1, max_r), rng)
        tree = random_spanning_tree(G, rng)
        if not lrtree_holds(tree):
            bad = f"tree {tree.to_json()}"
            break
    lr = Check(f"degree inequalities on {count} random spanning trees", bad is None, bad)

    bad = None
    hits = 0
    for _ in range(count):
        G = random_bipartite_graph(rng.randint(2, max_m), rng.randint(1, max_r), rng)
        T1, T2 = random_spanning_tree(G, rng), random_spanning_tree(G, rng)
        if infoconn_incompatible(T1, T2):
            hits += 1
            if compatible(T1, T2):
                bad = f"trees {T1.to_json()} and {T2.to_json()}"
                break
    info = Check(
        f"incompatibility criterion on {count} random pairs ({hits} met the hypotheses)",
        bad is None,
        bad,
    )
    return lr, info
