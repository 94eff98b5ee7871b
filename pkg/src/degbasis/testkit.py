"""Exhaustive small-case oracles, deliberately independent of the fast paths.

Everything here enumerates labeled graphs as raw edge subsets, with no
isomorphism reduction and no arithmetic shortcuts, so it can serve as ground
truth for the analytic membership tests and the realization algorithms.
Caps are hard: past them the helpers raise CapExceeded instead of sampling.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .errors import CapExceeded
from .graphs import Embedding, Graph
from .sequences import DegreeSequence, RegularitySequence, degree_to_regularity

__all__ = [
    "GRAPH_ENUM_CAP",
    "BIPARTITE_ENUM_CAP",
    "enumerate_labeled_graphs",
    "bruteforce_is_graphic",
    "bruteforce_is_bipartite_graphic",
    "enumerate_graphic_regularity_sequences",
    "bruteforce_induced_embeddings",
    "two_colorable",
]

GRAPH_ENUM_CAP = 7
BIPARTITE_ENUM_CAP = 6


def enumerate_labeled_graphs(n: int, cap: int = GRAPH_ENUM_CAP) -> Iterator[Graph]:
    """Yield all 2^(n(n-1)/2) labeled graphs on n vertices.

    Edge subsets are visited in increasing bitmask order, so the iteration
    order is deterministic. Raises CapExceeded when n > cap.
    """
    if n > cap:
        raise CapExceeded(f"labeled-graph enumeration capped at n={cap}, got {n}")
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    for mask in range(1 << m):
        edges = frozenset(pairs[i] for i in range(m) if mask >> i & 1)
        yield Graph(n, edges)


@lru_cache(maxsize=None)
def _graphic_degree_tuples(n: int) -> frozenset[tuple[int, ...]]:
    """Non-increasing degree sequences over all labeled graphs on n vertices.

    Vectorized edge-subset sweep: for every subset bitmask, the degree of a
    vertex is the popcount of the mask restricted to its incident edge bits.
    Same enumeration as enumerate_labeled_graphs, just batched.
    """
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    masks = np.arange(1 << m, dtype=np.uint32)
    cols = []
    for v in range(n):
        incident = 0
        for i, (a, b) in enumerate(pairs):
            if v in (a, b):
                incident |= 1 << i
        cols.append(np.bitwise_count(masks & np.uint32(incident)).astype(np.uint8))
    if n == 0:
        return frozenset({()})
    degs = np.stack(cols, axis=1)
    degs.sort(axis=1)
    unique = np.unique(degs, axis=0)
    return frozenset(tuple(int(x) for x in row[::-1]) for row in unique)


def bruteforce_is_graphic(D: DegreeSequence, cap: int = GRAPH_ENUM_CAP) -> bool:
    """True iff some labeled graph on len(D) vertices has degree sequence D."""
    n = len(D)
    if n > cap:
        raise CapExceeded(f"brute-force graphicality capped at n={cap}, got {n}")
    return D.degrees in _graphic_degree_tuples(n)


def two_colorable(G: Graph) -> bool:
    """BFS two-coloring test."""
    color = [-1] * G.n
    adj = G.adjacency()
    for start in range(G.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


@lru_cache(maxsize=None)
def _bipartite_degree_tuples(n: int) -> frozenset[tuple[int, ...]]:
    out = set()
    for g in enumerate_labeled_graphs(n, cap=n):
        if two_colorable(g):
            out.add(tuple(sorted(g.degrees(), reverse=True)))
    return frozenset(out)


def bruteforce_is_bipartite_graphic(
    D: DegreeSequence, cap: int = BIPARTITE_ENUM_CAP
) -> bool:
    """True iff some two-colorable labeled graph realizes D."""
    n = len(D)
    if n > cap:
        raise CapExceeded(
            f"brute-force bipartite graphicality capped at n={cap}, got {n}"
        )
    return D.degrees in _bipartite_degree_tuples(n)


def enumerate_graphic_regularity_sequences(
    n: int, k: int, cap: int = GRAPH_ENUM_CAP
) -> frozenset[RegularitySequence]:
    """All regularity sequences of graphs on exactly n vertices with max degree <= k."""
    if n > cap:
        raise CapExceeded(f"enumeration capped at n={cap}, got {n}")
    out = set()
    for degs in _graphic_degree_tuples(n):
        if all(d <= k for d in degs):
            out.add(degree_to_regularity(DegreeSequence(degs), k))
    return frozenset(out)


def bruteforce_induced_embeddings(
    pattern: Graph, host: Graph, cap: int = GRAPH_ENUM_CAP
) -> Iterator[Embedding]:
    """All induced embeddings, by brute force over injections.

    Independent cross-check for the backtracking search: tries every
    injective map in permutation order and filters by the exact induced
    condition.
    """
    if pattern.n > cap or host.n > cap:
        raise CapExceeded(f"embedding enumeration capped at n={cap}")
    for image in permutations(range(host.n), pattern.n):
        emb = Embedding(image)
        if emb.validate(pattern, host):
            yield emb
