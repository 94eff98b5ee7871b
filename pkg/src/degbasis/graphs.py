"""Finite simple graphs, realization algorithms, and induced embeddings.

Vertices are 0..n-1. Edges are unordered pairs stored with the smaller
endpoint first. Realization is deterministic: Havel-Hakimi for graphs and
a Gale-Ryser greedy for bipartite side lists, with ties broken by lowest
vertex index, so identical inputs always produce identical graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .errors import NotBigraphic, NotGraphic, SearchLimitExceeded
from .sequences import DegreeSequence

__all__ = [
    "Graph",
    "BipartiteGraph",
    "Embedding",
    "disjoint_union",
    "disjoint_union_all",
    "degree_sequence",
    "havel_hakimi_realize",
    "bipartite_realize",
    "gale_ryser_violation",
    "induced_embedding",
    "induced_embedding_with_cost",
    "DEFAULT_SEARCH_BUDGET",
]

DEFAULT_SEARCH_BUDGET = 10_000_000


def _normalize_edges(n: int, edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    out = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex, indexed by vertex."""
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets indexed by vertex."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    def edge_list(self) -> list[list[int]]:
        """Edges as sorted [u, v] pairs, smaller index first."""
        return [[u, v] for u, v in sorted(self.edges)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": self.edge_list()}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Graph":
        if "sides" in obj:
            return BipartiteGraph(
                int(obj["n"]),
                frozenset(tuple(e) for e in obj["edges"]),
                tuple(obj["sides"]),
            )
        return cls(int(obj["n"]), frozenset(tuple(e) for e in obj["edges"]))


@dataclass(frozen=True)
class BipartiteGraph(Graph):
    """A simple graph with a recorded two-sided coloring.

    ``sides[v]`` is 0 or 1; every edge must cross sides. A side may be
    empty, so a single vertex is a legal bipartite graph.
    """

    sides: tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        sides = tuple(int(s) for s in self.sides)
        if len(sides) != self.n:
            raise ValueError(f"sides must have length n={self.n}, got {len(sides)}")
        if any(s not in (0, 1) for s in sides):
            raise ValueError("sides entries must be 0 or 1")
        for u, v in self.edges:
            if sides[u] == sides[v]:
                raise ValueError(f"edge ({u},{v}) does not cross sides")
        object.__setattr__(self, "sides", sides)

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "BipartiteGraph":
        edges = frozenset((u, a + v) for u in range(a) for v in range(b))
        return cls(a + b, edges, (0,) * a + (1,) * b)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": self.edge_list(), "sides": list(self.sides)}


@dataclass(frozen=True)
class Embedding:
    """An injective vertex map from a pattern graph into a host graph.

    ``mapping[p]`` is the host vertex assigned to pattern vertex p. The map
    witnesses an induced-subgraph relation when adjacency is preserved in
    both directions.
    """

    mapping: tuple[int, ...]

    def validate(self, pattern: Graph, host: Graph) -> bool:
        """Check injectivity and the induced condition exactly."""
        m = self.mapping
        if len(m) != pattern.n:
            return False
        if len(set(m)) != len(m):
            return False
        if any(not (0 <= h < host.n) for h in m):
            return False
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                if pattern.has_edge(u, v) != host.has_edge(m[u], m[v]):
                    return False
        return True

    def to_json(self) -> dict:
        return {"mapping": list(self.mapping)}


def degree_sequence(G: Graph) -> DegreeSequence:
    """The non-increasing degree sequence of G."""
    return DegreeSequence(G.degrees())


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union with G2's vertices shifted above G1's.

    Preserves the bipartite coloring when both inputs carry one. Degree
    sequences add: the regularity sequence of the union is the coordinatewise
    sum of the parts' regularity sequences.
    """
    n = G1.n + G2.n
    edges = set(G1.edges)
    edges.update((u + G1.n, v + G1.n) for u, v in G2.edges)
    if isinstance(G1, BipartiteGraph) and isinstance(G2, BipartiteGraph):
        return BipartiteGraph(n, frozenset(edges), G1.sides + G2.sides)
    return Graph(n, frozenset(edges))


def disjoint_union_all(graphs: Iterable[Graph]) -> Graph:
    """Iterated disjoint union, empty input giving the empty graph."""
    graphs = list(graphs)
    all_bipartite = bool(graphs) and all(isinstance(g, BipartiteGraph) for g in graphs)
    n = 0
    edges: set[tuple[int, int]] = set()
    sides: list[int] = []
    for g in graphs:
        edges.update((u + n, v + n) for u, v in g.edges)
        if all_bipartite:
            sides.extend(g.sides)
        n += g.n
    if all_bipartite:
        return BipartiteGraph(n, frozenset(edges), tuple(sides))
    return Graph(n, frozenset(edges))


def havel_hakimi_realize(D: DegreeSequence) -> Graph:
    """Build a graph realizing D by the Havel-Hakimi reduction.

    At each step the vertex with the largest remaining degree (ties broken
    by lowest index) is connected to the next-highest remaining degrees.
    Deterministic: equal inputs give identical edge sets.

    Raises:
        NotGraphic: if the reduction produces a negative entry or the degree
            total is odd, i.e. the sequence has no realization.
    """
    if D.degree_sum % 2 != 0:
        raise NotGraphic(f"odd degree total {D.degree_sum}")
    n = len(D)
    remaining = list(D.degrees)
    active = [v for v in range(n) if remaining[v] > 0]
    edges: set[tuple[int, int]] = set()
    while active:
        # pivot: largest remaining degree, lowest index on ties
        pivot = max(active, key=lambda v: (remaining[v], -v))
        need = remaining[pivot]
        targets = sorted(
            (v for v in active if v != pivot),
            key=lambda v: (-remaining[v], v),
        )[:need]
        if len(targets) < need:
            raise NotGraphic(
                f"vertex of degree {need} has only {len(targets)} available partners"
            )
        for t in targets:
            edges.add((pivot, t) if pivot < t else (t, pivot))
            remaining[t] -= 1
        remaining[pivot] = 0
        active = [v for v in active if remaining[v] > 0]
    return Graph(n, frozenset(edges))


def gale_ryser_violation(a: Iterable[int], b: Iterable[int]) -> Optional[int]:
    """Locate the first Gale-Ryser failure for side degree lists a and b.

    Returns None when (a, b) is bigraphic, 0 when the side sums differ, and
    otherwise the 1-based index t of the first violated inequality
    sum(a[:t]) <= sum(min(b_j, t)).
    """
    a = sorted((int(x) for x in a), reverse=True)
    b = sorted((int(x) for x in b), reverse=True)
    if sum(a) != sum(b):
        return 0
    prefix = 0
    for t in range(1, len(a) + 1):
        prefix += a[t - 1]
        if prefix > sum(min(x, t) for x in b):
            return t
    return None


def bipartite_realize(a: DegreeSequence, b: DegreeSequence) -> BipartiteGraph:
    """Build a bipartite graph with side-A degrees a and side-B degrees b.

    Greedy Gale-Ryser construction: the side-A vertex with the largest
    remaining degree connects to the currently largest remaining side-B
    degrees, ties broken by lowest index. Side A occupies vertices
    0..len(a)-1 and side B the rest.

    Raises:
        NotBigraphic: carrying the index of the first violated inequality
            (0 for a side-sum mismatch).
    """
    violation = gale_ryser_violation(a.degrees, b.degrees)
    if violation is not None:
        raise NotBigraphic(violation)
    la, lb = len(a), len(b)
    rem_a = list(a.degrees)
    rem_b = list(b.degrees)
    edges: set[tuple[int, int]] = set()
    order = sorted(range(la), key=lambda i: (-rem_a[i], i))
    for i in order:
        need = rem_a[i]
        if need == 0:
            continue
        targets = sorted(
            (j for j in range(lb) if rem_b[j] > 0),
            key=lambda j: (-rem_b[j], j),
        )[:need]
        # Gale-Ryser already certified feasibility; the greedy cannot strand.
        assert len(targets) == need
        for j in targets:
            edges.add((i, la + j))
            rem_b[j] -= 1
        rem_a[i] = 0
    return BipartiteGraph(la + lb, frozenset(edges), (0,) * la + (1,) * lb)


def _induced_search(
    pattern: Graph, host: Graph, budget: int
) -> tuple[Optional[Embedding], int]:
    """Backtracking induced-subgraph search; returns (embedding, nodes used)."""
    np_, nh = pattern.n, host.n
    if np_ == 0:
        return Embedding(()), 0
    if np_ > nh:
        return None, 0
    padj = pattern.adjacency()
    hadj = host.adjacency()
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    # assign high-degree pattern vertices first; deterministic static order
    order = sorted(range(np_), key=lambda v: (-pdeg[v], v))
    pos_of = {v: i for i, v in enumerate(order)}
    # pattern neighbors already placed, per search depth
    earlier: list[list[tuple[int, bool]]] = []
    for depth, v in enumerate(order):
        info = []
        for u in range(np_):
            if pos_of[u] < depth:
                info.append((pos_of[u], u in padj[v]))
        earlier.append(info)

    assigned = [-1] * np_  # by depth
    used = [False] * nh
    nodes = 0

    def extend(depth: int) -> Optional[list[int]]:
        nonlocal nodes
        if depth == np_:
            return list(assigned)
        v = order[depth]
        for h in range(nh):
            if used[h] or hdeg[h] < pdeg[v]:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchLimitExceeded(
                    f"induced embedding search exceeded {budget} node expansions"
                )
            ok = True
            for (d, adj) in earlier[depth]:
                if (assigned[d] in hadj[h]) != adj:
                    ok = False
                    break
            if ok:
                assigned[depth] = h
                used[h] = True
                result = extend(depth + 1)
                if result is not None:
                    return result
                used[h] = False
                assigned[depth] = -1
        return None

    found = extend(0)
    if found is None:
        return None, nodes
    mapping = [0] * np_
    for depth, v in enumerate(order):
        mapping[v] = found[depth]
    return Embedding(tuple(mapping)), nodes


def induced_embedding(
    pattern: Graph, host: Graph, budget: int = DEFAULT_SEARCH_BUDGET
) -> Optional[Embedding]:
    """Search for an induced embedding of pattern into host.

    Backtracking over injective maps with degree-based pruning: a pattern
    vertex may only land on a host vertex of at least its degree, and mapped
    pairs must agree on adjacency exactly (induced, not just subgraph).

    Args:
        pattern: graph to embed.
        host: graph to embed into.
        budget: node-expansion budget for the search.

    Returns:
        An Embedding on success, None when exhaustive search proves absence.

    Raises:
        SearchLimitExceeded: if the budget runs out first; absence was not
            proven.
    """
    result, _ = _induced_search(pattern, host, budget)
    return result


def induced_embedding_with_cost(
    pattern: Graph, host: Graph, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[Optional[Embedding], int]:
    """Like :func:`induced_embedding` but also reports nodes expanded."""
    return _induced_search(pattern, host, budget)
