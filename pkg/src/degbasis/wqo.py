"""Order-theoretic tools for degree sequences of bounded-degree graphs.

Three comparability routes live here. Pointwise comparison of regularity
sequences is the cheap necessary-looking check that is in fact not sound
for the realization order (see the probe in the CLI). Multiplicity vectors
over a fixed generating set are the sound route: componentwise dominance
yields an explicit induced embedding of disjoint unions. The brute-force
checker decides the realization order directly by enumerating labeled
realizations and searching for induced embeddings, within a node budget.

D1 is below D2 in the realization order (written rao-leq in outputs) when
some realization of D1 is an induced subgraph of some realization of D2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

from .decomposition import decompose_over_basis
from .errors import CapMismatch, SearchLimitExceeded
from .families import _erdos_gallai_graphic
from .graphs import (
    DEFAULT_SEARCH_BUDGET,
    Embedding,
    Graph,
    disjoint_union_all,
    induced_embedding_with_cost,
)
from .semigroup import GeneratingSet
from .sequences import DegreeSequence, RegularitySequence

__all__ = [
    "Comparison",
    "ComparabilityWitness",
    "RaoVerdict",
    "MultiplicityVector",
    "pointwise_compare",
    "rao_leq_bruteforce",
    "enumerate_realizations",
    "multiplicity_vector",
    "multiplicity_witness",
    "find_comparable_pair",
]


class Comparison(str, Enum):
    """Outcome of a componentwise comparison."""

    EQUAL = "equal"
    LESS_OR_EQUAL = "less-or-equal"
    GREATER_OR_EQUAL = "greater-or-equal"
    INCOMPARABLE = "incomparable"


def pointwise_compare(R1: RegularitySequence, R2: RegularitySequence) -> Comparison:
    """Compare two regularity sequences in the product order.

    Raises:
        CapMismatch: if the caps differ.
    """
    if R1.k != R2.k:
        raise CapMismatch(f"caps differ: {R1.k} vs {R2.k}")
    le = all(a <= b for a, b in zip(R1.counts, R2.counts))
    ge = all(a >= b for a, b in zip(R1.counts, R2.counts))
    if le and ge:
        return Comparison.EQUAL
    if le:
        return Comparison.LESS_OR_EQUAL
    if ge:
        return Comparison.GREATER_OR_EQUAL
    return Comparison.INCOMPARABLE


@dataclass(frozen=True)
class ComparabilityWitness:
    """Evidence for one comparability claim.

    kind is "pointwise" (indices into a stream), "multiplicity" (dominating
    multiplicity vectors realized as unions), or "embedding" (realizations
    found by brute force). Embedding-backed kinds carry the pattern, host,
    and the induced embedding itself.
    """

    kind: str
    pair: Optional[tuple[int, int]] = None
    pattern: Optional[Graph] = None
    host: Optional[Graph] = None
    embedding: Optional[Embedding] = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.pattern is not None:
            out["pattern"] = self.pattern.to_json()
        if self.host is not None:
            out["host"] = self.host.to_json()
        if self.embedding is not None:
            out["embedding"] = self.embedding.to_json()
        return out


@dataclass(frozen=True)
class RaoVerdict:
    """Result of the brute-force realization-order check.

    ``result`` is True or False when the search was definitive and None
    when the node budget ran out first.
    """

    result: Optional[bool]
    witness: Optional[ComparabilityWitness] = None

    @property
    def budget_exceeded(self) -> bool:
        return self.result is None

    def to_json(self) -> dict:
        return {
            "relation": "rao-leq",
            "result": "budget-exceeded" if self.result is None else self.result,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


class _Budget:
    """Shared node-expansion budget for one brute-force call."""

    __slots__ = ("remaining",)

    def __init__(self, total: int):
        self.remaining = total

    def spend(self, n: int = 1):
        self.remaining -= n
        if self.remaining < 0:
            raise SearchLimitExceeded("realization-order search budget exhausted")


def _realization_edge_sets(
    degrees: tuple[int, ...], budget: _Budget
) -> Iterator[frozenset[tuple[int, int]]]:
    """All labeled edge sets whose degree vector is exactly ``degrees``.

    Backtracking vertex by vertex: vertex v picks its remaining-degree many
    neighbors among later vertices, and a partial assignment survives only
    if the reduced degree sequence on the unprocessed suffix is still
    graphic. Each edge set is produced exactly once, in a fixed order.
    """
    n = len(degrees)
    rem = list(degrees)
    chosen: list[tuple[int, int]] = []

    def rec(v: int) -> Iterator[frozenset[tuple[int, int]]]:
        budget.spend()
        if v == n:
            yield frozenset(chosen)
            return
        need = rem[v]
        if need == 0:
            yield from rec(v + 1)
            return
        candidates = [u for u in range(v + 1, n) if rem[u] > 0]
        if len(candidates) < need:
            return
        for subset in combinations(candidates, need):
            budget.spend()
            for u in subset:
                rem[u] -= 1
            if _erdos_gallai_graphic(tuple(sorted(rem[v + 1 :], reverse=True))):
                chosen.extend((v, u) for u in subset)
                rem_v = rem[v]
                rem[v] = 0
                yield from rec(v + 1)
                rem[v] = rem_v
                del chosen[len(chosen) - need :]
            for u in subset:
                rem[u] += 1

    yield from rec(0)


def enumerate_realizations(
    D: DegreeSequence, budget: int = DEFAULT_SEARCH_BUDGET
) -> Iterator[Graph]:
    """All labeled graphs with degree vector D (vertex v gets degree D[v]).

    Raises:
        SearchLimitExceeded: when the enumeration budget runs out.
    """
    for edges in _realization_edge_sets(D.degrees, _Budget(budget)):
        yield Graph(len(D), edges)


def _degree_blocks(degrees: tuple[int, ...]) -> list[list[int]]:
    blocks: list[list[int]] = []
    for v, d in enumerate(degrees):
        if blocks and degrees[v - 1] == d:
            blocks[-1].append(v)
        else:
            blocks.append([v])
    return blocks


def _canonical_form(
    n: int, edges: frozenset[tuple[int, int]], degrees: tuple[int, ...]
) -> tuple:
    """Minimum edge-list encoding over degree-preserving relabelings.

    Exact up to isomorphism for graphs sharing the (sorted) degree vector,
    because any isomorphism between them must preserve degrees.
    """
    blocks = _degree_blocks(degrees)
    best: Optional[tuple] = None
    perm = [0] * n

    def assign(i: int):
        nonlocal best
        if i == len(blocks):
            mapped = tuple(
                sorted(
                    (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                    for (u, v) in edges
                )
            )
            if best is None or mapped < best:
                best = mapped
            return
        block = blocks[i]
        for images in permutations(block):
            for src, img in zip(block, images):
                perm[src] = img
            assign(i + 1)

    assign(0)
    assert best is not None
    return best


_CANON_CAP = 7


def rao_leq_bruteforce(
    D1: DegreeSequence, D2: DegreeSequence, budget: int = DEFAULT_SEARCH_BUDGET
) -> RaoVerdict:
    """Decide whether D1 is below D2 in the realization order, by brute force.

    Enumerates labeled realizations of both sequences (deduplicated up to
    isomorphism when the vertex count is at most 7) and searches for an
    induced embedding of a D1-realization into a D2-realization. Symmetric
    in neither argument: the relation is an order, not an equivalence.

    Returns:
        RaoVerdict with result True (plus an embedding witness), False when
        exhaustive search rules every pair out, or None when the shared
        node budget is exhausted first. A True verdict's witness always
        validates; a False verdict means proven absence, not "not found".
    """
    if len(D1) > len(D2):
        return RaoVerdict(False)
    shared = _Budget(budget)
    try:
        patterns: list[Graph] = []
        seen_pattern_forms: set[tuple] = set()
        for edges in _realization_edge_sets(D1.degrees, shared):
            if len(D1) <= _CANON_CAP:
                form = _canonical_form(len(D1), edges, D1.degrees)
                if form in seen_pattern_forms:
                    continue
                seen_pattern_forms.add(form)
            patterns.append(Graph(len(D1), edges))
        if not patterns:
            return RaoVerdict(False)
        seen_host_forms: set[tuple] = set()
        for edges in _realization_edge_sets(D2.degrees, shared):
            if len(D2) <= _CANON_CAP:
                form = _canonical_form(len(D2), edges, D2.degrees)
                if form in seen_host_forms:
                    continue
                seen_host_forms.add(form)
            host = Graph(len(D2), edges)
            for pattern in patterns:
                emb, nodes = induced_embedding_with_cost(
                    pattern, host, shared.remaining
                )
                shared.spend(nodes)
                if emb is not None:
                    witness = ComparabilityWitness(
                        kind="embedding", pattern=pattern, host=host, embedding=emb
                    )
                    return RaoVerdict(True, witness)
    except SearchLimitExceeded:
        return RaoVerdict(None)
    return RaoVerdict(False)


@dataclass(frozen=True)
class MultiplicityVector:
    """Counts per nonzero basis element; a point in N^(number of elements).

    ``elements`` is the basis's nonzero element tuple in canonical order
    and ``counts[i]`` how many copies of ``elements[i]`` the decomposition
    uses (the chosen base contributes one copy of itself; ground copies
    contribute their coefficients). Summing counts[i] * elements[i]
    reconstructs the decomposed sequence exactly.
    """

    k: int
    elements: tuple[RegularitySequence, ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.elements) != len(self.counts):
            raise ValueError("counts must align with elements")

    def reconstruct(self) -> RegularitySequence:
        total = [0] * (self.k + 1)
        for e, c in zip(self.elements, self.counts):
            for i, x in enumerate(e.counts):
                total[i] += c * x
        return RegularitySequence(self.k, tuple(total))

    def pointwise_le(self, other: "MultiplicityVector") -> bool:
        if self.elements != other.elements:
            raise CapMismatch("multiplicity vectors use different bases")
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "elements": [list(e.counts) for e in self.elements],
            "counts": list(self.counts),
        }


def multiplicity_vector(R: RegularitySequence, basis: GeneratingSet) -> MultiplicityVector:
    """Express R as counted copies of basis elements.

    Decomposes over the basis, then counts one copy of the chosen base (when
    nonzero) plus the ground-element coefficients. The zero sequence maps to
    the all-zero vector.

    Raises:
        NotMember / BasisIncomplete: propagated from decompose_over_basis.
    """
    dec = decompose_over_basis(R, basis)
    elements = basis.nonzero_elements()
    index = {e: i for i, e in enumerate(elements)}
    counts = [0] * len(elements)
    if not dec.base.is_zero:
        counts[index[dec.base]] += 1
    for i, c in enumerate(dec.coefficients):
        if c:
            ground = [0] * (basis.k + 1)
            ground[i] = basis.modulus.t[i]
            counts[index[RegularitySequence(basis.k, tuple(ground))]] += c
    return MultiplicityVector(basis.k, elements, tuple(counts))


def multiplicity_witness(
    R1: RegularitySequence, R2: RegularitySequence, basis: GeneratingSet
) -> Optional[ComparabilityWitness]:
    """Turn dominating multiplicity vectors into an explicit embedding.

    When the vector of R1 is componentwise at most that of R2, the union
    realizing R1 (copies of basis witnesses, canonical order) maps
    component-for-component into the union realizing R2: identical copies
    embed identically and unions add no cross edges, so the embedding is
    induced. Returns None when the vectors do not dominate.
    """
    v1 = multiplicity_vector(R1, basis)
    v2 = multiplicity_vector(R2, basis)
    if not v1.pointwise_le(v2):
        return None
    witnesses = [basis.witness(e) for e in v1.elements]
    pattern_comps: list[Graph] = []
    host_comps: list[Graph] = []
    host_offsets: dict[tuple[int, int], int] = {}
    offset = 0
    for ei, w in enumerate(witnesses):
        for copy in range(v2.counts[ei]):
            host_offsets[(ei, copy)] = offset
            host_comps.append(w)
            offset += w.n
    mapping: list[int] = []
    for ei, w in enumerate(witnesses):
        for copy in range(v1.counts[ei]):
            pattern_comps.append(w)
            base = host_offsets[(ei, copy)]
            mapping.extend(base + local for local in range(w.n))
    return ComparabilityWitness(
        kind="multiplicity",
        pattern=disjoint_union_all(pattern_comps),
        host=disjoint_union_all(host_comps),
        embedding=Embedding(tuple(mapping)),
    )


def find_comparable_pair(
    seqs: Sequence[RegularitySequence], antichain_check: bool = False
) -> Optional[tuple[int, int]]:
    """First comparable pair in a stream of regularity sequences.

    Returns 1-based indices (i, j), i < j, minimizing j then i, such that
    seqs[i-1] <= seqs[j-1] pointwise; with antichain_check=True either
    direction counts, so None confirms the stream is an antichain.

    Raises:
        CapMismatch: if the sequences do not share one cap.
    """
    seqs = list(seqs)
    for s in seqs[1:]:
        if s.k != seqs[0].k:
            raise CapMismatch(f"caps differ: {seqs[0].k} vs {s.k}")
    for j in range(1, len(seqs)):
        for i in range(j):
            le = seqs[i].pointwise_le(seqs[j])
            ge = seqs[j].pointwise_le(seqs[i]) if antichain_check else False
            if le or ge:
                return (i + 1, j + 1)
    return None
