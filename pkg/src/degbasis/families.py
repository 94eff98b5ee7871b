"""Structured graph families: membership, ground elements, realization.

A structured family pairs a membership test on regularity sequences with a
deterministic realizer. The two built-ins are all simple graphs (membership
by Erdos-Gallai) and bipartite graphs (membership by a bounded side-split
search with a Gale-Ryser check per split). Both are closed under disjoint
union and contain an i-regular member for every degree i, which is what the
generating-basis machinery requires.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import NoRegularFound, NotMember, SplitSpaceExceeded
from .graphs import (
    BipartiteGraph,
    Graph,
    bipartite_realize,
    gale_ryser_violation,
    havel_hakimi_realize,
)
from .sequences import DegreeSequence, RegularitySequence, regularity_to_degree

__all__ = [
    "GroundElement",
    "StructuredFamily",
    "graph_is_member",
    "bipartite_is_member",
    "ground_element",
    "realize_member",
    "graph_family",
    "bipartite_family",
    "get_family",
    "DEFAULT_SPLIT_CAP",
    "DEFAULT_GROUND_CAP",
]

DEFAULT_SPLIT_CAP = 2_000_000
DEFAULT_GROUND_CAP = 256


def _erdos_gallai_graphic(degrees: tuple[int, ...]) -> bool:
    """Erdos-Gallai test on a non-increasing degree tuple."""
    n = len(degrees)
    if n == 0:
        return True
    if sum(degrees) % 2 != 0:
        return False
    if degrees[0] >= n:
        return False
    prefix = 0
    for t in range(1, n + 1):
        prefix += degrees[t - 1]
        rest = sum(min(d, t) for d in degrees[t:])
        if prefix > t * (t - 1) + rest:
            return False
    return True


def graph_is_member(R: RegularitySequence) -> bool:
    """True iff some simple graph has regularity sequence R.

    Equivalent to Erdos-Gallai graphicality of the expanded degree sequence.
    The zero sequence is a member: the empty graph realizes it.
    """
    return _erdos_gallai_graphic(regularity_to_degree(R).degrees)


def _bipartite_split(
    R: RegularitySequence, split_cap: int
) -> Optional[tuple[int, ...]]:
    """Find the first side split realizing R as a bipartite graph.

    A split assigns a_i of the R.counts[i] degree-i vertices to side A; the
    rest go to side B. Realizability needs the side degree sums to balance
    and the pair of side lists to pass Gale-Ryser. Degree-0 vertices are
    pinned to side A (their side never affects realizability), side-swapped
    splits are canonicalized away, and the degree-1 allocation is solved
    exactly from the balance remainder. Splits are explored depth-first from
    the top degree down, each a_i ascending, so the first hit is canonical.

    Returns the full split (a_0..a_k) or None; raises SplitSpaceExceeded
    when the DFS visits more than split_cap nodes.
    """
    counts = R.counts
    k = R.k
    total = sum(i * c for i, c in enumerate(counts))
    if total % 2 != 0:
        return None
    half = total // 2
    positive = [i for i in range(k, 0, -1) if counts[i] > 0]
    # max degree-sum still assignable to side A from positive[idx:]
    tail_max = [0] * (len(positive) + 1)
    for idx in range(len(positive) - 1, -1, -1):
        i = positive[idx]
        tail_max[idx] = tail_max[idx + 1] + i * counts[i]

    split: dict[int, int] = {}
    nodes = 0

    def passes_gale_ryser() -> bool:
        a_list: list[int] = []
        b_list: list[int] = []
        for i in positive:
            a_list.extend([i] * split[i])
            b_list.extend([i] * (counts[i] - split[i]))
        return gale_ryser_violation(a_list, b_list) is None

    def search(idx: int, need: int, tied: bool) -> Optional[bool]:
        """DFS over positive degrees, highest first. tied tracks the
        side-swap canonical prefix (a_i == counts[i] - a_i so far)."""
        nonlocal nodes
        nodes += 1
        if nodes > split_cap:
            raise SplitSpaceExceeded(
                f"side-split search exceeded {split_cap} nodes; membership undecided"
            )
        if need < 0 or need > tail_max[idx]:
            return None
        if idx == len(positive):
            return passes_gale_ryser() or None
        i = positive[idx]
        if idx == len(positive) - 1 and i == 1:
            # the last positive degree is 1: allocation forced by the balance
            if need <= counts[1]:
                other = counts[1] - need
                if tied and need > other:
                    return None
                split[1] = need
                if search(idx + 1, 0, tied and need == other):
                    return True
                del split[1]
            return None
        for a in range(counts[i] + 1):
            other = counts[i] - a
            if tied and a > other:
                break
            split[i] = a
            if search(idx + 1, need - i * a, tied and a == other):
                return True
            del split[i]
        return None

    if search(0, half, True):
        full = [0] * (k + 1)
        full[0] = counts[0]  # isolated vertices pinned to side A
        for i in positive:
            full[i] = split[i]
        return tuple(full)
    return None


def bipartite_is_member(
    R: RegularitySequence, split_cap: int = DEFAULT_SPLIT_CAP
) -> bool:
    """True iff some bipartite graph has regularity sequence R.

    Searches side splits as described in :func:`_bipartite_split`.

    Raises:
        SplitSpaceExceeded: if the split search exceeds its cap; the answer
            is then undecided, not False.
    """
    return _bipartite_split(R, split_cap) is not None


def _realize_graph(R: RegularitySequence) -> Graph:
    return havel_hakimi_realize(regularity_to_degree(R))


def _realize_bipartite(
    R: RegularitySequence, split_cap: int = DEFAULT_SPLIT_CAP
) -> BipartiteGraph:
    split = _bipartite_split(R, split_cap)
    if split is None:
        raise NotMember(f"{R} has no bipartite realization")
    a_list: list[int] = []
    b_list: list[int] = []
    for i in range(R.k, -1, -1):
        a_list.extend([i] * split[i])
        b_list.extend([i] * (R.counts[i] - split[i]))
    return bipartite_realize(DegreeSequence(tuple(a_list)), DegreeSequence(tuple(b_list)))


@dataclass(frozen=True)
class GroundElement:
    """The smallest regular member of a family for one degree.

    ``size`` is the least t such that t vertices of degree ``degree`` form a
    member; ``witness`` realizes that sequence.
    """

    degree: int
    size: int
    witness: Graph


class StructuredFamily:
    """A named family given by a membership test and a realizer.

    Both callables act on regularity sequences; the realizer must produce a
    graph whose regularity sequence is exactly its input. Ground elements
    are found by increasing search, not trusted closed forms, and cached per
    instance.
    """

    def __init__(
        self,
        name: str,
        membership: Callable[[RegularitySequence], bool],
        realize: Callable[[RegularitySequence], Graph],
        ground_cap: int = DEFAULT_GROUND_CAP,
    ):
        self.name = name
        self._membership = membership
        self._realize = realize
        self.ground_cap = ground_cap
        self._ground_cache: dict[int, GroundElement] = {}

    def __repr__(self) -> str:
        return f"StructuredFamily({self.name!r})"

    def membership(self, R: RegularitySequence) -> bool:
        return self._membership(R)

    def realize(self, R: RegularitySequence) -> Graph:
        if not self._membership(R):
            raise NotMember(f"{R} is not a member of family {self.name!r}")
        return self._realize(R)

    def ground(self, i: int) -> GroundElement:
        """Smallest t with t degree-i vertices forming a member, with witness.

        Searches t = 1, 2, ... and stops at the first member, so minimality
        holds by construction.

        Raises:
            NoRegularFound: if no member appears by the configured cap.
        """
        cached = self._ground_cache.get(i)
        if cached is not None:
            return cached
        for t in range(1, self.ground_cap + 1):
            counts = [0] * (i + 1)
            counts[i] = t
            R = RegularitySequence(i, tuple(counts))
            if self._membership(R):
                element = GroundElement(i, t, self._realize(R))
                self._ground_cache[i] = element
                return element
        raise NoRegularFound(
            f"no {i}-regular member of {self.name!r} within {self.ground_cap} vertices"
        )


_GRAPHS = StructuredFamily("graph", graph_is_member, _realize_graph)
_BIPARTITE = StructuredFamily("bipartite", bipartite_is_member, _realize_bipartite)


def graph_family() -> StructuredFamily:
    """The family of all simple graphs."""
    return _GRAPHS


def bipartite_family(split_cap: int = DEFAULT_SPLIT_CAP) -> StructuredFamily:
    """The family of bipartite graphs.

    A non-default split_cap returns a fresh instance with its own cache.
    """
    if split_cap == DEFAULT_SPLIT_CAP:
        return _BIPARTITE
    return StructuredFamily(
        "bipartite",
        lambda R: bipartite_is_member(R, split_cap),
        lambda R: _realize_bipartite(R, split_cap),
    )


def get_family(name: str) -> StructuredFamily:
    """Look up a built-in family by name ('graph' or 'bipartite')."""
    if name == "graph":
        return _GRAPHS
    if name == "bipartite":
        return _BIPARTITE
    raise ValueError(f"unknown family {name!r}")


def ground_element(family: StructuredFamily, i: int) -> GroundElement:
    """Module-level alias for :meth:`StructuredFamily.ground`."""
    return family.ground(i)


def realize_member(family: StructuredFamily, R: RegularitySequence) -> Graph:
    """Realize R inside the family.

    Raises:
        NotMember: if R is not a member.
    """
    return family.realize(R)
