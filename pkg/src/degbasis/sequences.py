"""Degree sequences and bounded-degree regularity sequences.

A degree sequence lists vertex degrees in non-increasing order. Its
regularity sequence under a degree cap k is the vector of counts
(count of degree-0 vertices, count of degree-1 vertices, ..., count of
degree-k vertices), a point in N^(k+1). Disjoint union of graphs adds
regularity sequences coordinatewise, which is what makes the additive
machinery downstream work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import CapMismatch, DegreeExceedsCap

__all__ = [
    "DegreeSequence",
    "RegularitySequence",
    "degree_to_regularity",
    "regularity_to_degree",
    "add_regularity",
]


@dataclass(frozen=True)
class DegreeSequence:
    """A finite multiset of vertex degrees, stored in non-increasing order.

    Inputs arriving unsorted are sorted on ingestion; negative entries are
    rejected. The empty sequence is allowed and denotes the empty graph.
    """

    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        if any(d < 0 for d in degs):
            raise ValueError(f"degrees must be non-negative, got {degs}")
        object.__setattr__(self, "degrees", tuple(sorted(degs, reverse=True)))

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i) -> int:
        return self.degrees[i]

    @property
    def max_degree(self) -> int:
        """Largest degree, 0 for the empty sequence."""
        return self.degrees[0] if self.degrees else 0

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    def to_json(self) -> dict:
        return {"degrees": list(self.degrees)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "DegreeSequence":
        return cls(tuple(obj["degrees"]))


@dataclass(frozen=True)
class RegularitySequence:
    """Counts of vertices per degree, indexed 0..k.

    ``counts[i]`` is the number of vertices of degree exactly i. The length
    is always k+1; the degree-0 coordinate is a real coordinate, not padding.
    """

    k: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"cap k must be non-negative, got {self.k}")
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.k + 1:
            raise ValueError(
                f"counts must have length k+1={self.k + 1}, got {len(counts)}"
            )
        if any(c < 0 for c in counts):
            raise ValueError(f"counts must be non-negative, got {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def zero(cls, k: int) -> "RegularitySequence":
        return cls(k, (0,) * (k + 1))

    @property
    def total(self) -> int:
        """Number of vertices counted."""
        return sum(self.counts)

    @property
    def support(self) -> tuple[int, ...]:
        """Degrees with a nonzero count."""
        return tuple(i for i, c in enumerate(self.counts) if c)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.counts)

    def __add__(self, other: "RegularitySequence") -> "RegularitySequence":
        return add_regularity(self, other)

    def pointwise_le(self, other: "RegularitySequence") -> bool:
        """Componentwise order; caps must match."""
        if self.k != other.k:
            raise CapMismatch(f"caps differ: {self.k} vs {other.k}")
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def sort_key(self) -> tuple:
        """Canonical ordering key: total vertex count, then lexicographic."""
        return (self.total, self.counts)

    def to_json(self) -> dict:
        return {"k": self.k, "counts": list(self.counts)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "RegularitySequence":
        return cls(int(obj["k"]), tuple(obj["counts"]))


def degree_to_regularity(D: DegreeSequence, k: int) -> RegularitySequence:
    """Count vertices per degree under the cap k.

    Args:
        D: degree sequence to convert.
        k: degree cap; every entry of D must be at most k.

    Returns:
        The regularity sequence of D in N^(k+1).

    Raises:
        DegreeExceedsCap: if some degree in D is larger than k.
    """
    if D.degrees and D.max_degree > k:
        raise DegreeExceedsCap(f"degree {D.max_degree} exceeds cap k={k}")
    counts = [0] * (k + 1)
    for d in D:
        counts[d] += 1
    return RegularitySequence(k, tuple(counts))


def regularity_to_degree(R: RegularitySequence) -> DegreeSequence:
    """Expand counts back into a non-increasing degree sequence.

    Round-trips exactly with :func:`degree_to_regularity` at the same cap.
    """
    degs: list[int] = []
    for i in range(R.k, -1, -1):
        degs.extend([i] * R.counts[i])
    return DegreeSequence(tuple(degs))


def add_regularity(a: RegularitySequence, b: RegularitySequence) -> RegularitySequence:
    """Coordinatewise sum; models disjoint union of realizations.

    Raises:
        CapMismatch: if the two sequences have different caps.
    """
    if a.k != b.k:
        raise CapMismatch(f"caps differ: {a.k} vs {b.k}")
    return RegularitySequence(a.k, tuple(x + y for x, y in zip(a.counts, b.counts)))
