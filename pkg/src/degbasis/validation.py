"""Input coercion helpers shared by the estimators and the CLI."""

from __future__ import annotations

from typing import Any, Iterable, Optional

from .errors import DegreeExceedsCap
from .sequences import DegreeSequence, RegularitySequence, degree_to_regularity

__all__ = [
    "ensure_degree_sequence",
    "ensure_regularity_sequence",
    "coerce_sequences",
]


def ensure_degree_sequence(obj: Any) -> DegreeSequence:
    """Coerce a DegreeSequence, mapping, or iterable of ints."""
    if isinstance(obj, DegreeSequence):
        return obj
    if isinstance(obj, dict):
        if "degrees" not in obj:
            raise ValueError("mapping input needs a 'degrees' field")
        return DegreeSequence.from_json(obj)
    return DegreeSequence(tuple(int(d) for d in obj))


def ensure_regularity_sequence(obj: Any, k: Optional[int] = None) -> RegularitySequence:
    """Coerce a RegularitySequence, mapping, or iterable of counts.

    A bare iterable is read as counts with k = len - 1 unless k is given,
    in which case the counts are padded with zeros up to length k + 1.
    """
    if isinstance(obj, RegularitySequence):
        if k is not None and obj.k != k:
            return ensure_regularity_sequence(obj.counts, k)
        return obj
    if isinstance(obj, dict):
        if "counts" in obj:
            R = RegularitySequence.from_json(obj)
            return ensure_regularity_sequence(R, k)
        if "degrees" not in obj:
            raise ValueError("mapping input needs a 'counts' or 'degrees' field")
        D = DegreeSequence.from_json(obj)
        return ensure_regularity_sequence(
            degree_to_regularity(D, k if k is not None else D.max_degree), k
        )
    counts = tuple(int(c) for c in obj)
    if k is None:
        if not counts:
            raise ValueError("empty counts need an explicit k")
        return RegularitySequence(len(counts) - 1, counts)
    if len(counts) > k + 1:
        if any(counts[k + 1 :]):
            raise DegreeExceedsCap(
                f"counts of length {len(counts)} hold degrees above the cap k={k}"
            )
        counts = counts[: k + 1]
    return RegularitySequence(k, counts + (0,) * (k + 1 - len(counts)))


def coerce_sequences(X: Iterable[Any], k: Optional[int] = None) -> list[RegularitySequence]:
    """Coerce a batch (2D array-like, list of rows, or sequences) to one cap."""
    rows = [ensure_regularity_sequence(row, k) for row in X]
    if k is None and rows:
        k = max(r.k for r in rows)
        rows = [ensure_regularity_sequence(r, k) for r in rows]
    return rows
