"""Finite generating sets for grounded additive families in N^(k+1).

The construction follows the finite-generation argument for grounded
subsets of (N^m, +): take the minimal regular member size t_i for each
degree i, quotient coordinatewise by (t_0, ..., t_k), and collect the
minimal members of each congruence class. Every member is then a minimal
class member plus a non-negative combination of the regular ground
elements, coordinate by coordinate. Classes here are classes of the member
set itself (only members are enumerated), and minimality is searched below
an explicit bound rather than assumed, so completeness is certified
separately by verify_basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Optional

from .errors import NotMember
from .families import StructuredFamily, get_family
from .graphs import Graph
from .sequences import RegularitySequence

__all__ = [
    "ResidueModulus",
    "ResidueLabel",
    "GeneratingSet",
    "BasisReport",
    "residue_modulus",
    "residue_class_of",
    "greedy_minimize",
    "minimal_elements",
    "generating_set",
    "verify_basis",
    "DEFAULT_BOUND",
]

DEFAULT_BOUND = 30


@dataclass(frozen=True)
class ResidueModulus:
    """Componentwise modulus (t_0, ..., t_k) of minimal regular sizes."""

    t: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        if not t:
            raise ValueError("modulus must have at least one coordinate")
        if any(x < 1 for x in t):
            raise ValueError(f"modulus entries must be positive, got {t}")
        object.__setattr__(self, "t", t)

    @property
    def k(self) -> int:
        return len(self.t) - 1

    def labels(self) -> Iterator["ResidueLabel"]:
        """All residue labels, in lexicographic order, each exactly once."""
        for r in product(*(range(x) for x in self.t)):
            yield ResidueLabel(r)

    @property
    def label_count(self) -> int:
        out = 1
        for x in self.t:
            out *= x
        return out


@dataclass(frozen=True)
class ResidueLabel:
    """A coordinatewise residue (r_0, ..., r_k) with 0 <= r_i < t_i."""

    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        if any(x < 0 for x in r):
            raise ValueError(f"residues must be non-negative, got {r}")
        object.__setattr__(self, "r", r)


def residue_modulus(family: StructuredFamily, k: int) -> ResidueModulus:
    """Minimal regular member sizes (t_0, ..., t_k) for the family."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return ResidueModulus(tuple(family.ground(i).size for i in range(k + 1)))


def residue_class_of(R: RegularitySequence, T: ResidueModulus) -> ResidueLabel:
    """The coordinatewise residue of R under T."""
    if len(T.t) != R.k + 1:
        raise ValueError(f"modulus length {len(T.t)} does not match k={R.k}")
    return ResidueLabel(tuple(c % t for c, t in zip(R.counts, T.t)))


def greedy_minimize(
    R: RegularitySequence, T: ResidueModulus, family: StructuredFamily
) -> RegularitySequence:
    """Descend from R by single ground-element subtractions while membership holds.

    Scans i = k down to 0, subtracting t_i from coordinate i whenever the
    result is still a member, restarting the scan after every success. The
    result is in the same residue class as R and no further single-step
    subtraction stays inside the family.

    Raises:
        NotMember: if R itself is not a member.
    """
    if len(T.t) != R.k + 1:
        raise ValueError(f"modulus length {len(T.t)} does not match k={R.k}")
    if not family.membership(R):
        raise NotMember(f"{R} is not a member of family {family.name!r}")
    counts = list(R.counts)
    k = R.k
    progress = True
    while progress:
        progress = False
        for i in range(k, -1, -1):
            if counts[i] >= T.t[i]:
                counts[i] -= T.t[i]
                if family.membership(RegularitySequence(k, tuple(counts))):
                    progress = True
                    break
                counts[i] += T.t[i]
    return RegularitySequence(k, tuple(counts))


def _class_members_upto(
    label: ResidueLabel, T: ResidueModulus, bound: int
) -> list[tuple[int, ...]]:
    """All count tuples congruent to label with total <= bound, sorted by
    (total, lex). Membership is not filtered here."""
    coords: list[list[int]] = []
    for r, t in zip(label.r, T.t):
        if r > bound:
            return []
        coords.append(list(range(r, bound + 1, t)))
    out: list[tuple[int, ...]] = []
    stack: list[tuple[int, int, tuple[int, ...]]] = [(0, 0, ())]
    while stack:
        idx, total, prefix = stack.pop()
        if idx == len(coords):
            out.append(prefix)
            continue
        for v in coords[idx]:
            if total + v > bound:
                break
            stack.append((idx + 1, total + v, prefix + (v,)))
    out.sort(key=lambda c: (sum(c), c))
    return out


def minimal_elements(
    label: ResidueLabel,
    T: ResidueModulus,
    family: StructuredFamily,
    bound: int = DEFAULT_BOUND,
) -> tuple[RegularitySequence, ...]:
    """Minimal nonzero family members of one residue class, up to the bound.

    Enumerates class members with total vertex count <= bound in canonical
    order (total, then lexicographic) and keeps those not dominating any
    smaller member. The zero sequence is excluded both as a candidate and
    as a dominator. The result is an antichain under the componentwise
    order.
    """
    k = len(T.t) - 1
    kept: list[tuple[int, ...]] = []
    for counts in _class_members_upto(label, T, bound):
        if not any(counts):
            continue  # zero excluded
        if any(all(m <= c for m, c in zip(mins, counts)) for mins in kept):
            continue
        if family.membership(RegularitySequence(k, counts)):
            kept.append(counts)
    return tuple(RegularitySequence(k, c) for c in kept)


@dataclass(frozen=True)
class GeneratingSet:
    """A finite set generating all family members below verification.

    ``elements`` holds the zero sequence plus the minimal members of every
    residue class found within ``bound``, in canonical (total, lex) order.
    ``antichains`` maps each residue label to its minimal members and
    ``witnesses`` realizes every nonzero element. Every member R decomposes
    as a qualifying element m (m <= R, m congruent to R) plus
    (R_i - m_i)/t_i copies of each regular ground element.
    """

    family: str
    k: int
    modulus: ResidueModulus
    bound: int
    elements: tuple[RegularitySequence, ...]
    antichains: Mapping[ResidueLabel, tuple[RegularitySequence, ...]]
    witnesses: Mapping[RegularitySequence, Graph]

    @property
    def zero(self) -> RegularitySequence:
        return RegularitySequence.zero(self.k)

    def nonzero_elements(self) -> tuple[RegularitySequence, ...]:
        return tuple(e for e in self.elements if not e.is_zero)

    def witness(self, element: RegularitySequence) -> Graph:
        if element.is_zero:
            return Graph(0, frozenset())
        return self.witnesses[element]

    def qualifying_base(self, R: RegularitySequence) -> Optional[RegularitySequence]:
        """Largest-total element m with m <= R and m congruent to R.

        Ties broken by canonical order (first in (total, lex) order wins).
        Returns None when no element qualifies.
        """
        label = residue_class_of(R, self.modulus)
        candidates = list(self.antichains.get(label, ()))
        if label.r == (0,) * (self.k + 1):
            candidates.append(self.zero)
        best: Optional[RegularitySequence] = None
        for m in sorted(candidates, key=lambda e: e.sort_key()):
            if m.pointwise_le(R):
                if best is None or m.total > best.total:
                    best = m
        return best

    def to_json(self) -> dict:
        elements = []
        for e in self.elements:
            witness = self.witnesses.get(e)
            if witness is None:
                witness = Graph(0)  # zero element: the empty graph realizes it
            elements.append({"counts": list(e.counts), "witness": witness.to_json()})
        return {
            "family": self.family,
            "k": self.k,
            "modulus": list(self.modulus.t),
            "bound": self.bound,
            "elements": elements,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "GeneratingSet":
        k = int(obj["k"])
        modulus = ResidueModulus(tuple(obj["modulus"]))
        elements: list[RegularitySequence] = []
        witnesses: dict[RegularitySequence, Graph] = {}
        for entry in obj["elements"]:
            e = RegularitySequence(k, tuple(entry["counts"]))
            elements.append(e)
            if not e.is_zero:
                witnesses[e] = Graph.from_json(entry["witness"])
        antichains: dict[ResidueLabel, list[RegularitySequence]] = {}
        for e in elements:
            if e.is_zero:
                continue
            antichains.setdefault(residue_class_of(e, modulus), []).append(e)
        return cls(
            family=str(obj["family"]),
            k=k,
            modulus=modulus,
            bound=int(obj["bound"]),
            elements=tuple(sorted(elements, key=lambda e: e.sort_key())),
            antichains={
                label: tuple(sorted(v, key=lambda e: e.sort_key()))
                for label, v in antichains.items()
            },
            witnesses=witnesses,
        )


def generating_set(
    family: StructuredFamily, k: int, bound: int = DEFAULT_BOUND
) -> GeneratingSet:
    """Compute the generating set for the family at cap k.

    Visits every residue label of the modulus exactly once, collects the
    minimal class members within the bound, realizes each, and adds the
    zero sequence. Output order is canonical, so equal inputs produce equal
    sets. Labels are independent; evaluation is sequential here and the
    result is defined to be identical to the sequential one.
    """
    T = residue_modulus(family, k)
    antichains: dict[ResidueLabel, tuple[RegularitySequence, ...]] = {}
    witnesses: dict[RegularitySequence, Graph] = {}
    elements: list[RegularitySequence] = [RegularitySequence.zero(k)]
    for label in T.labels():
        mins = minimal_elements(label, T, family, bound)
        if mins:
            antichains[label] = mins
            elements.extend(mins)
            for e in mins:
                witnesses[e] = family.realize(e)
    elements.sort(key=lambda e: e.sort_key())
    return GeneratingSet(
        family=family.name,
        k=k,
        modulus=T,
        bound=bound,
        elements=tuple(elements),
        antichains=antichains,
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class BasisReport:
    """Outcome of a coverage sweep of a generating set."""

    complete: bool
    checked_up_to: int
    members_checked: int
    first_uncovered: Optional[RegularitySequence]

    def to_json(self) -> dict:
        return {
            "complete": self.complete,
            "checked_up_to": self.checked_up_to,
            "members_checked": self.members_checked,
            "first_uncovered": (
                None if self.first_uncovered is None else self.first_uncovered.to_json()
            ),
        }


def _all_counts_upto(k: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All count tuples in N^(k+1) with total <= bound, (total, lex) order."""

    def comps(remaining: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (remaining,)
            return
        for v in range(remaining + 1):
            for rest in comps(remaining - v, parts - 1):
                yield (v,) + rest

    for s in range(bound + 1):
        yield from comps(s, k + 1)


def verify_basis(
    basis: GeneratingSet,
    family: Optional[StructuredFamily] = None,
    verify_bound: int = DEFAULT_BOUND,
) -> BasisReport:
    """Check that every member with total <= verify_bound is covered.

    A member R is covered when some basis element m (possibly zero)
    satisfies m <= R and m congruent to R under the modulus; by closure the
    remainder is then exactly a sum of ground elements. Reports the first
    uncovered member, if any, in canonical order.
    """
    if family is None:
        family = get_family(basis.family)
    k = basis.k
    members_checked = 0
    for counts in _all_counts_upto(k, verify_bound):
        R = RegularitySequence(k, counts)
        if not family.membership(R):
            continue
        members_checked += 1
        if basis.qualifying_base(R) is None:
            return BasisReport(False, verify_bound, members_checked, R)
    return BasisReport(True, verify_bound, members_checked, None)
