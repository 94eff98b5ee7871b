"""Decomposing members into a base plus copies of regular ground elements.

A decomposition of a member R is a base member m in the same residue class
with m <= R, together with coefficients c_i = (R_i - m_i) / t_i counting
copies of each i-regular ground element. Realizing it yields a disjoint
union of graphs, one component per base/copy, whose regularity sequence is
exactly R and whose components never exceed the basis witness sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BasisIncomplete, NotMember
from .families import StructuredFamily, get_family
from .graphs import Graph, disjoint_union_all
from .sequences import RegularitySequence
from .semigroup import GeneratingSet, ResidueModulus, greedy_minimize, residue_modulus

__all__ = [
    "Decomposition",
    "RealizedDecomposition",
    "decompose",
    "decompose_over_basis",
    "realize_decomposition",
    "max_component_bound",
]


@dataclass(frozen=True)
class Decomposition:
    """base + sum of coefficients[i] copies of the i-regular ground element."""

    base: RegularitySequence
    coefficients: tuple[int, ...]
    modulus: ResidueModulus

    def __post_init__(self):
        if len(self.coefficients) != len(self.modulus.t):
            raise ValueError("coefficients must align with the modulus")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("coefficients must be non-negative")

    def reconstruct(self) -> RegularitySequence:
        """The member this decomposition stands for; exact by construction."""
        counts = tuple(
            m + c * t
            for m, c, t in zip(self.base.counts, self.coefficients, self.modulus.t)
        )
        return RegularitySequence(self.base.k, counts)

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "coefficients": list(self.coefficients),
            "modulus": list(self.modulus.t),
        }


@dataclass(frozen=True)
class RealizedDecomposition:
    """Component graphs of a decomposition and their disjoint union."""

    components: tuple[Graph, ...]
    total: Graph

    def max_component_size(self) -> int:
        return max((g.n for g in self.components), default=0)

    def to_json(self) -> dict:
        return {
            "components": [g.to_json() for g in self.components],
            "total": self.total.to_json(),
        }


def _coefficients(
    R: RegularitySequence, base: RegularitySequence, T: ResidueModulus
) -> tuple[int, ...]:
    coeffs = []
    for r, m, t in zip(R.counts, base.counts, T.t):
        delta = r - m
        # base qualifies, so the difference is a clean multiple of t
        assert delta >= 0 and delta % t == 0
        coeffs.append(delta // t)
    return tuple(coeffs)


def decompose(R: RegularitySequence, family: StructuredFamily) -> Decomposition:
    """Per-instance decomposition by greedy descent.

    The base is greedy_minimize(R); the coefficients recover R exactly.
    Needs no precomputed basis but gives no global bound on the base size
    beyond R itself.

    Raises:
        NotMember: if R is not a member.
    """
    T = residue_modulus(family, R.k)
    base = greedy_minimize(R, T, family)
    return Decomposition(base, _coefficients(R, base, T), T)


def decompose_over_basis(R: RegularitySequence, basis: GeneratingSet) -> Decomposition:
    """Decompose R using a precomputed generating set.

    The base is the largest-total qualifying basis element (m <= R, m in
    R's residue class), ties broken by canonical order. Since basis
    elements are realizable and ground elements are too, a qualifying base
    proves membership; the full membership test only runs to tell a
    non-member apart from a basis gap.

    Raises:
        NotMember: if R fails family membership.
        BasisIncomplete: if R is a member but no basis element qualifies;
            carries R so the caller can raise the search bound or fall back
            to :func:`decompose`.
    """
    if R.k != basis.k:
        raise ValueError(f"sequence cap {R.k} does not match basis cap {basis.k}")
    base = basis.qualifying_base(R)
    if base is None:
        family = get_family(basis.family)
        if not family.membership(R):
            raise NotMember(f"{R} is not a member of family {basis.family!r}")
        raise BasisIncomplete(R)
    return Decomposition(base, _coefficients(R, base, basis.modulus), basis.modulus)


def realize_decomposition(
    dec: Decomposition,
    family: StructuredFamily,
    basis: Optional[GeneratingSet] = None,
) -> RealizedDecomposition:
    """Realize a decomposition as explicit disjoint components.

    The base (when nonzero) is realized first, then coefficients[i] copies
    of the i-regular ground witness, degrees ascending. Passing the basis
    reuses its stored base witness; either way the union's regularity
    sequence is exactly dec.reconstruct().
    """
    components: list[Graph] = []
    if not dec.base.is_zero:
        if basis is not None and dec.base in basis.witnesses:
            components.append(basis.witnesses[dec.base])
        else:
            components.append(family.realize(dec.base))
    for i, c in enumerate(dec.coefficients):
        if c:
            witness = family.ground(i).witness
            components.extend([witness] * c)
    return RealizedDecomposition(tuple(components), disjoint_union_all(components))


def max_component_bound(basis: GeneratingSet) -> int:
    """Largest component any basis-driven realization can produce.

    The max of the basis witness sizes and the ground element sizes; every
    component of a realized decomposition over this basis is at most this
    many vertices.
    """
    sizes = [g.n for g in basis.witnesses.values()]
    sizes.extend(basis.modulus.t)
    return max(sizes, default=0)
