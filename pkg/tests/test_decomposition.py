import pytest
from hypothesis import given, settings, strategies as st

from degbasis import (
    BasisIncomplete,
    Decomposition,
    GeneratingSet,
    NotMember,
    RegularitySequence,
    decompose,
    decompose_over_basis,
    degree_to_regularity,
    max_component_bound,
    realize_decomposition,
)
from degbasis.graphs import degree_sequence
from degbasis.semigroup import ResidueModulus


def R(*counts):
    return RegularitySequence(len(counts) - 1, tuple(counts))


class TestDecompositionRecord:
    def test_reconstruct_is_exact(self):
        dec = Decomposition(R(0, 2), (3, 1), ResidueModulus((1, 2)))
        assert dec.reconstruct() == R(3, 4)

    def test_negative_coefficients_rejected(self):
        with pytest.raises(ValueError):
            Decomposition(R(0, 2), (-1, 0), ResidueModulus((1, 2)))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Decomposition(R(0, 2), (1,), ResidueModulus((1, 2)))

    def test_json(self):
        dec = Decomposition(R(0, 2), (3, 1), ResidueModulus((1, 2)))
        assert dec.to_json() == {
            "base": {"k": 1, "counts": [0, 2]},
            "coefficients": [3, 1],
            "modulus": [1, 2],
        }


class TestGreedyDecompose:
    def test_frozen_greedy_split(self, graph_fam):
        dec = decompose(R(3, 4), graph_fam)
        assert dec.base == R(0, 0)
        assert dec.coefficients == (3, 2)
        assert dec.reconstruct() == R(3, 4)

    def test_non_member_raises(self, graph_fam):
        with pytest.raises(NotMember):
            decompose(R(0, 1), graph_fam)


class TestDecomposeOverBasis:
    def test_frozen_base_and_coefficients(self, basis_g1):
        dec = decompose_over_basis(R(3, 4), basis_g1)
        assert dec.base == R(0, 2)
        assert dec.coefficients == (3, 1)
        assert dec.reconstruct() == R(3, 4)

    def test_basis_element_decomposes_to_itself(self, basis_g2):
        dec = decompose_over_basis(R(0, 0, 4), basis_g2)
        assert dec.base == R(0, 0, 4)
        assert dec.coefficients == (0, 0, 0)

    def test_zero_decomposes_to_zero(self, basis_g1):
        dec = decompose_over_basis(R(0, 0), basis_g1)
        assert dec.base == R(0, 0)
        assert dec.coefficients == (0, 0)

    def test_non_member_raises_not_member(self, basis_g2):
        with pytest.raises(NotMember):
            decompose_over_basis(R(0, 0, 1), basis_g2)

    def test_cap_mismatch_rejected(self, basis_g1):
        with pytest.raises(ValueError):
            decompose_over_basis(R(0, 0, 3), basis_g1)

    def test_gap_raises_basis_incomplete_with_sequence(self, basis_g2, graph_fam):
        doctored = basis_g2.to_json()
        doctored["elements"] = [
            e for e in doctored["elements"] if e["counts"] != [0, 0, 4]
        ]
        broken = GeneratingSet.from_json(doctored)
        with pytest.raises(BasisIncomplete) as info:
            decompose_over_basis(R(0, 0, 4), broken)
        assert info.value.sequence == R(0, 0, 4)


class TestRealizeDecomposition:
    def test_frozen_round_trip(self, basis_g1, graph_fam):
        dec = decompose_over_basis(R(3, 4), basis_g1)
        realized = realize_decomposition(dec, graph_fam, basis_g1)
        assert [c.n for c in realized.components] == [2, 1, 1, 1, 2]
        assert realized.max_component_size() == 2
        assert degree_to_regularity(degree_sequence(realized.total), 1) == R(3, 4)

    def test_components_multiset_is_deterministic(self, basis_g2, graph_fam):
        dec = decompose_over_basis(R(2, 2, 5), basis_g2)
        a = realize_decomposition(dec, graph_fam, basis_g2)
        b = realize_decomposition(dec, graph_fam, basis_g2)
        assert a.total == b.total

    def test_without_basis_witnesses(self, graph_fam):
        dec = decompose(R(3, 4), graph_fam)
        realized = realize_decomposition(dec, graph_fam)
        assert degree_to_regularity(degree_sequence(realized.total), 1) == R(3, 4)

    def test_json_shape(self, basis_g1, graph_fam):
        dec = decompose_over_basis(R(0, 2), basis_g1)
        realized = realize_decomposition(dec, graph_fam, basis_g1)
        obj = realized.to_json()
        assert set(obj) == {"components", "total"}


class TestComponentBound:
    def test_frozen_bounds(self, basis_g1, basis_g2):
        assert max_component_bound(basis_g1) == 2
        assert max_component_bound(basis_g2) == 5

    def test_bound_dominates_all_round_trips(self, basis_g2, graph_fam):
        bound = max_component_bound(basis_g2)
        for counts in [(0, 0, 3), (5, 4, 9), (2, 0, 30), (0, 10, 0)]:
            dec = decompose_over_basis(R(*counts), basis_g2)
            realized = realize_decomposition(dec, graph_fam, basis_g2)
            assert realized.max_component_size() <= bound


class TestRoundTripProperty:
    @settings(max_examples=60, deadline=None)
    @given(degs=st.lists(st.integers(min_value=0, max_value=2), max_size=14))
    def test_decompose_realize_restores_counts(self, basis_g2, graph_fam, degs):
        from degbasis import DegreeSequence, graph_is_member

        target = degree_to_regularity(DegreeSequence(tuple(degs)), 2)
        if not graph_is_member(target):
            return
        dec = decompose_over_basis(target, basis_g2)
        assert dec.reconstruct() == target
        realized = realize_decomposition(dec, graph_fam, basis_g2)
        assert degree_to_regularity(degree_sequence(realized.total), 2) == target
        assert realized.max_component_size() <= max_component_bound(basis_g2)
