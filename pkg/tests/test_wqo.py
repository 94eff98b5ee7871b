import pytest
from hypothesis import given, settings, strategies as st

from degbasis import (
    CapMismatch,
    Comparison,
    DegreeSequence,
    Graph,
    MultiplicityVector,
    RegularitySequence,
    SearchLimitExceeded,
    degree_to_regularity,
    enumerate_realizations,
    find_comparable_pair,
    multiplicity_vector,
    multiplicity_witness,
    pointwise_compare,
    rao_leq_bruteforce,
    regularity_to_degree,
)


def R(*counts):
    return RegularitySequence(len(counts) - 1, tuple(counts))


class TestPointwiseCompare:
    def test_equal(self):
        assert pointwise_compare(R(0, 2), R(0, 2)) is Comparison.EQUAL

    def test_less_or_equal(self):
        assert pointwise_compare(R(0, 0, 0, 4), R(0, 0, 0, 6)) is Comparison.LESS_OR_EQUAL

    def test_greater_or_equal(self):
        assert pointwise_compare(R(3, 4), R(1, 2)) is Comparison.GREATER_OR_EQUAL

    def test_incomparable(self):
        assert pointwise_compare(R(1, 0), R(0, 2)) is Comparison.INCOMPARABLE

    def test_cap_mismatch(self):
        with pytest.raises(CapMismatch):
            pointwise_compare(R(0, 2), R(0, 2, 0))

    def test_serialized_values(self):
        assert Comparison.LESS_OR_EQUAL.value == "less-or-equal"
        assert Comparison.INCOMPARABLE.value == "incomparable"


class TestEnumerateRealizations:
    def test_triangle_has_one_realization(self):
        got = list(enumerate_realizations(DegreeSequence((2, 2, 2))))
        assert got == [Graph(3, frozenset({(0, 1), (0, 2), (1, 2)}))]

    def test_cubic_on_six_vertices_has_70_labelings(self):
        got = list(enumerate_realizations(DegreeSequence((3,) * 6)))
        assert len(got) == 70

    def test_non_graphic_yields_nothing(self):
        assert list(enumerate_realizations(DegreeSequence((1,)))) == []
        assert list(enumerate_realizations(DegreeSequence((3, 1, 1)))) == []

    def test_empty_sequence_has_the_empty_realization(self):
        assert list(enumerate_realizations(DegreeSequence(()))) == [Graph(0, frozenset())]

    def test_budget_exhaustion_raises(self):
        with pytest.raises(SearchLimitExceeded):
            list(enumerate_realizations(DegreeSequence((3,) * 8), budget=10))

    def test_every_realization_has_the_requested_degrees(self):
        D = DegreeSequence((3, 2, 2, 2, 1))
        for g in enumerate_realizations(D):
            assert tuple(sorted(g.degrees(), reverse=True)) == D.degrees


class TestRaoBruteforce:
    def test_edge_embeds_into_path(self):
        verdict = rao_leq_bruteforce(DegreeSequence((1, 1)), DegreeSequence((2, 1, 1)))
        assert verdict.result is True
        w = verdict.witness
        assert w.embedding.validate(w.pattern, w.host)

    def test_reflexive(self):
        D = DegreeSequence((2, 2, 1, 1))
        assert rao_leq_bruteforce(D, D).result is True

    def test_longer_pattern_never_fits(self):
        assert rao_leq_bruteforce(DegreeSequence((1, 1, 0)), DegreeSequence((1, 1))).result is False

    def test_pointwise_dominated_pair_can_still_fail(self):
        verdict = rao_leq_bruteforce(DegreeSequence((3,) * 4), DegreeSequence((3,) * 6))
        assert verdict.result is False
        assert verdict.witness is None

    def test_budget_exceeded_is_neither_true_nor_false(self):
        verdict = rao_leq_bruteforce(
            DegreeSequence((3,) * 8), DegreeSequence((3,) * 10), budget=50
        )
        assert verdict.result is None
        assert verdict.budget_exceeded
        assert verdict.to_json()["result"] == "budget-exceeded"

    def test_verdict_json(self):
        verdict = rao_leq_bruteforce(DegreeSequence(()), DegreeSequence((0,)))
        obj = verdict.to_json()
        assert obj["relation"] == "rao-leq"
        assert obj["result"] is True

    def test_adding_isolated_vertices_preserves_order(self):
        base = DegreeSequence((2, 2, 2))
        padded = DegreeSequence((2, 2, 2, 0, 0))
        assert rao_leq_bruteforce(base, padded).result is True

    @settings(max_examples=15, deadline=None)
    @given(
        degs=st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=4),
        pad=st.integers(min_value=0, max_value=2),
    )
    def test_ground_padding_is_always_above(self, degs, pad):
        from degbasis.testkit import bruteforce_is_graphic

        D = DegreeSequence(tuple(degs))
        if not bruteforce_is_graphic(D):
            return
        padded = DegreeSequence(tuple(degs) + (0,) * pad)
        verdict = rao_leq_bruteforce(D, padded)
        assert verdict.result is True


class TestMultiplicityVector:
    def test_frozen_counts_for_known_member(self, basis_g1):
        v = multiplicity_vector(R(3, 4), basis_g1)
        assert v.counts == (3, 2)
        assert v.reconstruct() == R(3, 4)

    def test_zero_maps_to_zero_vector(self, basis_g1):
        v = multiplicity_vector(R(0, 0), basis_g1)
        assert v.counts == (0, 0)
        assert v.reconstruct() == R(0, 0)

    def test_pointwise_le(self, basis_g1):
        small = multiplicity_vector(R(1, 2), basis_g1)
        big = multiplicity_vector(R(3, 4), basis_g1)
        assert small.counts == (1, 1)
        assert small.pointwise_le(big)
        assert not big.pointwise_le(small)

    def test_vectors_over_different_bases_do_not_compare(self, basis_g1, basis_g2):
        a = multiplicity_vector(R(1, 0), basis_g1)
        b = multiplicity_vector(R(1, 0, 0), basis_g2)
        with pytest.raises(CapMismatch):
            a.pointwise_le(b)

    def test_json(self, basis_g1):
        obj = multiplicity_vector(R(3, 4), basis_g1).to_json()
        assert obj["counts"] == [3, 2]
        assert obj["elements"] == [[1, 0], [0, 2]]

    @settings(max_examples=50, deadline=None)
    @given(degs=st.lists(st.integers(min_value=0, max_value=2), max_size=12))
    def test_reconstruction_identity(self, basis_g2, degs):
        from degbasis import graph_is_member

        target = degree_to_regularity(DegreeSequence(tuple(degs)), 2)
        if not graph_is_member(target):
            return
        assert multiplicity_vector(target, basis_g2).reconstruct() == target


class TestMultiplicityWitness:
    def test_dominated_pair_yields_valid_embedding(self, basis_g1):
        w = multiplicity_witness(R(1, 2), R(3, 4), basis_g1)
        assert w is not None
        assert w.kind == "multiplicity"
        assert w.embedding.validate(w.pattern, w.host)
        assert degree_to_regularity(DegreeSequence(
            tuple(sorted(w.pattern.degrees(), reverse=True))), 1) == R(1, 2)
        assert degree_to_regularity(DegreeSequence(
            tuple(sorted(w.host.degrees(), reverse=True))), 1) == R(3, 4)

    def test_non_dominated_pair_yields_none(self, basis_g1):
        assert multiplicity_witness(R(3, 4), R(1, 2), basis_g1) is None

    def test_witness_order_agrees_with_bruteforce(self, basis_g2):
        w = multiplicity_witness(R(0, 2, 1), R(0, 4, 1), basis_g2)
        assert w is not None
        d1 = regularity_to_degree(R(0, 2, 1))
        d2 = regularity_to_degree(R(0, 4, 1))
        assert rao_leq_bruteforce(d1, d2).result is True

    def test_base_switch_makes_vectors_incomparable(self, basis_g2):
        # (0,2,4) decomposes over base (0,0,4), not (0,2,1), so the
        # vectors do not dominate even though the counts do
        assert multiplicity_witness(R(0, 2, 1), R(0, 2, 4), basis_g2) is None


class TestFindComparablePair:
    def test_first_dominating_pair_by_late_then_early_index(self):
        seqs = [R(2, 1), R(0, 2), R(2, 2)]
        assert find_comparable_pair(seqs) == (1, 3)

    def test_no_pair_in_antichain(self):
        assert find_comparable_pair([R(1, 0), R(0, 2)], antichain_check=True) is None

    def test_antichain_check_sees_both_directions(self):
        assert find_comparable_pair([R(1, 2), R(0, 2)], antichain_check=True) == (1, 2)
        assert find_comparable_pair([R(1, 2), R(0, 2)]) is None

    def test_cap_mismatch(self):
        with pytest.raises(CapMismatch):
            find_comparable_pair([R(1, 0), R(1, 0, 0)])

    def test_empty_and_singleton_streams(self):
        assert find_comparable_pair([]) is None
        assert find_comparable_pair([R(1, 1)]) is None
