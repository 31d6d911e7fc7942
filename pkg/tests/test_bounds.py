import random

import pytest

from sfnfa.automata import alphabet, empty_nfa, lambda_nfa, make_nfa
from sfnfa.bounds import (
    FoolingFamily,
    FoolingSet,
    LowerBoundKind,
    Operation,
    certify,
    nsc_exhaustive,
    paper_fooling_set,
    search_fooling_set,
    verify_fooling_set,
)
from sfnfa.constructions import concat_sf, intersect_sf, reverse_nfa, star_sf, union_sf
from sfnfa.errors import BudgetExceeded, ParameterOutOfRange
from sfnfa.witnesses import Family, WitnessSpec, build


class TestVerifyFoolingSet:
    def test_lemma_l1_m3(self):
        w = build(WitnessSpec(Family.LEMMA_L1, 3))
        fs = FoolingSet((("", "b"), ("b", "aa"), ("ba", "a")))
        assert verify_fooling_set(w, fs)

    def test_duplicate_pair_fails(self):
        w = build(WitnessSpec(Family.LEMMA_L1, 3))
        assert not verify_fooling_set(w, FoolingSet((("", "b"), ("", "b"))))

    def test_non_member_product_fails(self):
        w = build(WitnessSpec(Family.LEMMA_L1, 3))
        assert not verify_fooling_set(w, FoolingSet((("", "ba"),)))

    def test_union_proof_set(self):
        left, right = build(WitnessSpec(Family.UNION_PAIR, 3, 3))
        u = union_sf(left, right)
        fs = FoolingSet(
            (("", "baa"), ("b", "aa"), ("ba", "a"), ("a", "bb"), ("ab", "b"))
        )
        assert verify_fooling_set(u, fs)


class TestPaperFoolingSet:
    def test_catenation_m3_n3(self):
        fs = paper_fooling_set(FoolingFamily.CATENATION, 3, 3)
        assert fs.pairs == (
            ("", "aaaa"), ("a", "aaa"), ("aa", "aa"), ("aaa", "a"), ("aaaa", ""),
        )

    def test_intersection_m2_n2(self):
        fs = paper_fooling_set(FoolingFamily.INTERSECTION, 2, 2)
        assert fs.pairs == (("", "c"), ("cab", ""))

    def test_star_m4(self):
        fs = paper_fooling_set(FoolingFamily.STAR, 4)
        assert fs.pairs == (("", "b"), ("b", "aaa"), ("ba", "aa"), ("baa", "a"))

    def test_cardinalities(self):
        assert len(paper_fooling_set(FoolingFamily.LEMMA_L1, 5)) == 5
        assert len(paper_fooling_set(FoolingFamily.LEMMA_L2, 5)) == 5
        assert len(paper_fooling_set(FoolingFamily.UNION, 4, 3)) == 6
        assert len(paper_fooling_set(FoolingFamily.CATENATION, 4, 5)) == 8
        assert len(paper_fooling_set(FoolingFamily.INTERSECTION, 4, 3)) == 7
        assert len(paper_fooling_set(FoolingFamily.STAR, 6)) == 6

    def test_out_of_range(self):
        with pytest.raises(ParameterOutOfRange):
            paper_fooling_set(FoolingFamily.LEMMA_L2, 2)
        with pytest.raises(ParameterOutOfRange):
            paper_fooling_set(FoolingFamily.UNION, 2)

    def test_all_families_verify_on_constructions_up_to_6(self):
        for m in range(2, 7):
            for n in range(2, 7):
                left, right = build(WitnessSpec(Family.UNION_PAIR, m, n))
                assert verify_fooling_set(
                    union_sf(left, right), paper_fooling_set(FoolingFamily.UNION, m, n)
                )
                left, right = build(WitnessSpec(Family.CONCAT_PAIR, m, n))
                assert verify_fooling_set(
                    concat_sf(left, right),
                    paper_fooling_set(FoolingFamily.CATENATION, m, n),
                )
                left, right = build(WitnessSpec(Family.INTERSECT_PAIR, m, n))
                assert verify_fooling_set(
                    intersect_sf(left, right),
                    paper_fooling_set(FoolingFamily.INTERSECTION, m, n),
                )
        for m in range(2, 7):
            assert verify_fooling_set(
                star_sf(build(WitnessSpec(Family.STAR, m))),
                paper_fooling_set(FoolingFamily.STAR, m),
            )


class TestSearchFoolingSet:
    def test_finds_certificate_for_lemma_l1(self):
        w = build(WitnessSpec(Family.LEMMA_L1, 3))
        fs = search_fooling_set(w, max_word_len=4, target_size=3)
        assert fs is not None and len(fs) >= 3
        assert verify_fooling_set(w, fs)

    def test_lambda_language_has_no_two_set(self):
        assert search_fooling_set(lambda_nfa(alphabet("ab")), 4, 2) is None

    def test_reversed_reversal_witness(self):
        w = build(WitnessSpec(Family.REVERSAL, 4))
        rev = reverse_nfa(w)
        fs = search_fooling_set(rev, max_word_len=8, target_size=4)
        assert fs is not None and len(fs) >= 4
        assert verify_fooling_set(rev, fs)

    def test_deterministic_for_fixed_seed(self):
        w = build(WitnessSpec(Family.REVERSAL, 5))
        rev = reverse_nfa(w)
        a = search_fooling_set(rev, 8, 5, seed=0)
        b = search_fooling_set(rev, 8, 5, seed=0)
        assert a == b


class TestNscExhaustive:
    def test_ba_star_needs_two_states(self):
        w = build(WitnessSpec(Family.LEMMA_L1, 2))  # b a*
        assert nsc_exhaustive(w, 2) == 2

    def test_lambda_language(self):
        assert nsc_exhaustive(lambda_nfa(alphabet("ab")), 2) == 1

    def test_empty_language(self):
        assert nsc_exhaustive(empty_nfa(alphabet("ab")), 2) == 1

    def test_lemma_l1_m3_matches_certificate(self):
        w = build(WitnessSpec(Family.LEMMA_L1, 3))
        assert nsc_exhaustive(w, 3) == len(paper_fooling_set(FoolingFamily.LEMMA_L1, 3))

    def test_ceiling_enforced(self):
        with pytest.raises(BudgetExceeded):
            nsc_exhaustive(build(WitnessSpec(Family.LEMMA_L1, 3)), 4)
        with pytest.raises(BudgetExceeded):
            nsc_exhaustive(build(WitnessSpec(Family.INTERSECT_PAIR, 2, 2))[0], 3)

    def test_monotone_in_ceiling(self):
        w = build(WitnessSpec(Family.LEMMA_L1, 2))
        assert nsc_exhaustive(w, 2) == nsc_exhaustive(w, 3) == 2

    def test_never_below_verified_fooling_set(self):
        rng = random.Random(31)
        from conftest import random_non_returning_nfa

        for _ in range(10):
            a = random_non_returning_nfa(rng, max_states=3)
            fs = search_fooling_set(a, max_word_len=4, target_size=1)
            k = nsc_exhaustive(a, 3)
            if fs is not None and k is not None:
                assert k >= len(fs)


class TestCertify:
    def test_union_4_3(self):
        r = certify(Operation.UNION, 4, 3)
        assert (r.constructed_size, r.lower_bound, r.formula_value) == (6, 6, 6)
        assert r.tight

    def test_intersection_3_4(self):
        r = certify(Operation.INTERSECTION, 3, 4)
        assert (r.constructed_size, r.lower_bound, r.formula_value) == (7, 7, 7)
        assert r.tight

    def test_star_5(self):
        r = certify(Operation.STAR, 5)
        assert r.tight and r.constructed_size == r.lower_bound == 5

    def test_reversal_report_shape(self):
        r = certify(Operation.REVERSAL, 4)
        assert r.constructed_size == 5
        assert r.lower_bound >= 4
        assert r.lower_bound_kind is LowerBoundKind.FOOLING_SET
        assert not r.tight and r.note

    def test_complement_report_shape(self):
        r = certify(Operation.COMPLEMENTATION, 3)
        assert r.constructed_size <= 5
        assert r.lower_bound_kind is LowerBoundKind.NONE

    def test_report_invariant_lower_le_constructed(self):
        for op, args in [
            (Operation.UNION, (2, 5)),
            (Operation.CATENATION, (5, 2)),
            (Operation.INTERSECTION, (4, 4)),
            (Operation.STAR, (6, None)),
            (Operation.REVERSAL, (5, None)),
            (Operation.COMPLEMENTATION, (4, None)),
        ]:
            r = certify(op, *args)
            assert r.lower_bound <= r.constructed_size
            if r.fooling_set is not None:
                assert len(r.fooling_set) == r.lower_bound
