from __future__ import annotations

import random

import pytest

from semilat import (
    ChainLengthMismatchError,
    Poset,
    ProjectivityRelation,
    SizeLimitError,
    all_consistent_permutations,
    boolean_lattice,
    check_theorem,
    count_consistent_permutations,
    interval_updown_witness,
    jh_match,
    maximal_chains,
    named_counterexample,
    partition_lattice,
    projectivity_relation,
    random_maximal_chain,
    updown_projective,
)

B2 = Poset.from_cover_list(
    "b2", ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
B3 = boolean_lattice(3)

B2_A = ["0", "a", "1"]
B2_B = ["0", "b", "1"]
B3_A = ["000", "100", "110", "111"]
B3_B = ["000", "010", "110", "111"]


class TestRelation:
    def test_b2_matrix(self):
        rel = projectivity_relation(B2, B2_A, B2_B)
        assert rel.related == ((False, True), (True, False))
        assert rel.witnesses[0][1] == ("b", "1")
        assert rel.witnesses[1][0] == ("a", "1")

    def test_b3_cells(self):
        rel = projectivity_relation(B3, B3_A, B3_B)
        assert rel.related[0][0] is False
        assert rel.related[0][1] is True
        assert rel.related[2][2] is True

    def test_identity_chain_diagonal(self, small_corpus):
        for p in small_corpus[:10]:
            chain = random_maximal_chain(p, seed=1)
            rel = projectivity_relation(p, chain, chain)
            assert all(rel.related[i][i] for i in range(rel.n)), p.name

    def test_length_mismatch(self):
        with pytest.raises(ChainLengthMismatchError):
            projectivity_relation(B3, B3_A, ["000", "100", "111"])

    def test_agrees_with_witness_search(self, small_corpus):
        # The dumb pairwise scan and the directed search must coincide, both
        # in existence and in the identity of the first witness.
        for p in small_corpus[:8]:
            covers = p.cover_pairs()
            for src in covers:
                for tgt in covers:
                    brute = interval_updown_witness(p, src, tgt)
                    direct = updown_projective(p, src, tgt)
                    if brute is None:
                        assert direct is None, (p.name, src, tgt)
                    else:
                        assert direct is not None and tuple(direct) == brute

    def test_cache_reuse_is_transparent(self):
        cache: dict = {}
        with_cache = projectivity_relation(B3, B3_A, B3_B, cache=cache)
        again = projectivity_relation(B3, B3_A, B3_B, cache=cache)
        plain = projectivity_relation(B3, B3_A, B3_B)
        assert with_cache == again == plain
        assert cache


class TestPermutationEnumeration:
    def test_b2_unique(self):
        rel = projectivity_relation(B2, B2_A, B2_B)
        assert all_consistent_permutations(rel) == [(2, 1)]

    def test_empty_relation(self):
        rel = ProjectivityRelation(
            2, ((False, False), (False, False)),
            ((None, None), (None, None)))
        assert all_consistent_permutations(rel) == []
        assert count_consistent_permutations(rel) == 0

    def test_counting_matches_enumeration(self):
        rng = random.Random(42)
        for _ in range(50):
            n = rng.randrange(1, 7)
            rows = tuple(tuple(rng.random() < 0.5 for _ in range(n)) for _ in range(n))
            rel = ProjectivityRelation(n, rows, tuple((None,) * n for _ in range(n)))
            assert len(all_consistent_permutations(rel)) == \
                count_consistent_permutations(rel)

    def test_size_guards(self):
        big = ProjectivityRelation(9, tuple((True,) * 9 for _ in range(9)),
                                   tuple((None,) * 9 for _ in range(9)))
        with pytest.raises(SizeLimitError):
            all_consistent_permutations(big)
        huge = ProjectivityRelation(21, tuple((True,) * 21 for _ in range(21)),
                                    tuple((None,) * 21 for _ in range(21)))
        with pytest.raises(SizeLimitError):
            count_consistent_permutations(huge)


class TestCheckTheorem:
    def test_b3_instance_passes(self):
        report = check_theorem(B3, B3_A, B3_B)
        assert report.ok
        assert [e.name for e in report.entries] == [
            "preconditions", "equal-length", "unique-permutation", "maximality"]

    def test_pi4_sampled_pairs(self):
        pi4 = partition_lattice(4)
        cache: dict = {}
        rng = random.Random(0)
        chains = maximal_chains(pi4)
        for _ in range(50):
            a = chains[rng.randrange(len(chains))]
            b = chains[rng.randrange(len(chains))]
            assert check_theorem(pi4, a, b, cache=cache).ok

    def test_n5_reported_not_raised(self):
        n5 = named_counterexample("n5")
        report = check_theorem(n5, ["0", "b", "1"], ["0", "a", "c", "1"])
        assert not report.ok
        assert not report.entry("preconditions").passed
        assert "not semimodular" in report.entry("preconditions").detail
        assert not report.entry("equal-length").passed
        assert "2 and 3" in report.entry("equal-length").detail

    def test_jh_witness_lies_in_relation_support(self, small_corpus):
        for p in small_corpus[:8]:
            chains = maximal_chains(p, limit=4)
            for C in chains:
                for D in chains:
                    rel = projectivity_relation(p, C, D)
                    result = jh_match(p, C, D)
                    for i in range(1, result.n + 1):
                        assert rel.related[i - 1][result.pi[i - 1] - 1], \
                            (p.name, list(C), list(D), i)
