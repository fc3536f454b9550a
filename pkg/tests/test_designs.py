from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from hypertrees.constructions import perfect_matching
from hypertrees.core import Hypergraph, star
from hypertrees.designs import (
    Factorization,
    as_steiner_system,
    baranyai_factorization,
    doubling_sts,
    round_robin_one_factorization,
    steiner_s23,
    verify_design,
)
from hypertrees.errors import DomainError, InadmissibleOrder, NonDivisible, OddGroundSet, ResourceCap


def _pair_counts(blocks):
    return Counter(p for b in blocks for p in combinations(sorted(b), 2))


def _independent_factor_check(m, r, factors):
    """Re-derive validity without going through Factorization.check."""
    everything = list(combinations(range(1, m + 1), r))
    seen = [b for f in factors for b in f]
    return (
        len(factors) == comb(m - 1, r - 1)
        and sorted(seen) == everything
        and all(sorted(v for b in f for v in b) == list(range(1, m + 1)) for f in factors)
    )


class TestRoundRobin:
    def test_m2(self):
        assert round_robin_one_factorization(2).factors == (((1, 2),),)

    def test_m4(self):
        assert round_robin_one_factorization(4).factors == (
            ((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3)))

    @pytest.mark.parametrize("m", [6, 8, 10, 16])
    def test_valid(self, m):
        F = round_robin_one_factorization(m)
        assert not F.check() and _independent_factor_check(m, 2, F.factors)

    def test_odd(self):
        with pytest.raises(OddGroundSet):
            round_robin_one_factorization(5)


class TestBaranyai:
    def test_trivial(self):
        assert baranyai_factorization(3, 3).factors == (((1, 2, 3),),)

    def test_six_three(self):
        F = baranyai_factorization(6, 3)
        assert len(F.factors) == 10 and all(len(f) == 2 for f in F.factors)
        assert _independent_factor_check(6, 3, F.factors)

    @pytest.mark.parametrize("m", [4, 6, 8])
    def test_matches_round_robin_as_a_set_of_pairs(self, m):
        a, b = baranyai_factorization(m, 2), round_robin_one_factorization(m)
        assert len(a.factors) == len(b.factors)
        assert {p for f in a.factors for p in f} == {p for f in b.factors for p in f}

    @pytest.mark.parametrize("m,r", [(4, 1), (8, 4), (9, 3), (12, 3), (10, 5), (12, 4)])
    def test_valid(self, m, r):
        F = baranyai_factorization(m, r, max_blocks=500)
        assert _independent_factor_check(m, r, F.factors)

    def test_errors(self):
        with pytest.raises(NonDivisible):
            baranyai_factorization(7, 3)
        with pytest.raises(DomainError):
            baranyai_factorization(3, 4)
        with pytest.raises(ResourceCap):
            baranyai_factorization(15, 3)

    def test_checker_flags_broken_factorization(self):
        F = Factorization(4, 2, (((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 3), (2, 4))))
        assert F.check()


class TestDoubling:
    def test_sts3(self):
        assert doubling_sts(2).blocks.edges == ((1, 2, 3),)

    def test_sts7(self):
        S = doubling_sts(3)
        assert S.blocks.m == 7 and (1, 2, 3) in S.blocks.edge_set
        assert verify_design(S.blocks, 2, 1)

    @pytest.mark.parametrize("m,blocks", [(4, 35), (5, 155)])
    def test_larger(self, m, blocks):
        S = doubling_sts(m)
        assert S.blocks.m == blocks and set(_pair_counts(S.blocks.edges).values()) == {1}


class TestSteinerS23:
    @pytest.mark.parametrize("n", [3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33])
    def test_admissible(self, n):
        S = steiner_s23(n)
        counts = _pair_counts(S.blocks.edges)
        assert S.blocks.m == comb(n, 2) // 3
        assert len(counts) == comb(n, 2) and set(counts.values()) == {1}

    @pytest.mark.parametrize("n", [1, 2, 4, 5, 6, 8, 11])
    def test_inadmissible(self, n):
        with pytest.raises(InadmissibleOrder):
            steiner_s23(n)


class TestVerifyDesign:
    def test_matching_is_a_one_design(self):
        assert verify_design(perfect_matching(8), 1, 1)

    def test_star_is_not_a_design(self):
        assert not verify_design(star(4, 3), 2, 1)

    def test_as_steiner_system(self):
        H = steiner_s23(9).blocks
        assert as_steiner_system(H, 2).n == 9
        with pytest.raises(DomainError):
            as_steiner_system(star(5, 3), 2)


@given(st.lists(st.sampled_from(list(combinations(range(1, 7), 3))), unique=True, max_size=12))
def test_verify_design_matches_pair_count(edges):
    H = Hypergraph(3, 6, tuple(edges))
    counts = _pair_counts(edges)
    expected = len(counts) == 15 and set(counts.values()) == {1}
    assert verify_design(H, 2, 1) == expected
