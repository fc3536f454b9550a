from __future__ import annotations

import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from hypertrees import search
from hypertrees.constructions import edge_maximal_matching_tree, edge_minimal_grid, four_uniform_from_doubling
from hypertrees.core import Hypergraph, complete, star, tight_path
from hypertrees.designs import steiner_s23
from hypertrees.errors import Not2Hypertree
from hypertrees.stars import check_star_equation, decompose_stars

HOSTS = {
    "star5": star(5, 3),
    "star6k4": star(6, 4),
    "STS7": steiner_s23(7).blocks,
    "STS9": steiner_s23(9).blocks,
    "grid(k3,m2)": edge_minimal_grid(2, 3),
    "grid(k3,m4)": edge_minimal_grid(4, 3),
    "grid(k4,m3)": edge_minimal_grid(3, 4),
    "matching8": edge_maximal_matching_tree(8),
    "four-uniform(3)": four_uniform_from_doubling(3),
    "four-uniform(4)": four_uniform_from_doubling(4),
}


def test_single_star():
    D = decompose_stars(star(5, 3))
    assert D.profile == {3: 1} and D.stars[0].kernel == (1, 2)


def test_sts7_profile():
    D = decompose_stars(steiner_s23(7).blocks)
    assert D.profile == {1: 7} and D.uncovered == 0


def test_grid_weighted_count():
    assert decompose_stars(edge_minimal_grid(4, 3)).weighted_count == 48


def test_hand_count_star4():
    holds, ledger = check_star_equation(star(4, 3))
    assert holds
    assert (ledger.subsets, ledger.uncovered, ledger.star_count, ledger.weighted) == (6, 1, 1, 2)


def test_sts7_ledger():
    holds, ledger = check_star_equation(steiner_s23(7).blocks)
    assert holds and ledger.counting_rhs == 21 == 0 + 7 + 2 * 7
    assert "[OK]" in ledger.render()


@pytest.mark.parametrize("name", sorted(HOSTS))
def test_equation_on_known_two_hypertrees(name):
    H = HOSTS[name]
    holds, ledger = check_star_equation(H)
    assert holds, ledger.render()


@pytest.mark.parametrize("H", [tight_path(5, 3), complete(4, 3)])
def test_rejects_hosts_outside_scope(H):
    with pytest.raises(Not2Hypertree):
        decompose_stars(H)


def test_kernels_are_distinct_and_stars_partition_edges():
    for H in HOSTS.values():
        D = decompose_stars(H)
        kernels = [s.kernel for s in D.stars]
        assert len(set(kernels)) == len(kernels)
        assert sorted(e for s in D.stars for e in s.edges) == list(H.edges)
        for s in D.stars:
            assert all(set(s.kernel) <= set(e) for e in s.edges)


@given(st.data())
def test_random_star_unions(data):
    host = data.draw(st.sampled_from(sorted(HOSTS)))
    stars = decompose_stars(HOSTS[host]).stars
    picked = data.draw(st.lists(st.sampled_from(stars), min_size=1, max_size=3, unique=True))
    H = Hypergraph(HOSTS[host].k, HOSTS[host].n, tuple(e for s in picked for e in s.edges))
    holds, ledger = check_star_equation(H)
    assert holds, ledger.render()
    assert ledger.star_count == len(picked)


@given(st.integers(0, 10_000))
def test_uncovered_count_by_brute_force(seed):
    rng = random.Random(seed)
    stars = decompose_stars(HOSTS["grid(k3,m4)"]).stars
    picked = rng.sample(stars, rng.randint(1, 3))
    H = Hypergraph(3, 16, tuple(e for s in picked for e in s.edges))
    covered = {frozenset(p) for e in H.edges for p in ((e[0], e[1]), (e[0], e[2]), (e[1], e[2]))}
    assert decompose_stars(H).uncovered == comb(16, 2) - len(covered)
    assert search.find_semicycle(H) is None
