"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that the terminal summary prints under
"acceptance criteria".
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations
from math import comb

from hypertrees import search
from hypertrees.bounds import evaluate_bound
from hypertrees.constructions import (
    doubling_double_sum,
    edge_maximal_matching_tree,
    edge_minimal_grid,
    edge_ratio,
    four_uniform_from_doubling,
    glue,
    labelled_partition_hypertree,
)
from hypertrees.core import Hypergraph, tight_path, windows
from hypertrees.designs import (
    baranyai_factorization,
    doubling_sts,
    round_robin_one_factorization,
    steiner_s23,
    verify_design,
)
from hypertrees.partition import build_partition, count_bound, verify_partition
from hypertrees.stars import check_star_equation, decompose_stars


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_partition_validity(record):
    def run():
        counts, ok = {}, True
        for k, n in [(3, 4), (3, 8), (3, 16), (4, 8), (4, 16)]:
            P = build_partition(n, k)
            ok &= verify_partition(P, k).ok and P.count <= count_bound(n, k)
            counts[(k, n)] = P.count
        return ok and counts[(3, 4)] == 2 and counts[(3, 8)] == 3, counts

    (ok, counts), dt = _timed(run)
    record("1 partition-validity", ok and dt < 10, f"counts={counts} {dt:.2f}s")


def test_labelled_partition_instance(record):
    def run():
        H = labelled_partition_hypertree(8, 3)
        chains = search.oracle_enumerate(H, "chains", H.k + 1)
        common = all(set.intersection(*map(set, windows(c, H.k))) for c in chains)
        return H, search.is_hypertree(H).ok, search.max_chain_length(H, semicycle_free=True), common

    (H, tree, longest, common), dt = _timed(run)
    ok = H.n == 11 and H.m == 29 and tree and longest <= 3 and common and dt < 30
    record("2 labelled-partition-hypertree", ok, f"n={H.n} m={H.m} longest={longest} {dt:.2f}s")


def _random_star_unions(count: int, seed: int = 0) -> list[Hypergraph]:
    """Unions of up to three maximal stars taken from known 2-hypertrees."""
    hosts = [
        edge_minimal_grid(4, 3),
        edge_maximal_matching_tree(8),
        four_uniform_from_doubling(3),
        steiner_s23(9).blocks,
    ]
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        host = rng.choice(hosts)
        stars = decompose_stars(host).stars
        picked = rng.sample(stars, rng.randint(1, min(3, len(stars))))
        out.append(Hypergraph(host.k, host.n, tuple(e for s in picked for e in s.edges)))
    return out


def test_star_equation(record):
    named = {
        "grid(k3,m2)": edge_minimal_grid(2, 3),
        "grid(k3,m4)": edge_minimal_grid(4, 3),
        "matching4": edge_maximal_matching_tree(4),
        "matching6": edge_maximal_matching_tree(6),
        "matching8": edge_maximal_matching_tree(8),
        "four-uniform(3)": four_uniform_from_doubling(3),
        "STS7": steiner_s23(7).blocks,
        "STS9": steiner_s23(9).blocks,
    }
    failures = [name for name, H in named.items() if not check_star_equation(H)[0]]
    for i, H in enumerate(_random_star_unions(50)):
        if not check_star_equation(H)[0]:
            failures.append(f"union#{i}")
    record("3 star-equation", not failures, f"{len(named)} named + 50 unions, failures={failures}")


def test_edge_minimal_grid_instance(record):
    def run():
        H = edge_minimal_grid(4, 3)
        return (
            H,
            search.is_hypertree(H).ok,
            search.max_chain_length(H, cap=2, semicycle_free=True),
            search.is_edge_minimal(H).ok,
        )

    (H, tree, longest, minimal), dt = _timed(run)
    refined = evaluate_bound("two_hypertree_refined", 16, 3)
    l_upper = evaluate_bound("l_hypertree_upper", 16, 3, 2)
    conj = evaluate_bound("conjectured_minimal_upper", 16, 3)
    chain_ok = H.m == 48 == comb(4, 2) * 16 // 2 and H.n == 16
    order_ok = H.m <= refined <= l_upper <= conj and (refined, l_upper, conj) == (58, 60, 60)
    ok = chain_ok and tree and longest <= 2 and minimal and order_ok and dt < 300
    record("4 edge-minimal-grid", ok, f"m={H.m} <= {refined} <= {l_upper} <= {conj} {dt:.2f}s")


def test_doubling_instances(record):
    ratios, ok, detail = [], True, []
    for m, blocks, edges in [(3, 7, 8), (4, 35, 120)]:
        S = doubling_sts(m)
        H = four_uniform_from_doubling(m)
        ok &= verify_design(S.blocks, 2, 1) and S.blocks.m == blocks
        ok &= H.m == edges == doubling_double_sum(m)
        ok &= search.is_hypertree(H).ok and search.max_chain_length(H, cap=2, semicycle_free=True) <= 2
        ratios.append(Fraction(H.m, comb(H.n, 3)))
        detail.append(f"m={m}:{H.m}")
    ok &= ratios == [Fraction(8, 35), Fraction(120, 455)] and ratios[0] < ratios[1] < Fraction(2, 7)
    record("5 doubling-four-uniform", ok, f"{' '.join(detail)} ratios={[str(r) for r in ratios]}")


def test_matching_tree_instances(record):
    def run():
        rows = []
        for n in (4, 6, 8):
            H = edge_maximal_matching_tree(n)
            lower = evaluate_bound("edge_maximal_lower", n, 3)
            rows.append((n, H.m, search.is_hypertree(H).ok, search.is_edge_maximal(H).ok, H.m >= lower))
        return rows

    rows, dt = _timed(run)
    ok = [r[1] for r in rows] == [2, 6, 12] and all(all(r[2:]) for r in rows) and dt < 60
    record("6 edge-maximal-matching", ok, f"edges={[r[1] for r in rows]} {dt:.2f}s")


def test_tight_path_is_edge_minimal(record):
    H = tight_path(9, 3)
    ok = H.m == 7 == evaluate_bound("chain_lower", 9, 3) and search.is_edge_minimal(H).ok
    record("7 tight-path-tightness", ok, f"m={H.m}")


def test_gluing(record):
    base = Hypergraph(3, 3, ((1, 2, 3),))
    out = []
    for n, edges in [(7, 7), (9, 12)]:
        G = glue(base, steiner_s23(n))
        out.append(G.m == edges and edge_ratio(G) == Fraction(1, 3) and search.is_edge_minimal(G).ok)
    record("8 gluing", all(out), f"per-instance={out}")


def test_oracle_equivalence(record):
    def run():
        rng = random.Random(0)
        bad = 0
        for _ in range(200):
            n = rng.randint(3, 7)
            pool = list(combinations(range(1, n + 1), 3))
            H = Hypergraph(3, n, tuple(rng.sample(pool, min(rng.randint(0, 10), len(pool)))))
            bad += bool(search.oracle_mismatches(H))
        return bad

    bad, dt = _timed(run)
    record("9 oracle-equivalence", bad == 0 and dt < 300, f"200 instances, mismatches={bad} {dt:.2f}s")


def test_steiner_systems_are_hypertrees(record):
    out = []
    for n, edges in [(7, 7), (9, 12)]:
        H = steiner_s23(n).blocks
        out.append(
            H.m == edges == comb(n, 2) // 3
            and search.is_hypertree(H).ok
            and search.max_chain_length(H, semicycle_free=True) == 1
        )
    record("10 steiner-hypertrees", all(out), f"per-instance={out}")


def test_baranyai(record):
    F = baranyai_factorization(6, 3)
    triples = [b for f in F.factors for b in f]
    ok = len(F.factors) == 10 and all(len(f) == 2 for f in F.factors)
    ok &= all(sorted(x for b in f for x in b) == list(range(1, 7)) for f in F.factors)
    ok &= sorted(triples) == list(combinations(range(1, 7), 3))
    for m in (4, 6, 8):
        a, b = baranyai_factorization(m, 2), round_robin_one_factorization(m)
        ok &= not a.check() and not b.check()
        ok &= sorted(p for f in a.factors for p in f) == sorted(p for f in b.factors for p in f)
        ok &= len(a.factors) == len(b.factors) == m - 1
    record("11 baranyai", ok, f"factors={len(F.factors)}")
