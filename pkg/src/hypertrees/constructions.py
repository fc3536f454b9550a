"""Hypergraph families with closed-form edge counts.

Vertex layouts are fixed so outputs are reproducible:

* labelled partition: ground vertices 1..n, class labels appended as n+1..n+l;
* grid: vertex in row i, column j is ``(i-1)*m + j``;
* matching tree: vertex j of pair i is ``2(i-1) + j``;
* gluing: the base's vertex i lands on the i-th smallest point of the block.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .core import Hypergraph, tight_path
from .designs import SteinerSystem, baranyai_factorization, doubling_sts, verify_design
from .errors import (
    BadPermutation,
    BaseNotEdgeMinimal,
    BlockSizeMismatch,
    DivisibilityViolation,
    DomainError,
    NotAHypertree,
    OddOrder,
    TooSmall,
    UnsupportedLabelCount,
)
from .partition import build_partition, class_count
from .search import is_chain_connected, is_edge_minimal


class Family(str, enum.Enum):
    LABELLED_PARTITION = "labelled-partition"
    ORDERED_EXTENSION = "ordered-extension"
    FOUR_UNIFORM_DOUBLING = "four-uniform-doubling"
    EDGE_MINIMAL_GRID = "edge-minimal-grid"
    EDGE_MAXIMAL_MATCHING = "edge-maximal-matching"
    GLUING = "glue"


@dataclass(frozen=True)
class ConstructionSpec:
    family: Family
    params: dict = field(default_factory=dict)


# -- labelled partition hypertree ----------------------------------------------

def labelled_partition_hypertree(n: int, k: int) -> Hypergraph:
    """Label each partition class of the (k-1)-subsets of [n] with its own new vertex.

    The labels carry a tight path when there are at least k of them and no
    edges when there is a single label.
    """
    P = build_partition(n, k)
    l = P.count
    if l == 0:
        raise DomainError(f"no (k-1)-subsets of [{n}] for k={k}")
    if 1 < l < k:
        raise UnsupportedLabelCount(f"{l} labels cannot carry a {k}-uniform hypertree")
    edges = []
    for i, cls in enumerate(P.classes, start=1):
        edges.extend(s + (n + i,) for s in cls)
    if l >= k:
        edges.extend(tuple(n + q for q in e) for e in tight_path(l, k).edges)
    return Hypergraph(k, n + l, tuple(edges))


# -- ordered extension ---------------------------------------------------------

def ordered_extension(G: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Extend every block by each vertex that comes after all of its points in ``perm``."""
    n, k = G.n, G.k + 1
    if sorted(perm) != list(range(1, n + 1)):
        raise BadPermutation("perm is not a permutation of the vertex set")
    if not G.has_edge(perm[:k - 1]):
        raise BadPermutation(f"first {k - 1} vertices of perm do not form a block")
    pos = {v: i for i, v in enumerate(perm, start=1)}
    edges = []
    for f in G.edges:
        last = max(pos[v] for v in f)
        edges.extend(f + (perm[j - 1],) for j in range(last + 1, n + 1))
    return Hypergraph(k, n, tuple(edges))


def ordered_extension_count(G: Hypergraph, perm: Sequence[int]) -> int:
    """Sum over blocks of the number of vertices placed after the block."""
    pos = {v: i for i, v in enumerate(perm, start=1)}
    return sum(G.n - max(pos[v] for v in f) for f in G.edges)


@dataclass
class ExtensionReport:
    is_steiner: bool
    every_edge_has_kernel: bool
    no_mutual_extension: bool
    chain_connected: bool
    edge_without_kernel: tuple[int, ...] | None = None
    mutual_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def ok(self) -> bool:
        return self.is_steiner and self.every_edge_has_kernel and self.no_mutual_extension and self.chain_connected

    def lines(self) -> list[str]:
        out = [
            f"CHECK steiner-system {'PASS' if self.is_steiner else 'FAIL'}",
            f"CHECK extension {'PASS' if self.every_edge_has_kernel else 'FAIL'}",
            f"CHECK no-mutually-extended {'PASS' if self.no_mutual_extension else 'FAIL'}",
            f"CHECK chain-connected {'PASS' if self.chain_connected else 'FAIL'}",
        ]
        if self.edge_without_kernel:
            out.append(f"  edge without kernel: {self.edge_without_kernel}")
        if self.mutual_pair:
            out.append(f"  mutually extended: {self.mutual_pair[0]} {self.mutual_pair[1]}")
        return out


def mutually_extended_pair(G: Hypergraph, H: Hypergraph):
    """First pair of blocks f1, f2 with |f1 & f2| = k-3 whose cross-extensions are both edges."""
    k = H.k
    for f1, f2 in combinations(G.edges, 2):
        if len(set(f1) & set(f2)) != k - 3:
            continue
        for v1 in set(f1) - set(f2):
            for v2 in set(f2) - set(f1):
                if H.has_edge(f1 + (v2,)) and H.has_edge(f2 + (v1,)):
                    return f1, f2
    return None


def check_extension_premises(G: Hypergraph, H: Hypergraph) -> ExtensionReport:
    if G.n != H.n or G.k + 1 != H.k:
        raise DomainError("G must be (k-1)-uniform on the same vertex set as H")
    is_steiner = verify_design(G, G.k - 1, 1) if G.k >= 2 else False
    missing = next((e for e in H.edges if not any(G.has_edge(c) for c in combinations(e, G.k))), None)
    pair = mutually_extended_pair(G, H)
    return ExtensionReport(
        is_steiner=is_steiner,
        every_edge_has_kernel=missing is None,
        no_mutual_extension=pair is None,
        chain_connected=is_chain_connected(H).ok,
        edge_without_kernel=missing,
        mutual_pair=pair,
    )


def four_uniform_from_doubling(m: int) -> Hypergraph:
    if m < 3:
        raise DomainError(f"m must be >= 3, got {m}")
    S = doubling_sts(m)
    return ordered_extension(S.blocks, list(range(1, S.n + 1)))


def doubling_double_sum(m: int) -> int:
    n = 2 ** m - 1
    return sum(
        (i - 2 ** j) * (n - i)
        for j in range(1, m)
        for i in range(2 ** j, 2 ** (j + 1))
    )


# -- edge-minimal grid ---------------------------------------------------------

def edge_minimal_grid(m: int, k: int) -> Hypergraph:
    """Rows 1..l+1 of m vertices; row i sees its assigned (k-1)-set matching
    projected onto every later row."""
    if k < 3:
        raise DomainError(f"k must be >= 3, got {k}")
    if m < k - 1 or m % (k - 1):
        raise DivisibilityViolation(f"k-1 = {k - 1} must divide m = {m}")
    l = comb(m - 1, k - 2)
    matchings = baranyai_factorization(m, k - 1).factors
    assert len(matchings) == l

    def v(i, j):
        return (i - 1) * m + j

    edges = []
    for i in range(1, l + 1):
        for j in range(1, m + 1):
            for r in range(i + 1, l + 2):
                for T in matchings[i - 1]:
                    edges.append((v(i, j),) + tuple(v(r, s) for s in T))
    return Hypergraph(k, (l + 1) * m, tuple(edges))


def grid_edge_count(m: int, k: int) -> int:
    l = comb(m - 1, k - 2)
    return comb(l + 1, 2) * m * m // (k - 1)


def grid_edge_count_by_deficit(m: int, k: int) -> Fraction:
    """C(n,2)/(k-1) minus the (l+1)*C(m,2)/(k-1) pairs lost inside rows."""
    l = comb(m - 1, k - 2)
    n = (l + 1) * m
    return Fraction(comb(n, 2), k - 1) - Fraction((l + 1) * comb(m, 2), k - 1)


# -- edge-maximal matching tree ------------------------------------------------

def edge_maximal_matching_tree(n: int) -> Hypergraph:
    if n % 2:
        raise OddOrder(f"n must be even, got {n}")
    if n <= 2:
        raise TooSmall(f"n must exceed 2, got {n}")

    def v(i, j):
        return 2 * (i - 1) + j

    edges = [
        (v(i, j), v(q, 1), v(q, 2))
        for i in range(1, n // 2 + 1)
        for j in (1, 2)
        for q in range(1, i)
    ]
    return Hypergraph(3, n, tuple(edges))


def perfect_matching(n: int) -> Hypergraph:
    """The 1-(n,2,1) design {1,2}, {3,4}, ..."""
    return Hypergraph(2, n, tuple((2 * i - 1, 2 * i) for i in range(1, n // 2 + 1)))


# -- gluing ----------------------------------------------------------------------

def glue(base: Hypergraph, steiner: SteinerSystem, check_base: bool = True) -> Hypergraph:
    """Place a copy of ``base`` on every block of an S(2, l, n)."""
    l = steiner.k
    if steiner.t != 2:
        raise DomainError("gluing needs an S(2, l, n) Steiner system")
    if base.n != l:
        raise BlockSizeMismatch(f"base has {base.n} vertices, blocks have {l}")
    if base.k < 3:
        raise DomainError("gluing needs k >= 3")
    if check_base:
        try:
            if not is_edge_minimal(base).ok:
                raise BaseNotEdgeMinimal("base hypertree has a removable edge")
        except NotAHypertree as exc:
            raise BaseNotEdgeMinimal(f"base is not a hypertree: {exc}") from exc
    edges = []
    for block in steiner.blocks.edges:
        edges.extend(tuple(block[x - 1] for x in e) for e in base.edges)
    return Hypergraph(base.k, steiner.n, tuple(edges))


def edge_ratio(H: Hypergraph) -> Fraction:
    return Fraction(H.m, comb(H.n, 2))


def copies_are_separated(glued: Hypergraph, steiner: SteinerSystem) -> bool:
    """Edges sharing k-1 vertices always come from the same block's copy."""
    block_of = {}
    for b in steiner.blocks.edges:
        for pair in combinations(b, 2):
            block_of[pair] = b
    owner = {e: block_of[e[:2]] for e in glued.edges}
    for kernel, ws in glued.completions.items():
        blocks = {owner[tuple(sorted(kernel | {w}))] for w in ws}
        if len(blocks) > 1:
            return False
    return True


# -- closed forms ----------------------------------------------------------------

def predicted_edge_count(spec: ConstructionSpec) -> int:
    p = spec.params
    f = Family(spec.family)
    if f is Family.LABELLED_PARTITION:
        n, k = p["n"], p["k"]
        l = class_count(n, k - 1)
        return comb(n, k - 1) + (l - k + 1 if l >= k else 0)
    if f is Family.ORDERED_EXTENSION:
        return ordered_extension_count(p["G"], p["perm"])
    if f is Family.FOUR_UNIFORM_DOUBLING:
        return doubling_double_sum(p["m"])
    if f is Family.EDGE_MINIMAL_GRID:
        return grid_edge_count(p["m"], p["k"])
    if f is Family.EDGE_MAXIMAL_MATCHING:
        n = p["n"]
        return n * (n - 2) // 4
    if f is Family.GLUING:
        base, steiner = p["base"], p["steiner"]
        value = edge_ratio(base) * comb(steiner.n, 2)
        assert value.denominator == 1
        return int(value)
    raise DomainError(f"unknown family {spec.family!r}")


def build(spec: ConstructionSpec) -> Hypergraph:
    p = spec.params
    f = Family(spec.family)
    if f is Family.LABELLED_PARTITION:
        return labelled_partition_hypertree(p["n"], p["k"])
    if f is Family.ORDERED_EXTENSION:
        return ordered_extension(p["G"], p["perm"])
    if f is Family.FOUR_UNIFORM_DOUBLING:
        return four_uniform_from_doubling(p["m"])
    if f is Family.EDGE_MINIMAL_GRID:
        return edge_minimal_grid(p["m"], p["k"])
    if f is Family.EDGE_MAXIMAL_MATCHING:
        return edge_maximal_matching_tree(p["n"])
    if f is Family.GLUING:
        return glue(p["base"], p["steiner"])
    raise DomainError(f"unknown family {spec.family!r}")
