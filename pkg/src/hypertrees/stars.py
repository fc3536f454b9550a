"""Maximal-star decomposition of 2-hypertrees and the star-equation audit."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import networkx as nx

from .core import Edge, Hypergraph
from .errors import DecompositionAnomaly, Not2Hypertree
from .search import find_semicycle, max_chain_length


@dataclass(frozen=True)
class Star:
    kernel: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class StarDecomposition:
    k: int
    n: int
    stars: tuple[Star, ...]
    profile: dict[int, int]
    uncovered: int

    @property
    def star_count(self) -> int:
        return sum(self.profile.values())

    @property
    def weighted_count(self) -> int:
        return sum(i * c for i, c in self.profile.items())


def decompose_stars(H: Hypergraph, check: bool = True) -> StarDecomposition:
    """Group edges into maximal stars.

    Edges are linked when they share k-1 vertices; in a hypergraph without
    semicycles and without 3-edge chains each linked component is a star.
    A single-edge star takes its lexicographically smallest (k-1)-subset as
    kernel. Connectivity is not required.
    """
    if check:
        if find_semicycle(H) is not None or max_chain_length(H, cap=2, semicycle_free=True) > 2:
            raise Not2Hypertree("decomposition needs a semicycle-free host with no chain of 3 edges")
    k = H.k
    g = nx.Graph()
    g.add_nodes_from(H.edges)
    for kernel, ws in H.completions.items():
        members = [tuple(sorted(kernel | {w})) for w in ws]
        g.add_edges_from(zip(members, members[1:]))
    stars = []
    for comp in nx.connected_components(g):
        edges = tuple(sorted(comp))
        common = set(edges[0]).intersection(*edges[1:])
        if len(edges) == 1:
            kernel = edges[0][:k - 1]
        elif len(common) == k - 1:
            kernel = tuple(sorted(common))
        else:
            raise DecompositionAnomaly(f"edge component {edges} is not a star")
        stars.append(Star(kernel, edges))
    stars.sort(key=lambda s: s.edges[0])
    kernels = [s.kernel for s in stars]
    if len(set(kernels)) != len(kernels):
        raise DecompositionAnomaly("two maximal stars share a kernel")
    covered = {sub for e in H.edges for sub in combinations(e, k - 1)}
    profile = dict(sorted(Counter(len(s.edges) for s in stars).items()))
    return StarDecomposition(k, H.n, tuple(stars), profile, comb(H.n, k - 1) - len(covered))


@dataclass
class StarLedger:
    rows: list[tuple[int, int, int]] = field(default_factory=list)
    uncovered: int = 0
    subsets: int = 0
    star_count: int = 0
    weighted: int = 0
    edges: int = 0
    k: int = 0

    @property
    def counting_rhs(self) -> int:
        return self.uncovered + self.star_count + (self.k - 1) * self.weighted

    @property
    def counting_holds(self) -> bool:
        return self.subsets == self.counting_rhs

    @property
    def edge_sum_holds(self) -> bool:
        return self.weighted == self.edges

    def render(self) -> str:
        out = [f"{'i':>4} {'C_i':>6} {'i*C_i':>8}"]
        out += [f"{i:>4} {c:>6} {ic:>8}" for i, c, ic in self.rows]
        out.append(f"uncovered (k-1)-sets l = {self.uncovered}")
        out.append(
            f"C(n,k-1) = {self.subsets}  vs  l + sum C_i + (k-1) sum i*C_i = "
            f"{self.uncovered} + {self.star_count} + {self.k - 1}*{self.weighted} = {self.counting_rhs}"
            f"  [{'OK' if self.counting_holds else 'FAIL'}]"
        )
        out.append(
            f"|E| = {self.edges}  vs  sum i*C_i = {self.weighted}"
            f"  [{'OK' if self.edge_sum_holds else 'FAIL'}]"
        )
        return "\n".join(out)


def check_star_equation(H: Hypergraph, decomposition: StarDecomposition | None = None) -> tuple[bool, StarLedger]:
    D = decomposition or decompose_stars(H)
    ledger = StarLedger(
        rows=[(i, c, i * c) for i, c in D.profile.items()],
        uncovered=D.uncovered,
        subsets=comb(H.n, H.k - 1),
        star_count=D.star_count,
        weighted=D.weighted_count,
        edges=H.m,
        k=H.k,
    )
    return ledger.counting_holds and ledger.edge_sum_holds, ledger
