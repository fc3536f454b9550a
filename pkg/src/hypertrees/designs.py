"""Design-theoretic ingredients: 1-factorizations and Steiner systems.

Point labels are 1-based. ``baranyai_factorization`` follows the inductive
flow argument: ground elements are added one at a time to a family of
multiset partitions, and an integral max-flow decides which part of each
partition receives the new element so that every set keeps its prescribed
multiplicity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

import networkx as nx

from .core import Hypergraph
from .errors import DomainError, InadmissibleOrder, NonDivisible, OddGroundSet, ResourceCap

Block = tuple[int, ...]

# r = 3 up to m = 12 is C(12, 3) = 220 blocks; larger r obeys the same block budget.
MAX_BARANYAI_BLOCKS = 220


@dataclass(frozen=True)
class Factorization:
    m: int
    r: int
    factors: tuple[tuple[Block, ...], ...]

    def check(self) -> list[str]:
        """Violated invariants, empty when the factorization is valid."""
        problems = []
        ground = set(range(1, self.m + 1))
        for i, f in enumerate(self.factors):
            if len(f) != self.m // self.r:
                problems.append(f"factor {i} has {len(f)} blocks")
            if sorted(v for b in f for v in b) != sorted(ground):
                problems.append(f"factor {i} does not partition [{self.m}]")
            if any(len(b) != self.r for b in f):
                problems.append(f"factor {i} has a block of wrong size")
        blocks = [b for f in self.factors for b in f]
        if len(blocks) != len(set(blocks)):
            problems.append("factors are not pairwise disjoint")
        if set(blocks) != set(combinations(range(1, self.m + 1), self.r)):
            problems.append("union of factors is not every r-subset")
        return problems

    def as_hypergraphs(self) -> list[Hypergraph]:
        return [Hypergraph(self.r, self.m, f) for f in self.factors]


@dataclass(frozen=True)
class SteinerSystem:
    t: int
    k: int
    n: int
    blocks: Hypergraph


def _canonical_factors(factors) -> tuple[tuple[Block, ...], ...]:
    return tuple(sorted(tuple(sorted(tuple(sorted(b)) for b in f)) for f in factors))


def round_robin_one_factorization(m: int) -> Factorization:
    """Circle method: vertex m stays put while 1..m-1 rotate."""
    if m < 2 or m % 2:
        raise OddGroundSet(f"round robin needs an even m >= 2, got {m}")
    ring = m - 1
    factors = []
    for r in range(ring):
        f = [(r + 1, m)]
        for i in range(1, m // 2):
            a, b = (r + i) % ring + 1, (r - i) % ring + 1
            f.append((min(a, b), max(a, b)))
        factors.append(f)
    return Factorization(m, 2, _canonical_factors(factors))


def _augment_step(partitions: list[list[Block]], element: int, m: int, r: int) -> None:
    """Add ``element`` to exactly one part of every partition, in place."""
    remaining = m - element + 1
    G = nx.DiGraph()
    for i, parts in enumerate(partitions):
        G.add_edge("src", ("P", i), capacity=1)
        for part, mult in Counter(parts).items():
            if len(part) < r:
                G.add_edge(("P", i), ("S", part), capacity=mult)
    sets = {part for parts in partitions for part in parts if len(part) < r}
    for part in sets:
        # copies of this set that must grow at this step
        G.add_edge(("S", part), "sink", capacity=comb(remaining - 1, r - len(part) - 1))
    value, flow = nx.maximum_flow(G, "src", "sink")
    if value != len(partitions):
        raise AssertionError(f"Baranyai step for element {element} found flow {value} < {len(partitions)}")
    for i, parts in enumerate(partitions):
        for node, amount in flow[("P", i)].items():
            if amount:
                j = parts.index(node[1])
                parts[j] = node[1] + (element,)
                break


def _baranyai_flow(m: int, r: int) -> tuple[tuple[Block, ...], ...]:
    count = comb(m - 1, r - 1)
    partitions: list[list[Block]] = [[() for _ in range(m // r)] for _ in range(count)]
    for element in range(1, m + 1):
        _augment_step(partitions, element, m, r)
    return _canonical_factors(partitions)


def _baranyai_backtrack(m: int, r: int) -> tuple[tuple[Block, ...], ...] | None:
    """Exact-cover search; only for tiny instances and as an independent cross-check."""
    all_blocks = list(combinations(range(1, m + 1), r))
    used: set[Block] = set()
    factors: list[list[Block]] = []
    count = comb(m - 1, r - 1)

    def fill_factor(current: list[Block], free: set[int]) -> bool:
        if not free:
            factors.append(list(current))
            ok = next_factor()
            if not ok:
                factors.pop()
            return ok
        lo = min(free)
        for b in all_blocks:
            if b[0] != lo or b in used or not free.issuperset(b):
                continue
            used.add(b)
            current.append(b)
            if fill_factor(current, free - set(b)):
                return True
            current.pop()
            used.discard(b)
        return False

    def next_factor() -> bool:
        if len(factors) == count:
            return True
        return fill_factor([], set(range(1, m + 1)))

    return _canonical_factors(factors) if next_factor() else None


def baranyai_factorization(m: int, r: int, max_blocks: int = MAX_BARANYAI_BLOCKS) -> Factorization:
    """Partition every r-subset of [m] into C(m-1, r-1) perfect matchings."""
    if r < 1 or r > m:
        raise DomainError(f"need 1 <= r <= m, got r={r}, m={m}")
    if m % r:
        raise NonDivisible(f"{r} does not divide {m}")
    if r != 2 and comb(m, r) > max_blocks:
        raise ResourceCap(f"C({m},{r}) = {comb(m, r)} blocks exceeds the cap of {max_blocks}")
    factors = _baranyai_flow(m, r)
    result = Factorization(m, r, factors)
    if result.check() and comb(m, r) <= 20:
        factors = _baranyai_backtrack(m, r)
        result = Factorization(m, r, factors)
    problems = result.check()
    if problems:
        raise AssertionError(f"factorization of K_{m}^({r}) is invalid: {problems}")
    return result


def verify_design(H: Hypergraph, t: int, lam: int) -> bool:
    """Every t-subset of [n] lies in exactly ``lam`` edges."""
    counts = Counter(s for e in H.edges for s in combinations(e, t))
    if lam == 0:
        return not counts
    if any(c != lam for c in counts.values()):
        return False
    return len(counts) == comb(H.n, t)


def doubling_sts(m: int) -> SteinerSystem:
    """STS on 2^m - 1 points.

    Level ``j`` holds points ``2^j .. 2^(j+1) - 1``. Its pairs are split into
    ``2^j - 1`` perfect matchings (round robin, canonical order), and the
    i-th matching is completed by point ``i``.
    """
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    n = 2 ** m - 1
    blocks = []
    for j in range(1, m):
        lo = 2 ** j
        for apex, matching in enumerate(round_robin_one_factorization(lo).factors, start=1):
            for a, b in matching:
                blocks.append((apex, a + lo - 1, b + lo - 1))
    return SteinerSystem(2, 3, n, Hypergraph(3, n, tuple(blocks)))


def _bose(n: int) -> list[Block]:
    """n = 3v with v odd; point (x, i) -> i*v + x + 1."""
    v = n // 3
    half = (v + 1) // 2

    def pt(x, i):
        return (i % 3) * v + x + 1

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(v)]
    for x, y in combinations(range(v), 2):
        z = (x + y) * half % v
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return blocks


def _skolem(n: int) -> list[Block]:
    """n = 6t + 1; point (x, i) -> i*2t + x + 1 and infinity -> n.

    Uses the half-idempotent commutative quasigroup on Z_2t obtained by
    renaming the symbols of the addition table: 2x -> x, 2x + 1 -> x + t.
    """
    t = (n - 1) // 6
    order = 2 * t

    def op(x, y):
        s = (x + y) % order
        return s // 2 if s % 2 == 0 else s // 2 + t

    def pt(x, i):
        return (i % 3) * order + x + 1

    inf = n
    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            blocks.append((inf, pt(x + t, i), pt(x, i + 1)))
    for x, y in combinations(range(order), 2):
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return blocks


def steiner_s23(n: int) -> SteinerSystem:
    """S(2, 3, n) by Bose (n = 3 mod 6) or Skolem (n = 1 mod 6)."""
    if n < 3 or n % 6 not in (1, 3):
        raise InadmissibleOrder(f"no S(2,3,{n}): n must be 1 or 3 mod 6")
    blocks = _bose(n) if n % 6 == 3 else _skolem(n)
    S = SteinerSystem(2, 3, n, Hypergraph(3, n, tuple(blocks)))
    if not verify_design(S.blocks, 2, 1):
        raise AssertionError(f"S(2,3,{n}) construction failed verification")
    return S


def as_steiner_system(H: Hypergraph, t: int) -> SteinerSystem:
    """Wrap an ingested hypergraph after checking the lambda = 1 design property."""
    if not verify_design(H, t, 1):
        raise DomainError(f"hypergraph is not an S({t},{H.k},{H.n}) Steiner system")
    return SteinerSystem(t, H.k, H.n, H)
