"""Decision procedures for chain connectivity, semicycles and hypertree predicates.

All searches walk *tight walks*: a walk is extended by a vertex ``w`` when the
last k-1 vertices together with ``w`` form an edge. Two walk disciplines are
used:

* simple walks, where all vertices are distinct. In a semicycle-free
  hypergraph every chain is of this form, and any hypergraph with a semicycle
  also has a non-self-intersecting one, so simple walks suffice for
  semicycle detection and for all searches in semicycle-free hosts.
* general walks, where vertices may repeat but windows must be distinct
  edges. This is the literal chain definition and is the authority whenever
  semicycle-freeness of the host is unknown.

Pair connectivity via simple walks starts from edges containing ``u`` and
succeeds once ``v`` lies in the last window. This truncation is complete for
non-self-intersecting chains: cutting a chain down to the windows between the
first one holding ``u`` and the last one holding ``v`` leaves a chain.

Every loop iterates vertices, edges and permutations in ascending order, so
witnesses are deterministic.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations, permutations, product
from typing import Callable, Iterable, NamedTuple, Sequence

from .core import (
    Edge,
    Hypergraph,
    is_chain_sequence,
    is_semicycle_sequence,
    windows,
)
from .errors import NotAHypertree, ResourceCap

DEFAULT_MAX_NODES = 20_000_000
DEFAULT_ORACLE_LIMIT = 5_000_000


class Budget:
    """Counts search nodes and raises :class:`ResourceCap` past the limit."""

    __slots__ = ("left",)

    def __init__(self, max_nodes: int | None):
        self.left = max_nodes

    def tick(self):
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise ResourceCap("search node budget exhausted")


class WitnessKind(str, enum.Enum):
    CHAIN = "Chain"
    SEMICYCLE = "Semicycle"
    DISCONNECTED_PAIR = "DisconnectedPair"
    REMOVABLE_EDGE = "RemovableEdge"
    ADDABLE_EDGE = "AddableEdge"


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    sequence: tuple[int, ...] | None = None
    pair: tuple[int, int] | None = None
    edge: Edge | None = None

    def replay(self, H: Hypergraph) -> bool:
        """Re-check the certificate against ``H`` from scratch."""
        if self.kind is WitnessKind.CHAIN:
            return is_chain_sequence(H, self.sequence)
        if self.kind is WitnessKind.SEMICYCLE:
            return is_semicycle_sequence(H, self.sequence)
        if self.kind is WitnessKind.DISCONNECTED_PAIR:
            return find_connecting_chain(H, *self.pair) is None
        if self.kind is WitnessKind.REMOVABLE_EDGE:
            return H.has_edge(self.edge) and is_chain_connected(H.without_edge(self.edge)).ok
        if self.kind is WitnessKind.ADDABLE_EDGE:
            return not H.has_edge(self.edge) and find_semicycle(H.with_edge(self.edge)) is None
        raise AssertionError(self.kind)

    def describe(self) -> str:
        if self.sequence is not None:
            return f"{self.kind.value} " + " ".join(map(str, self.sequence))
        if self.pair is not None:
            return f"{self.kind.value} {self.pair[0]} {self.pair[1]}"
        return f"{self.kind.value} " + " ".join(map(str, self.edge))


class Verdict(NamedTuple):
    ok: bool
    witness: Witness | None = None


def _start_windows(edges: Iterable[Edge]):
    for e in edges:
        yield from permutations(e)


# -- walk engines --------------------------------------------------------------

def _simple_walks(H, seq, seen, max_edges, visit, budget) -> bool:
    """DFS over non-self-intersecting extensions of ``seq``.

    ``visit(seq)`` is called on every walk including ``seq`` itself; returning
    True stops the search.
    """
    budget.tick()
    if visit(seq):
        return True
    if max_edges is not None and len(seq) - H.k + 1 >= max_edges:
        return False
    tail = frozenset(seq[len(seq) - H.k + 1:])
    for w in H.completions.get(tail, ()):
        if w in seen:
            continue
        seq.append(w)
        seen.add(w)
        if _simple_walks(H, seq, seen, max_edges, visit, budget):
            return True
        seen.discard(w)
        seq.pop()
    return False


def _general_walks(H, seq, used, max_edges, visit, budget) -> bool:
    """DFS over all walks with pairwise distinct window edges."""
    budget.tick()
    if visit(seq):
        return True
    if max_edges is not None and len(used) >= max_edges:
        return False
    tail_list = seq[len(seq) - H.k + 1:]
    tail = frozenset(tail_list)
    for w in H.completions.get(tail, ()):
        window = tuple(sorted(tail_list + [w]))
        if window in used:
            continue
        seq.append(w)
        used.add(window)
        if _general_walks(H, seq, used, max_edges, visit, budget):
            return True
        used.discard(window)
        seq.pop()
    return False


def _run_simple(H, starts, max_edges, visit, budget) -> bool:
    for start in starts:
        if _simple_walks(H, list(start), set(start), max_edges, visit, budget):
            return True
    return False


def _run_general(H, starts, max_edges, visit, budget) -> bool:
    for start in starts:
        if _general_walks(H, list(start), {tuple(sorted(start))}, max_edges, visit, budget):
            return True
    return False


# -- chains and connectivity ---------------------------------------------------

def _trim(H: Hypergraph, seq: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Shortest window run of ``seq`` with ``u`` in its first and ``v`` in its last window,
    provided that run is itself a chain; otherwise ``seq`` unchanged."""
    k = H.k
    wins = [set(seq[i:i + k]) for i in range(len(seq) - k + 1)]
    best = None
    for a, b in ((u, v), (v, u)):
        for i, wi in enumerate(wins):
            if a not in wi:
                continue
            for j in range(i, len(wins)):
                if b in wins[j]:
                    cand = tuple(seq[i:j + k])
                    if is_chain_sequence(H, cand) and (best is None or len(cand) < len(best)):
                        best = cand if a == u else cand[::-1]
                    break
    return best if best is not None else tuple(seq)


def find_connecting_chain(
    H: Hypergraph,
    u: int,
    v: int,
    max_len: int | None = None,
    semicycle_free: bool | None = None,
    max_nodes: int | None = DEFAULT_MAX_NODES,
) -> tuple[int, ...] | None:
    """A chain sequence containing ``u`` and ``v``, or None if there is none.

    The simple-walk search runs first. Its answers are always valid chains;
    its failures are final only when the host is known to be semicycle-free,
    otherwise the general walk search decides.
    """
    if u == v:
        raise ValueError("connectivity is defined for distinct vertices")
    for x in (u, v):
        if not 1 <= x <= H.n:
            raise ValueError(f"vertex {x} outside [1, {H.n}]")
    if u not in H.incidence or v not in H.incidence:
        return None
    budget = Budget(max_nodes)
    k = H.k
    found: list[tuple[int, ...]] = []

    def reaches_v(seq):
        if v in seq[len(seq) - k:] and seq[0] != seq[-1]:
            found.append(tuple(seq))
            return True
        return False

    if _run_simple(H, _start_windows(H.incidence.get(u, ())), max_len, reaches_v, budget):
        return found[0]
    if semicycle_free:
        return None

    def holds_both(seq):
        if seq[0] != seq[-1] and u in seq and v in seq:
            found.append(tuple(seq))
            return True
        return False

    if _run_general(H, _start_windows(H.edges), max_len, holds_both, budget):
        return _trim(H, found[0], u, v)
    return None


def _simple_reach(H: Hypergraph, u: int, budget: Budget) -> set[int]:
    """Vertices lying on some non-self-intersecting chain whose first edge holds ``u``."""
    reach: set[int] = set()
    for e in H.incidence.get(u, ()):
        reach.update(e)

    def collect(seq):
        reach.add(seq[-1])
        return False

    _run_simple(H, _start_windows(H.incidence.get(u, ())), None, collect, budget)
    reach.discard(u)
    return reach


def two_hypertree_pairs(H: Hypergraph) -> set[tuple[int, int]]:
    """Connected pairs of a hypergraph whose chains have at most two edges.

    Such a pair lies in one edge or in the union of two edges sharing k-1
    vertices. Only valid when the longest chain has length <= 2.
    """
    pairs: set[tuple[int, int]] = set()
    for e in H.edges:
        pairs.update(combinations(e, 2))
    for kernel, ws in H.completions.items():
        if len(ws) < 2:
            continue
        base = tuple(kernel)
        for a, b in combinations(ws, 2):
            pairs.update(combinations(sorted(base + (a, b)), 2))
    return pairs


def is_chain_connected(
    H: Hypergraph,
    semicycle_free: bool | None = None,
    two_hypertree: bool = False,
    max_nodes: int | None = DEFAULT_MAX_NODES,
) -> Verdict:
    """Every vertex pair lies on a common chain; otherwise the first failing pair.

    ``two_hypertree=True`` asserts the caller verified that no chain has
    three edges, enabling the edge-adjacency shortcut.
    """
    if H.n < 2:
        return Verdict(True)
    if two_hypertree:
        pairs = two_hypertree_pairs(H)
        for p in combinations(H.vertices, 2):
            if p not in pairs:
                return Verdict(False, Witness(WitnessKind.DISCONNECTED_PAIR, pair=p))
        return Verdict(True)
    budget = Budget(max_nodes)
    reach = {u: _simple_reach(H, u, budget) for u in H.vertices}
    for u, v in combinations(H.vertices, 2):
        if v in reach[u]:
            continue
        if semicycle_free or find_connecting_chain(H, u, v, semicycle_free=False, max_nodes=budget.left) is None:
            return Verdict(False, Witness(WitnessKind.DISCONNECTED_PAIR, pair=(u, v)))
    return Verdict(True)


# -- semicycles -----------------------------------------------------------------

def find_semicycle(
    H: Hypergraph,
    max_edges: int | None = None,
    through: Iterable[int] | None = None,
    max_nodes: int | None = DEFAULT_MAX_NODES,
) -> tuple[int, ...] | None:
    """A non-self-intersecting semicycle sequence with at most ``max_edges`` edges.

    ``through``, when given, restricts the answer to semicycles that use that
    edge. None certifies that no (such) semicycle exists.
    """
    k = H.k
    budget = Budget(max_nodes)
    need = tuple(sorted(through)) if through is not None else None
    found: list[tuple[int, ...]] = []

    def dfs(seq, seen) -> bool:
        budget.tick()
        n_edges = len(seq) - k + 1
        if max_edges is not None and n_edges >= max_edges:
            return False
        tail = frozenset(seq[len(seq) - k + 1:])
        for w in H.completions.get(tail, ()):
            if w == seq[0] and n_edges + 1 >= 3:
                cand = tuple(seq) + (w,)
                if is_semicycle_sequence(H, cand) and (need is None or need in windows(cand, k)):
                    found.append(cand)
                    return True
            if w in seen:
                continue
            seq.append(w)
            seen.add(w)
            if dfs(seq, seen):
                return True
            seen.discard(w)
            seq.pop()
        return False

    for start in _start_windows(H.edges):
        if dfs(list(start), set(start)):
            return found[0]
    return None


# -- composite predicates ------------------------------------------------------

def is_hypertree(H: Hypergraph, max_nodes: int | None = DEFAULT_MAX_NODES) -> Verdict:
    sc = find_semicycle(H, max_nodes=max_nodes)
    if sc is not None:
        return Verdict(False, Witness(WitnessKind.SEMICYCLE, sequence=sc))
    return is_chain_connected(H, semicycle_free=True, max_nodes=max_nodes)


def max_chain_length(
    H: Hypergraph,
    cap: int | None = None,
    semicycle_free: bool | None = None,
    max_nodes: int | None = DEFAULT_MAX_NODES,
) -> int:
    """Number of edges in a longest chain, or ``cap + 1`` once that is exceeded."""
    if semicycle_free is None:
        semicycle_free = find_semicycle(H, max_nodes=max_nodes) is None
    k = H.k
    best = 0
    limit = None if cap is None else cap + 1

    def record(seq):
        nonlocal best
        if seq[0] != seq[-1]:
            best = max(best, len(seq) - k + 1)
        return limit is not None and best >= limit

    run = _run_simple if semicycle_free else _run_general
    run(H, _start_windows(H.edges), limit, record, Budget(max_nodes))
    return best if limit is None else min(best, limit)


def longest_chain(H: Hypergraph, max_nodes: int | None = DEFAULT_MAX_NODES) -> tuple[int, ...] | None:
    """A witness sequence for :func:`max_chain_length` in a semicycle-free host."""
    k = H.k
    best: list[tuple[int, ...]] = []

    def record(seq):
        if seq[0] != seq[-1] and (not best or len(seq) > len(best[0])):
            best[:] = [tuple(seq)]
        return False

    _run_simple(H, _start_windows(H.edges), None, record, Budget(max_nodes))
    return best[0] if best else None


def is_l_hypertree(H: Hypergraph, l: int, max_nodes: int | None = DEFAULT_MAX_NODES) -> Verdict:
    verdict = is_hypertree(H, max_nodes=max_nodes)
    if not verdict.ok:
        return verdict
    if max_chain_length(H, cap=l, semicycle_free=True, max_nodes=max_nodes) > l:
        seq = longest_chain(H, max_nodes=max_nodes)
        return Verdict(False, Witness(WitnessKind.CHAIN, sequence=seq))
    return Verdict(True)


def _require_hypertree(H: Hypergraph, max_nodes) -> None:
    verdict = is_hypertree(H, max_nodes=max_nodes)
    if not verdict.ok:
        raise NotAHypertree(verdict.witness.describe())


def _edge_still_connected(H: Hypergraph, edge: Edge, two: bool, max_nodes) -> bool:
    return is_chain_connected(
        H.without_edge(edge), semicycle_free=True, two_hypertree=two, max_nodes=max_nodes
    ).ok


def _edge_addable(H: Hypergraph, s: Edge, max_nodes) -> bool:
    return find_semicycle(H.with_edge(s), through=s, max_nodes=max_nodes) is None


def _first_true(fn: Callable, items: list, jobs: int):
    """First item (in order) for which ``fn`` holds."""
    if jobs <= 1 or len(items) < 2:
        for item in items:
            if fn(item):
                return item
        return None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for item, hit in zip(items, pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs)))):
            if hit:
                return item
    return None


def is_edge_minimal(H: Hypergraph, jobs: int = 1, max_nodes: int | None = DEFAULT_MAX_NODES) -> Verdict:
    """Deleting any edge must break chain-connectivity."""
    _require_hypertree(H, max_nodes)
    two = max_chain_length(H, cap=2, semicycle_free=True, max_nodes=max_nodes) <= 2
    fn = partial(_edge_still_connected, H, two=two, max_nodes=max_nodes)
    hit = _first_true(fn, list(H.edges), jobs)
    if hit is not None:
        return Verdict(False, Witness(WitnessKind.REMOVABLE_EDGE, edge=hit))
    return Verdict(True)


def is_edge_maximal(H: Hypergraph, jobs: int = 1, max_nodes: int | None = DEFAULT_MAX_NODES) -> Verdict:
    """Adding any missing k-set must create a semicycle.

    Since ``H`` is semicycle-free, a new semicycle necessarily uses the added
    set, so the search is restricted to those.
    """
    _require_hypertree(H, max_nodes)
    fn = partial(_edge_addable, H, max_nodes=max_nodes)
    hit = _first_true(fn, list(H.non_edges()), jobs)
    if hit is not None:
        return Verdict(False, Witness(WitnessKind.ADDABLE_EDGE, edge=hit))
    return Verdict(True)


def is_isolated(H: Hypergraph, jobs: int = 1, max_nodes: int | None = DEFAULT_MAX_NODES) -> bool:
    return is_edge_minimal(H, jobs, max_nodes).ok and is_edge_maximal(H, jobs, max_nodes).ok


# -- brute-force ground truth --------------------------------------------------

def oracle_enumerate(
    H: Hypergraph,
    kind: str,
    max_len: int,
    limit: int = DEFAULT_ORACLE_LIMIT,
) -> list[tuple[int, ...]]:
    """Every chain (or semicycle) sequence of ``H`` with at most ``max_len`` edges.

    Candidates are all vertex sequences of length ``k .. max_len + k - 1``
    over ``[1, n]``, generated by prefix extension. A prefix is dropped as
    soon as its newest window is not a k-set edge or repeats an earlier
    window; both conditions are inherited by every extension, so this prunes
    nothing a full enumeration would keep. Survivors are filtered by the
    sequence predicates themselves.
    """
    if kind not in ("chains", "semicycles"):
        raise ValueError(f"unknown oracle kind {kind!r}")
    accept = is_chain_sequence if kind == "chains" else is_semicycle_sequence
    k, n = H.k, H.n
    if H.m == 0 or max_len < 1:
        return []
    out: list[tuple[int, ...]] = []
    nodes = 0

    def extend(seq: list[int], used: set[Edge]):
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise ResourceCap(f"oracle enumeration exceeded {limit} nodes")
        if accept(H, seq):
            out.append(tuple(seq))
        if len(used) >= max_len:
            return
        for w in range(1, n + 1):
            window = tuple(sorted(seq[len(seq) - k + 1:] + [w]))
            if len(set(window)) != k or window in used or window not in H.edge_set:
                continue
            seq.append(w)
            used.add(window)
            extend(seq, used)
            used.discard(window)
            seq.pop()

    for first in product(range(1, n + 1), repeat=k):
        window = tuple(sorted(first))
        if len(set(window)) == k and window in H.edge_set:
            extend(list(first), {window})
    return sorted(out)


def oracle_connected_pairs(H: Hypergraph, limit: int = DEFAULT_ORACLE_LIMIT) -> set[tuple[int, int]]:
    """Pairs lying on a common chain, read off the exhaustive chain list."""
    pairs: set[tuple[int, int]] = set()
    for seq in oracle_enumerate(H, "chains", H.m, limit):
        pairs.update(combinations(sorted(set(seq)), 2))
    return pairs


def oracle_has_semicycle(H: Hypergraph, limit: int = DEFAULT_ORACLE_LIMIT) -> bool:
    return bool(oracle_enumerate(H, "semicycles", H.m, limit))


def oracle_mismatches(H: Hypergraph, limit: int = DEFAULT_ORACLE_LIMIT) -> list[str]:
    """Disagreements between the optimized searches and brute force on ``H``."""
    problems = []
    sc = find_semicycle(H)
    if (sc is None) == oracle_has_semicycle(H, limit):
        problems.append(f"semicycle verdict differs: search={sc}")
    if sc is not None and not is_semicycle_sequence(H, sc):
        problems.append(f"semicycle witness {sc} does not replay")
    truth = oracle_connected_pairs(H, limit)
    for u, v in combinations(H.vertices, 2):
        chain = find_connecting_chain(H, u, v)
        if (chain is not None) != ((u, v) in truth):
            problems.append(f"pair ({u},{v}) verdict differs: search={chain}")
        elif chain is not None and not (is_chain_sequence(H, chain) and u in chain and v in chain):
            problems.append(f"chain witness {chain} for ({u},{v}) does not replay")
    return problems


def parse_witness(text: str) -> Witness:
    """Inverse of :meth:`Witness.describe`; a bare vertex list is read as a walk."""
    tokens = text.replace(",", " ").split()
    kinds = {k.value: k for k in WitnessKind}
    if tokens and tokens[0] in kinds:
        kind = kinds[tokens[0]]
        nums = tuple(int(t) for t in tokens[1:])
    else:
        nums = tuple(int(t) for t in tokens)
        kind = WitnessKind.SEMICYCLE if nums and nums[0] == nums[-1] else WitnessKind.CHAIN
    if kind in (WitnessKind.CHAIN, WitnessKind.SEMICYCLE):
        return Witness(kind, sequence=nums)
    if kind is WitnessKind.DISCONNECTED_PAIR:
        if len(nums) != 2:
            raise ValueError("a DisconnectedPair witness needs two vertices")
        return Witness(kind, pair=(nums[0], nums[1]))
    return Witness(kind, edge=tuple(sorted(nums)))
