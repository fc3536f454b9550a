"""k-uniform hypergraphs, walk sequences, and the ``.khg`` text format.

Vertices are 1-based integers. An edge is a strictly increasing tuple of k
vertices; a hypergraph keeps its edges sorted lexicographically so that every
derived output is reproducible byte for byte.

A walk sequence is a plain tuple of vertices. Its windows are the k-sets
``{s[i], ..., s[i+k-1]}``; the chain and semicycle predicates below test a
sequence literally against those windows.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidHypergraph, ParseError, VertexOutOfRange, WrongCardinality

Edge = tuple[int, ...]


def _canonical_edge(vertices: Iterable[int], k: int, n: int) -> Edge:
    raw = list(vertices)
    edge = tuple(sorted(set(raw)))
    if len(edge) != k or len(raw) != k:
        raise WrongCardinality(f"edge {sorted(raw)} does not have exactly {k} distinct vertices")
    if edge[0] < 1 or edge[-1] > n:
        raise VertexOutOfRange(f"edge {edge} has a vertex outside [1, {n}]")
    return edge


@dataclass(frozen=True)
class Hypergraph:
    """A simple k-uniform hypergraph on the vertex set ``[1, n]``.

    An edgeless hypergraph may have ``n < k``; this only arises as a
    degenerate construction output and is never accepted by
    :func:`new_hypergraph`.
    """

    k: int
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.k < 1:
            raise InvalidHypergraph(f"uniformity must be >= 1, got {self.k}")
        if self.n < 0 or (self.n < self.k and self.edges):
            raise InvalidHypergraph(f"k={self.k} exceeds n={self.n}")
        canon = sorted({_canonical_edge(e, self.k, self.n) for e in self.edges})
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def completions(self) -> dict[frozenset, tuple[int, ...]]:
        """Map each (k-1)-set contained in an edge to the vertices completing it."""
        index: dict[frozenset, list[int]] = defaultdict(list)
        for e in self.edges:
            for w in e:
                index[frozenset(e) - {w}].append(w)
        return {key: tuple(sorted(ws)) for key, ws in index.items()}

    @cached_property
    def incidence(self) -> dict[int, tuple[Edge, ...]]:
        inc: dict[int, list[Edge]] = defaultdict(list)
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return tuple(sorted(vertices)) in self.edge_set

    def with_edge(self, vertices: Iterable[int]) -> "Hypergraph":
        return Hypergraph(self.k, self.n, self.edges + (tuple(vertices),))

    def without_edge(self, edge: Iterable[int]) -> "Hypergraph":
        drop = tuple(sorted(edge))
        return Hypergraph(self.k, self.n, tuple(e for e in self.edges if e != drop))

    def non_edges(self) -> Iterable[Edge]:
        """All k-subsets of the vertex set that are not edges, ascending."""
        present = self.edge_set
        for s in combinations(self.vertices, self.k):
            if s not in present:
                yield s

    def __repr__(self):
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"


def new_hypergraph(k: int, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and canonicalize; duplicate edges collapse to one."""
    if k < 1:
        raise InvalidHypergraph(f"uniformity must be >= 1, got {k}")
    if k > n:
        raise InvalidHypergraph(f"k={k} exceeds n={n}")
    return Hypergraph(k, n, tuple(tuple(e) for e in edges))


def windows(seq: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """Consecutive k-windows of ``seq`` as sorted tuples (duplicates kept)."""
    return [tuple(sorted(seq[i:i + k])) for i in range(len(seq) - k + 1)]


def _windows_are_distinct_edges(H: Hypergraph, seq: Sequence[int]) -> bool:
    if len(seq) < H.k:
        return False
    wins = windows(seq, H.k)
    if any(len(set(w)) != H.k for w in wins):
        return False
    if len(set(wins)) != len(wins):
        return False
    return all(w in H.edge_set for w in wins)


def is_chain_sequence(H: Hypergraph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` witnesses a chain in ``H``.

    The vertex-coverage clause holds automatically: the chain tested is the
    subhypergraph spanned by the windows, whose vertices all occur in ``seq``.
    """
    return len(seq) >= H.k and seq[0] != seq[-1] and _windows_are_distinct_edges(H, seq)


def is_semicycle_sequence(H: Hypergraph, seq: Sequence[int]) -> bool:
    return (
        len(seq) - H.k + 1 >= 3
        and seq[0] == seq[-1]
        and _windows_are_distinct_edges(H, seq)
    )


def is_non_self_intersecting(seq: Sequence[int]) -> bool:
    body = seq[:-1] if len(seq) > 1 and seq[0] == seq[-1] else seq
    return len(set(body)) == len(body)


# -- .khg text format -------------------------------------------------------

def serialize(H: Hypergraph) -> str:
    lines = [f"khg {H.k} {H.n} {H.m}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[str]:
    if not text.endswith("\n"):
        raise ParseError("missing trailing newline")
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _ints(line: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise ParseError(f"non-integer token in {what}: {line!r}") from exc


def _parse_block(lines: list[str], pos: int) -> tuple[Hypergraph, int]:
    if pos >= len(lines):
        raise ParseError("expected a 'khg' header, found end of input")
    head = lines[pos].split()
    if len(head) != 4 or head[0] != "khg":
        raise ParseError(f"malformed header: {lines[pos]!r}")
    k, n, m = _ints(" ".join(head[1:]), "header")
    if k < 1 or n < 0 or m < 0:
        raise ParseError(f"invalid header values: {lines[pos]!r}")
    body = lines[pos + 1:pos + 1 + m]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for line in body:
        e = _ints(line, "edge line")
        if len(e) != k:
            raise ParseError(f"edge line {line!r} does not have {k} vertices")
        edges.append(e)
    try:
        H = Hypergraph(k, n, tuple(tuple(e) for e in edges))
    except InvalidHypergraph as exc:
        raise ParseError(str(exc)) from exc
    return H, pos + 1 + m


def parse(text: str) -> Hypergraph:
    lines = _content_lines(text)
    H, end = _parse_block(lines, 0)
    if end != len(lines):
        raise ParseError(f"unexpected trailing content: {lines[end]!r}")
    return H


def serialize_family(n: int, lam: int, classes: Sequence[Hypergraph]) -> str:
    """``khgpart`` container: a family header followed by one ``khg`` block per class."""
    out = [f"khgpart {n} {lam} {len(classes)}\n"]
    out.extend(serialize(c) for c in classes)
    return "".join(out)


def parse_family(text: str) -> tuple[int, int, list[Hypergraph]]:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "khgpart":
        raise ParseError(f"malformed family header: {lines[0]!r}")
    n, lam, count = _ints(" ".join(head[1:]), "family header")
    pos, classes = 1, []
    for _ in range(count):
        H, pos = _parse_block(lines, pos)
        if H.n != n or H.k != lam:
            raise ParseError(f"class block {H!r} disagrees with family header n={n} lambda={lam}")
        classes.append(H)
    if pos != len(lines):
        raise ParseError(f"unexpected trailing content: {lines[pos]!r}")
    return n, lam, classes


def tight_path(n: int, k: int) -> Hypergraph:
    """The non-self-intersecting chain 1, 2, ..., n."""
    return new_hypergraph(k, n, [range(i, i + k) for i in range(1, n - k + 2)])


def star(n: int, k: int) -> Hypergraph:
    """Tight star with kernel ``{1, ..., k-1}`` and one edge per remaining vertex."""
    kernel = tuple(range(1, k))
    return new_hypergraph(k, n, [kernel + (v,) for v in range(k, n + 1)])


def complete(n: int, k: int) -> Hypergraph:
    return new_hypergraph(k, n, combinations(range(1, n + 1), k))


def random_hypergraph(rng, n: int, k: int, m: int) -> Hypergraph:
    """``m`` distinct k-subsets of [n] drawn with ``rng`` (a ``random.Random``)."""
    pool = list(combinations(range(1, n + 1), k))
    return Hypergraph(k, n, tuple(rng.sample(pool, min(m, len(pool)))))
