"""Recursive partition of all lambda-subsets of [n] into few semicycle-poor classes.

For n a power of two the ground set is halved into ``{1..n/2}`` and
``{n/2+1..n}``. Classes are assembled from the partitions of the halves:

* paired classes: class i of the left half united with class i of the right
  half (lambda-sets lying entirely inside one half);
* product classes: for every split ``lambda = a + b`` with ``a, b >= 1`` and
  every class pair, the sets ``x | y`` with ``x`` from a left class for ``a``
  and ``y`` from a right class for ``b``.

Paired classes come first, then product classes for ``a = 1 .. lambda-1`` in
row-major ``(i, j)`` order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .core import Hypergraph
from .errors import DomainError
from .search import find_semicycle

Subset = tuple[int, ...]


@dataclass(frozen=True)
class PartitionFamily:
    n: int
    lam: int
    classes: tuple[frozenset[Subset], ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def as_hypergraphs(self) -> list[Hypergraph]:
        return [Hypergraph(self.lam, self.n, tuple(sorted(c))) for c in self.classes]


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@lru_cache(maxsize=None)
def _classes(n: int, lam: int) -> tuple[frozenset[Subset], ...]:
    """Partition of the lambda-subsets of ``{1..n}``; results are shifted by the caller."""
    if lam == 1:
        return (frozenset((v,) for v in range(1, n + 1)),)
    if n == lam:
        return (frozenset([tuple(range(1, n + 1))]),)
    if n < lam:
        return ()
    half = n // 2
    left = {a: _classes(half, a) for a in range(1, lam + 1)}
    right = {a: tuple(_shift(c, half) for c in left[a]) for a in left}
    paired = tuple(l | r for l, r in zip(left[lam], right[lam]))
    products = []
    for a in range(1, lam):
        for cl in left[a]:
            for cr in right[lam - a]:
                products.append(frozenset(tuple(sorted(x + y)) for x in cl for y in cr))
    return paired + tuple(products)


def _shift(cls: frozenset[Subset], by: int) -> frozenset[Subset]:
    return frozenset(tuple(v + by for v in s) for s in cls)


def build_partition(n: int, k: int) -> PartitionFamily:
    """Partition the (k-1)-subsets of [n]; an empty family when n < k-1."""
    if not _is_power_of_two(n):
        raise DomainError(f"n must be a power of two, got {n}")
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    return PartitionFamily(n, k - 1, _classes(n, k - 1))


@lru_cache(maxsize=None)
def class_count(n: int, lam: int) -> int:
    """Number of classes from the recurrence alone, without building them."""
    if lam == 1:
        return 1
    if n == lam:
        return 1
    if n < lam:
        return 0
    half = n // 2
    return class_count(half, lam) + sum(
        class_count(half, a) * class_count(half, lam - a) for a in range(1, lam)
    )


def count_bound(n: int, k: int) -> int:
    """(log2 n)^(k-2)."""
    return int(math.log2(n)) ** (k - 2)


@dataclass
class PartitionReport:
    disjoint: bool = True
    complete: bool = True
    covering: bool = True
    short_semicycle_free: bool = True
    count_within_bound: bool = True
    failures: list[str] = field(default_factory=list)
    semicycle_witness: tuple[int, ...] | None = None

    @property
    def ok(self) -> bool:
        return (
            self.disjoint
            and self.complete
            and self.covering
            and self.short_semicycle_free
            and self.count_within_bound
        )

    def lines(self) -> list[str]:
        checks = [
            ("disjoint", self.disjoint),
            ("union-is-all-subsets", self.complete),
            ("classes-cover-ground-set", self.covering),
            ("no-short-semicycle", self.short_semicycle_free),
            ("class-count-bound", self.count_within_bound),
        ]
        out = [f"CHECK {name} {'PASS' if ok else 'FAIL'}" for name, ok in checks]
        out.extend(f"  {msg}" for msg in self.failures)
        return out


def verify_partition(P: PartitionFamily, k: int) -> PartitionReport:
    """Run all five partition checks; failures are reported, never raised."""
    rep = PartitionReport()
    ground = set(range(1, P.n + 1))
    seen: dict[Subset, int] = {}
    for idx, cls in enumerate(P.classes):
        for s in cls:
            if s in seen:
                rep.disjoint = False
                rep.failures.append(f"set {s} in classes {seen[s]} and {idx}")
            seen[s] = idx
    expected = set(combinations(range(1, P.n + 1), P.lam))
    if set(seen) != expected:
        rep.complete = False
        missing = sorted(expected - set(seen))[:3]
        extra = sorted(set(seen) - expected)[:3]
        rep.failures.append(f"union mismatch: missing {missing} extra {extra}")
    for idx, cls in enumerate(P.classes):
        covered = set().union(*cls) if cls else set()
        if covered != ground:
            rep.covering = False
            rep.failures.append(f"class {idx} misses vertices {sorted(ground - covered)}")
    for idx, H in enumerate(P.as_hypergraphs()):
        sc = find_semicycle(H, max_edges=k)
        if sc is not None:
            rep.short_semicycle_free = False
            rep.semicycle_witness = rep.semicycle_witness or sc
            rep.failures.append(f"class {idx} has semicycle {' '.join(map(str, sc))}")
    if P.count > count_bound(P.n, k):
        rep.count_within_bound = False
        rep.failures.append(f"{P.count} classes exceed bound {count_bound(P.n, k)}")
    return rep
