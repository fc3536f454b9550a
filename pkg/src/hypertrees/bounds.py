"""Exact evaluation of the edge-count bounds and auditing of instances against them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .core import Hypergraph
from .errors import DomainError, UnknownBound
from . import search

LOWER, UPPER = "lower", "upper"

# name -> (direction, needs an l parameter)
BOUNDS = {
    "chain_lower": (LOWER, False),
    "semicycle_upper": (UPPER, False),
    "l_hypertree_upper": (UPPER, True),
    "two_hypertree_refined": (UPPER, False),
    "edge_minimal_upper": (UPPER, False),
    "edge_minimal_l_upper": (UPPER, True),
    "edge_maximal_lower": (LOWER, False),
    "conjectured_minimal_upper": (UPPER, False),
    "conjectured_maximal_lower": (LOWER, False),
}


def evaluate_bound(name: str, n: int, k: int, l: int | None = None) -> Fraction:
    if name not in BOUNDS:
        raise UnknownBound(name)
    if n < k:
        raise DomainError(f"need n >= k, got n={n}, k={k}")
    if BOUNDS[name][1] and l is None:
        raise DomainError(f"{name} needs the chain-length parameter l")
    if name == "chain_lower":
        return Fraction(n - (k - 1))
    if name == "semicycle_upper":
        return Fraction(comb(n, k - 1))
    if name == "l_hypertree_upper":
        if not 1 <= l <= k:
            raise DomainError(f"need 1 <= l <= k, got l={l}")
        return Fraction(comb(n, k - 1), k - l + 1)
    if name == "two_hypertree_refined":
        return Fraction(comb(n, k - 1), k - 1) - Fraction(comb(n, k - 2), (k - 1) ** 3)
    if name == "edge_minimal_upper":
        return Fraction(n * (n - 1) * (n - k + 1), 2)
    if name == "edge_minimal_l_upper":
        return Fraction(l * n * (n - 1), 2)
    if name == "edge_maximal_lower":
        return Fraction(1, k * (k - 1)) * Fraction(n - k + 1, n - k + 2) * comb(n, k - 1)
    if name == "conjectured_minimal_upper":
        return Fraction(comb(n, 2), k - 1)
    # the O(n) slack of the conjectured lower bound is taken to be exactly n
    return Fraction(comb(n, 2), 2) - n


@dataclass
class Flags:
    is_hypertree: bool
    max_chain_len: int | None = None
    is_edge_minimal: bool = False
    is_edge_maximal: bool = False
    chain_connected: bool | None = None
    semicycle_free: bool | None = None
    verified: bool = True

    def __post_init__(self):
        if self.chain_connected is None:
            self.chain_connected = self.is_hypertree
        if self.semicycle_free is None:
            self.semicycle_free = self.is_hypertree


def compute_flags(H: Hypergraph, jobs: int = 1) -> Flags:
    free = search.find_semicycle(H) is None
    connected = search.is_chain_connected(H, semicycle_free=free).ok
    tree = free and connected
    longest = search.max_chain_length(H, semicycle_free=free) if H.m else 0
    return Flags(
        is_hypertree=tree,
        max_chain_len=longest,
        is_edge_minimal=tree and search.is_edge_minimal(H, jobs).ok,
        is_edge_maximal=tree and search.is_edge_maximal(H, jobs).ok,
        chain_connected=connected,
        semicycle_free=free,
    )


@dataclass
class BoundRow:
    name: str
    direction: str
    value: Fraction | None
    applicable: bool
    informational: bool = False
    satisfied: bool | None = None

    @property
    def status(self) -> str:
        if not self.applicable:
            return "NA"
        return "SAT" if self.satisfied else "VIOLATED"

    def machine_line(self) -> str:
        v = "-" if self.value is None else f"{self.value.numerator}/{self.value.denominator}"
        return f"BOUND {self.name} {v} {self.status}"


@dataclass
class BoundsReport:
    instance: str
    n: int
    k: int
    m: int
    flags: Flags
    rows: list[BoundRow] = field(default_factory=list)

    @property
    def edge_ratio(self) -> Fraction:
        return Fraction(self.m, comb(self.n, 2))

    @property
    def ok(self) -> bool:
        """Conjecture rows never gate the verdict."""
        return all(r.satisfied for r in self.rows if r.applicable and not r.informational)

    def render(self) -> str:
        head = (
            f"instance {self.instance}: n={self.n} k={self.k} m={self.m} "
            f"edge-ratio={self.edge_ratio} ({float(self.edge_ratio):.4f})"
            + ("" if self.flags.verified else "  [flags unverified]")
        )
        lines = [head, f"{'bound':<24}{'dir':<7}{'value':>14}  status"]
        for r in self.rows:
            val = "-" if r.value is None else str(r.value)
            tag = " (conjecture, informational)" if r.informational else ""
            lines.append(f"{r.name:<24}{r.direction:<7}{val:>14}  {r.status}{tag}")
        lines.extend(r.machine_line() for r in self.rows)
        return "\n".join(lines)


def audit(H: Hypergraph, flags: Flags, instance: str = "-") -> BoundsReport:
    n, k, m = H.n, H.k, H.m
    L = flags.max_chain_len
    rep = BoundsReport(instance, n, k, m, flags)

    def add(name, applicable, l=None, informational=False):
        direction = BOUNDS[name][0]
        try:
            value = evaluate_bound(name, n, k, l)
        except (DomainError, ZeroDivisionError):
            value = None
        row = BoundRow(name, direction, value, applicable, informational)
        if applicable:
            row.satisfied = m >= value if direction == LOWER else m <= value
        rep.rows.append(row)

    tree = flags.is_hypertree
    has_l = tree and L is not None and 1 <= L <= k
    add("chain_lower", bool(flags.chain_connected) and n >= (k - 1) ** 2)
    add("semicycle_upper", bool(flags.semicycle_free))
    add("l_hypertree_upper", has_l, l=L if has_l else None)
    add("two_hypertree_refined", tree and L is not None and L <= 2 and k >= 2)
    add("edge_minimal_upper", flags.is_edge_minimal)
    add("edge_minimal_l_upper", flags.is_edge_minimal and L is not None, l=L)
    add("edge_maximal_lower", flags.is_edge_maximal)
    add("conjectured_minimal_upper", flags.is_edge_minimal and k >= 2, informational=True)
    add("conjectured_maximal_lower", flags.is_edge_maximal and k == 3, informational=True)
    return rep
