from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hypertrees import search
from hypertrees.core import Hypergraph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, k=3, min_n=3, max_n=7, max_edges=10):
    n = draw(st.integers(min_n, max_n))
    pool = list(combinations(range(1, n + 1), k))
    edges = draw(st.lists(st.sampled_from(pool), max_size=max_edges, unique=True))
    return Hypergraph(k, n, tuple(edges))


# Definition-level references built only on exhaustive enumeration.

def bf_connected(H: Hypergraph) -> bool:
    pairs = search.oracle_connected_pairs(H)
    return all(p in pairs for p in combinations(H.vertices, 2))


def bf_hypertree(H: Hypergraph) -> bool:
    return not search.oracle_has_semicycle(H) and bf_connected(H)


def bf_edge_minimal(H: Hypergraph) -> bool:
    return bf_hypertree(H) and all(not bf_connected(H.without_edge(e)) for e in H.edges)


def bf_edge_maximal(H: Hypergraph) -> bool:
    return bf_hypertree(H) and all(search.oracle_has_semicycle(H.with_edge(s)) for s in H.non_edges())


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def _record(key: str, ok: bool, detail: str = ""):
        ACCEPTANCE[key] = (ok, detail)
        assert ok, f"{key}: {detail}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")
