"""Finite-size edge-ratio tables for the constructions with closed-form counts.

Prints one text table per family: size parameter, vertex count, edge count,
and the ratio against the normaliser that the family is compared with.
Edge counts come from the builders, not from the formulas, so each row also
shows whether the two agree.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from hypertrees.constructions import (
    doubling_double_sum,
    edge_maximal_matching_tree,
    edge_minimal_grid,
    four_uniform_from_doubling,
    grid_edge_count,
    labelled_partition_hypertree,
)
from hypertrees.partition import class_count


@dataclass
class TrendConfig:
    doubling_m: tuple[int, ...] = (3, 4, 5)
    grid_m: tuple[int, ...] = (2, 4, 6, 8)
    matching_n: tuple[int, ...] = (4, 8, 16, 32)
    partition_n: tuple[int, ...] = (8, 16, 32)


def _table(title: str, header: str, rows: list[str]) -> str:
    return "\n".join([f"== {title}", header, *rows, ""])


def doubling_rows(cfg: TrendConfig) -> list[str]:
    rows = []
    for m in cfg.doubling_m:
        H = four_uniform_from_doubling(m)
        r = Fraction(H.m, comb(H.n, 3))
        rows.append(f"{m:>3} {H.n:>5} {H.m:>7} {str(r):>10} {float(r):.4f} {H.m == doubling_double_sum(m)}")
    return rows


def grid_rows(cfg: TrendConfig) -> list[str]:
    rows = []
    for m in cfg.grid_m:
        H = edge_minimal_grid(m, 3)
        r = Fraction(H.m, comb(H.n, 2))
        rows.append(f"{m:>3} {H.n:>5} {H.m:>7} {str(r):>10} {float(r):.4f} {H.m == grid_edge_count(m, 3)}")
    return rows


def matching_rows(cfg: TrendConfig) -> list[str]:
    rows = []
    for n in cfg.matching_n:
        H = edge_maximal_matching_tree(n)
        r = Fraction(H.m, comb(n, 2))
        rows.append(f"{n:>3} {H.n:>5} {H.m:>7} {str(r):>10} {float(r):.4f} {H.m == n * (n - 2) // 4}")
    return rows


def partition_rows(cfg: TrendConfig) -> list[str]:
    rows = []
    for n in cfg.partition_n:
        H = labelled_partition_hypertree(n, 3)
        r = Fraction(H.m, comb(H.n, 2))
        predicted = comb(n, 2) + max(0, class_count(n, 2) - 2)
        rows.append(f"{n:>3} {H.n:>5} {H.m:>7} {str(r):>10} {float(r):.4f} {H.m == predicted}")
    return rows


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-doubling-m", type=int, default=5)
    args = p.parse_args(argv)
    cfg = TrendConfig(doubling_m=tuple(range(3, args.max_doubling_m + 1)))
    header = "  p     n       m      ratio  float  formula-agrees"
    print(_table("4-uniform ordered extension of doubling STS, m / C(n,3), limit 2/7", header, doubling_rows(cfg)))
    print(_table("3-uniform edge-minimal grid, m / C(n,2), limit 1/2", header, grid_rows(cfg)))
    print(_table("3-uniform edge-maximal matching tree, m / C(n,2), limit 1/2", header, matching_rows(cfg)))
    print(_table("3-uniform labelled partition hypertree, m / C(n,2)", header, partition_rows(cfg)))


if __name__ == "__main__":
    main()
