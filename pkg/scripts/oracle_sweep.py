"""Seeded sweep comparing the optimized searches with brute-force enumeration.

Draws random k-uniform hypergraphs, runs every pair query and the semicycle
query both ways, and prints a one-line summary per (k, n) cell.
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from hypertrees.core import random_hypergraph
from hypertrees.search import oracle_mismatches


@dataclass
class SweepConfig:
    seed: int = 0
    per_cell: int = 100
    k_values: tuple[int, ...] = (3, 4)
    n_values: tuple[int, ...] = (5, 6, 7)
    max_edges: int = 10


def sweep(cfg: SweepConfig) -> int:
    rng = random.Random(cfg.seed)
    total_bad = 0
    print(f"seed {cfg.seed}")
    for k in cfg.k_values:
        for n in cfg.n_values:
            if n < k:
                continue
            t0 = time.perf_counter()
            bad = 0
            for _ in range(cfg.per_cell):
                H = random_hypergraph(rng, n, k, rng.randint(0, cfg.max_edges))
                problems = oracle_mismatches(H)
                if problems:
                    bad += 1
                    print(f"  k={k} n={n} edges={H.edges}: {problems[0]}")
            total_bad += bad
            print(f"k={k} n={n}: {cfg.per_cell} instances, {bad} mismatched, {time.perf_counter() - t0:.2f}s")
    return total_bad


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--per-cell", type=int, default=100)
    p.add_argument("--max-edges", type=int, default=10)
    args = p.parse_args(argv)
    bad = sweep(SweepConfig(seed=args.seed, per_cell=args.per_cell, max_edges=args.max_edges))
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
