"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on usage errors, 3 when a search exceeds its resource cap.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from . import bounds, constructions as cons, designs, partition, search, stars
from .core import Hypergraph, parse, random_hypergraph, serialize, serialize_family, star, tight_path
from .errors import HypertreeError, NotAHypertree, Not2Hypertree, ResourceCap

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

FAMILIES = (
    "labelled-partition",
    "ordered-extension",
    "four-uniform-doubling",
    "edge-minimal-grid",
    "edge-maximal-matching",
    "glue",
    "sts-doubling",
    "steiner-s23",
    "tight-path",
    "star",
    "matching",
)


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs {', '.join(missing)}")


def _read(path: str) -> Hypergraph:
    return parse(Path(path).read_text())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _generate(args) -> tuple[Hypergraph, int | None]:
    f = args.family
    Spec, Fam = cons.ConstructionSpec, cons.Family
    if f == "labelled-partition":
        _need(args, "n", "k")
        spec = Spec(Fam.LABELLED_PARTITION, {"n": args.n, "k": args.k})
    elif f == "ordered-extension":
        _need(args, "design")
        G = _read(args.design)
        perm = [int(x) for x in args.perm.replace(",", " ").split()] if args.perm else list(G.vertices)
        spec = Spec(Fam.ORDERED_EXTENSION, {"G": G, "perm": perm})
    elif f == "four-uniform-doubling":
        _need(args, "m")
        spec = Spec(Fam.FOUR_UNIFORM_DOUBLING, {"m": args.m})
    elif f == "edge-minimal-grid":
        _need(args, "m", "k")
        spec = Spec(Fam.EDGE_MINIMAL_GRID, {"m": args.m, "k": args.k})
    elif f == "edge-maximal-matching":
        _need(args, "n")
        spec = Spec(Fam.EDGE_MAXIMAL_MATCHING, {"n": args.n})
    elif f == "glue":
        _need(args, "base", "steiner_n")
        spec = Spec(Fam.GLUING, {"base": _read(args.base), "steiner": designs.steiner_s23(args.steiner_n)})
    elif f == "sts-doubling":
        _need(args, "m")
        return designs.doubling_sts(args.m).blocks, None
    elif f == "steiner-s23":
        _need(args, "n")
        return designs.steiner_s23(args.n).blocks, None
    elif f == "tight-path":
        _need(args, "n", "k")
        return tight_path(args.n, args.k), None
    elif f == "star":
        _need(args, "n", "k")
        return star(args.n, args.k), None
    else:
        _need(args, "n")
        return cons.perfect_matching(args.n), None
    H = cons.build(spec)
    return H, cons.predicted_edge_count(spec)


def cmd_generate(args) -> int:
    H, predicted = _generate(args)
    _emit(serialize(H), args.output)
    note = f"{args.family}: k={H.k} n={H.n} m={H.m}"
    if predicted is not None:
        note += f" predicted={predicted} {'MATCH' if predicted == H.m else 'MISMATCH'}"
    print(note, file=sys.stderr if not args.output else sys.stdout)
    return EXIT_OK if predicted in (None, H.m) else EXIT_FAIL


def _report(name: str, verdict: search.Verdict) -> bool:
    print(f"CHECK {name} {'PASS' if verdict.ok else 'FAIL'}")
    if verdict.witness is not None:
        print(f"WITNESS {verdict.witness.describe()}")
    return verdict.ok


def cmd_verify(args) -> int:
    H = _read(args.input)
    cap = args.max_nodes
    ok = True
    if args.replay:
        w = search.parse_witness(args.replay)
        good = w.replay(H)
        print(f"REPLAY {w.describe()} {'VALID' if good else 'INVALID'}")
        ok &= good
    wants_default = not (args.replay or args.l_hypertree is not None or args.edge_minimal
                         or args.edge_maximal or args.isolated)
    if args.hypertree or wants_default:
        ok &= _report("hypertree", search.is_hypertree(H, max_nodes=cap))
    if args.l_hypertree is not None:
        verdict = search.is_l_hypertree(H, args.l_hypertree, max_nodes=cap)
        ok &= _report(f"l-hypertree({args.l_hypertree})", verdict)
    checks = []
    if args.edge_minimal or args.isolated:
        checks.append(("edge-minimal", search.is_edge_minimal))
    if args.edge_maximal or args.isolated:
        checks.append(("edge-maximal", search.is_edge_maximal))
    for name, fn in checks:
        try:
            ok &= _report(name, fn(H, jobs=args.jobs, max_nodes=cap))
        except NotAHypertree as exc:
            print(f"CHECK {name} FAIL")
            print(f"WITNESS {exc}")
            ok = False
    return EXIT_OK if ok else EXIT_FAIL


def cmd_stars(args) -> int:
    H = _read(args.input)
    try:
        D = stars.decompose_stars(H)
    except Not2Hypertree as exc:
        print(f"CHECK star-decomposition FAIL ({exc})")
        return EXIT_FAIL
    for s in D.stars:
        print(f"STAR kernel={' '.join(map(str, s.kernel))} size={len(s.edges)}")
    holds, ledger = stars.check_star_equation(H, D)
    print(ledger.render())
    print(f"CHECK star-equation {'PASS' if holds else 'FAIL'}")
    return EXIT_OK if holds else EXIT_FAIL


def cmd_bounds(args) -> int:
    H = _read(args.input)
    flags = bounds.compute_flags(H, jobs=args.jobs)
    rep = bounds.audit(H, flags, instance=Path(args.input).name)
    print(rep.render())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_partition(args) -> int:
    P = partition.build_partition(args.n, args.k)
    rep = partition.verify_partition(P, args.k)
    print(f"partition n={P.n} lambda={P.lam} classes={P.count} bound={partition.count_bound(P.n, args.k)}")
    for i, cls in enumerate(P.classes, start=1):
        print(f"CLASS {i} size={len(cls)}")
    print("\n".join(rep.lines()))
    if args.output:
        Path(args.output).write_text(serialize_family(P.n, P.lam, P.as_hypergraphs()))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_oracle_compare(args) -> int:
    corpus: list[tuple[str, Hypergraph]] = []
    if args.input:
        corpus.append((args.input, _read(args.input)))
    if args.random:
        print(f"seed {args.seed}")
        rng = random.Random(args.seed)
        for i in range(args.random):
            n = rng.randint(args.k, args.n)
            m = rng.randint(0, args.max_edges)
            corpus.append((f"random#{i}", random_hypergraph(rng, n, args.k, m)))
    if not corpus:
        raise UsageError("oracle-compare needs an input file or --random COUNT")
    bad = 0
    for name, H in corpus:
        problems = search.oracle_mismatches(H, args.oracle_limit)
        bad += bool(problems)
        for p in problems:
            print(f"MISMATCH {name} {p}")
    print(f"compared {len(corpus)} instances, {bad} with mismatches")
    return EXIT_OK if bad == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypertrees", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-nodes", type=int, default=search.DEFAULT_MAX_NODES,
                   help="search node budget (default %(default)s)")
    p.add_argument("--jobs", type=int, default=int(os.environ.get("HYPERTREES_JOBS", 1)),
                   help="worker processes for edge sweeps (default: $HYPERTREES_JOBS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a construction and write it as .khg")
    g.add_argument("family", choices=FAMILIES)
    for name in ("n", "k", "m", "steiner-n"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--design", help=".khg file with the Steiner system to extend")
    g.add_argument("--perm", help="vertex order for ordered-extension")
    g.add_argument("--base", help=".khg file with the base hypertree to glue")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="run hypertree predicates and print witnesses")
    v.add_argument("input")
    v.add_argument("--hypertree", action="store_true")
    v.add_argument("--l-hypertree", type=int, metavar="L")
    v.add_argument("--edge-minimal", action="store_true")
    v.add_argument("--edge-maximal", action="store_true")
    v.add_argument("--isolated", action="store_true")
    v.add_argument("--replay", metavar="WITNESS", help="re-check a printed witness")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stars", help="star decomposition and star-equation ledger")
    s.add_argument("input")
    s.set_defaults(func=cmd_stars)

    b = sub.add_parser("bounds", help="audit the edge count against every applicable bound")
    b.add_argument("input")
    b.set_defaults(func=cmd_bounds)

    q = sub.add_parser("partition", help="build and verify the recursive (k-1)-subset partition")
    q.add_argument("n", type=int)
    q.add_argument("k", type=int)
    q.add_argument("-o", "--output", help="write the family as khgpart")
    q.set_defaults(func=cmd_partition)

    o = sub.add_parser("oracle-compare", help="optimized searches vs brute-force enumeration")
    o.add_argument("input", nargs="?")
    o.add_argument("--random", type=int, default=0, metavar="COUNT")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--n", type=int, default=7, help="max vertex count of random instances")
    o.add_argument("--k", type=int, default=3)
    o.add_argument("--max-edges", type=int, default=10)
    o.add_argument("--oracle-limit", type=int, default=search.DEFAULT_ORACLE_LIMIT,
                   help="node cap for brute-force enumeration (default %(default)s)")
    o.set_defaults(func=cmd_oracle_compare)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.max_nodes is not None and args.max_nodes <= 0:
            raise UsageError("--max-nodes must be positive")
        if getattr(args, "oracle_limit", 1) <= 0:
            raise UsageError("--oracle-limit must be positive")
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hypertrees: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCap as exc:
        print(f"RESOURCE-CAP {exc}", file=sys.stderr)
        return EXIT_CAP
    except (HypertreeError, OSError, ValueError) as exc:
        print(f"hypertrees: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
