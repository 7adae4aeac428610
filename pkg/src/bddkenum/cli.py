"""Command-line front end.

    bddkenum count <file> [--per-cardinality]
    bddkenum enumerate <file> -k K [--method 1|2|3] [--format rows|bits]
    bddkenum check <file> [--kmax K] [--limit L] [--expect-models M] [--expect-poly '...']
    bddkenum stats <file> [-k K]
    bddkenum from-cnf <file.cnf> -o <file.bdd>
    bddkenum gen-random -n N --nodes M --seed S -o <file.bdd>
"""
from __future__ import annotations

import argparse
import sys

from .bdd import BddError, read_bdd, write_bdd
from .checks import run_checks
from .cnf import DimacsError, cnf_to_bdd
from .counting import count_models, gen_poly
from .enumerators import method1_sieve, method2_enumerate, method3_enumerate
from .oracle import DEFAULT_LIMIT, OracleLimitError, random_bdd
from .rows import expand
from .schedule import compute_card1, compute_card2


class UsageError(Exception):
    pass


def cmd_count(args, out):
    bdd = read_bdd(args.file)
    print(f"models={count_models(bdd)}", file=out)
    if args.per_cardinality:
        print(" ".join(str(c) for c in gen_poly(bdd)), file=out)
    return 0


def cmd_enumerate(args, out):
    bdd = read_bdd(args.file)
    k = args.k
    if not 0 <= k <= bdd.nvars:
        raise UsageError(f"k={k} outside [0,{bdd.nvars}]")
    fmt = args.format or ("bits" if args.method == 2 else "rows")
    if args.method == 2:
        if fmt == "rows":
            raise UsageError("method 2 lists models one by one; use --format bits")
        models = sorted(method2_enumerate(bdd, k))
        print(f"k={k} models={len(models)}", file=sys.stderr)
        for u in models:
            print("".join(map(str, u)), file=out)
        return 0
    rows = method1_sieve(bdd, k) if args.method == 1 else method3_enumerate(bdd, k)
    if fmt == "rows":
        out.write(rows.to_text(k))
    else:
        print(f"k={k} rows={len(rows)} models={rows.cardinality}",
              file=sys.stderr)
        for u in sorted(u for r in rows for u in expand(r)):
            print("".join(map(str, u)), file=out)
    return 0


def cmd_check(args, out):
    bdd = read_bdd(args.file)
    poly = None
    if args.expect_poly is not None:
        poly = [int(x) for x in args.expect_poly.replace(",", " ").split()]
    results = run_checks(bdd, args.kmax, args.limit,
                         expected_models=args.expect_models, expected_poly=poly)
    for r in results:
        print(r.line(), file=out)
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed} passed, {failed} failed", file=out)
    return 1 if failed else 0


def cmd_stats(args, out):
    bdd = read_bdd(args.file)
    print(f"n={bdd.nvars} s={bdd.size} root={bdd.name(bdd.root)}", file=out)
    card1 = compute_card1(bdd)
    card2 = None
    if args.k is not None:
        if not 0 <= args.k <= bdd.nvars:
            raise UsageError(f"k={args.k} outside [0,{bdd.nvars}]")
        card2 = compute_card2(bdd, args.k, card1)
    for a, node in enumerate(bdd.nodes):
        name = bdd.name(a)
        line = (f"node {name} var={node.var} lo={bdd.name(node.lo)} "
                f"hi={bdd.name(node.hi)} card1({name})={card1[a]}")
        if card2 is not None:
            line += f" card2({name})={card2[a]}"
        print(line, file=out)
    return 0


def cmd_from_cnf(args, out):
    with open(args.file) as fh:
        bdd = cnf_to_bdd(fh.read())
    write_bdd(bdd, args.output)
    print(f"nvars={bdd.nvars} s={bdd.size} models={count_models(bdd)}",
          file=sys.stderr)
    return 0


def cmd_gen_random(args, out):
    bdd = random_bdd(args.n, args.nodes, args.seed)
    write_bdd(bdd, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bddkenum",
        description="Count and enumerate the weight-k models of a BDD.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", help="model count and per-weight counts")
    s.add_argument("file")
    s.add_argument("--per-cardinality", action="store_true")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("enumerate", help="list the models with exactly k ones")
    s.add_argument("file")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--method", type=int, choices=(1, 2, 3), default=3)
    s.add_argument("--format", choices=("rows", "bits"))
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check", help="cross-validate against brute force")
    s.add_argument("file")
    s.add_argument("--kmax", type=int)
    s.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    s.add_argument("--expect-models", type=int,
                   help="reference model count to compare against")
    s.add_argument("--expect-poly",
                   help="reference per-weight counts N_0 .. N_n")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("stats", help="nodes and cardinality sets")
    s.add_argument("file")
    s.add_argument("-k", type=int)
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("from-cnf", help="build a BDD from DIMACS CNF")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_from_cnf)

    s = sub.add_parser("gen-random", help="write a seeded random BDD")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--nodes", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen_random)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (BddError, DimacsError, OracleLimitError, UsageError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
