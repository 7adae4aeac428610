"""Time the schedule-driven enumerator on random diagrams of growing size.

For each instance the weight k is the one with the most models not above
--cap, so the output stays small while 2**n is huge.  Prints one line per
instance and the ratio of measured time to s^2 n^2 log n + rows*s*n.

    python scripts/scaling.py --n 60 --budgets 15 30 60 110 --seeds 4
"""
import argparse
import math
import time

from bddkenum.counting import gen_poly
from bddkenum.enumerators import method3_enumerate
from bddkenum.oracle import random_bdd


def best_time(fn, repeat=3):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[60])
    ap.add_argument("--budgets", type=int, nargs="+", default=[15, 30, 60, 110])
    ap.add_argument("--seeds", type=int, default=4)
    ap.add_argument("--cap", type=int, default=10**4)
    args = ap.parse_args()

    print(f"{'n':>4} {'s':>4} {'k':>4} {'models':>7} {'rows':>6} "
          f"{'ms':>9} {'ns/bound':>9}")
    for n in args.n:
        for budget in args.budgets:
            for seed in range(args.seeds):
                bdd = random_bdd(n, budget, seed)
                poly = gen_poly(bdd)
                cands = [(c, k) for k, c in enumerate(poly) if 0 < c <= args.cap]
                if not cands:
                    continue
                models, k = max(cands)
                rows = method3_enumerate(bdd, k)
                t = best_time(lambda: method3_enumerate(bdd, k))
                s = max(bdd.size, 1)
                bound = s * s * n * n * math.log2(n) + len(rows) * s * n
                print(f"{n:>4} {bdd.size:>4} {k:>4} {models:>7} {len(rows):>6} "
                      f"{1e3 * t:>9.3f} {1e9 * t / bound:>9.3f}")


if __name__ == "__main__":
    main()
