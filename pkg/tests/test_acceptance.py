"""Exit criteria.  Each test records one PASS/FAIL line, printed at the end of the run."""
import functools
import math
import random
import statistics
import time
from fractions import Fraction

from bddkenum.checks import run_checks
from bddkenum.counting import count_models, gen_poly, node_probabilities
from bddkenum.enumerators import (apply_and, exactly_k_bdd, method1_sieve,
                                  method2_enumerate, method3_enumerate,
                                  method3_run, path_dnf)
from bddkenum.oracle import brute_force, random_bdd
from bddkenum.rows import format_row
from bddkenum.schedule import CardSet, compute_card1, compute_card2

from conftest import ACCEPTANCE_LINES
from test_enumerators import EQ4, TABLE1, TABLE2

PSI_POLY = [1, 8, 30, 70, 113, 132, 113, 70, 30, 8, 1]
I = CardSet.interval


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                ACCEPTANCE_LINES.append(f"FAIL criterion {number}: {title}")
                raise
            ACCEPTANCE_LINES.append(f"PASS criterion {number}: {title}")
        return run
    return wrap


def best_time(fn, repeat=5):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def named(bdd, mapping):
    return {bdd.name(a): v for a, v in mapping.items() if a >= 0}


@criterion(0, "psi fixture reproduces p(a..f) = 1/2,1/2,1/4,5/8,1/2,9/16")
def test_fixture_probabilities(psi):
    p = named(psi, node_probabilities(psi))
    assert p == {"a": Fraction(1, 2), "b": Fraction(1, 2), "c": Fraction(1, 4),
                 "d": Fraction(5, 8), "e": Fraction(1, 2), "f": Fraction(9, 16)}


@criterion(1, "count_models(psi) = 576 in under 10 ms")
def test_count_models(psi):
    assert count_models(psi) == 576
    assert best_time(lambda: count_models(psi)) < 0.010


@criterion(2, "gen_poly(psi) = [1,8,30,70,113,132,113,70,30,8,1], sum 576")
def test_gen_poly(psi):
    poly = gen_poly(psi)
    assert poly == PSI_POLY
    assert sum(poly) == 576


@criterion(3, "card1 of a..f = [0,3],[1,3],[2,4],[0,7],[0,8],[0,10]")
def test_card1(psi):
    assert named(psi, compute_card1(psi)) == {
        "a": I(0, 3), "b": I(1, 3), "c": I(2, 4),
        "d": I(0, 7), "e": I(0, 8), "f": I(0, 10)}


@criterion(4, "card2 for k=4: f{4} e[3,4] d[1,3] c{2} b[1,3] a[0,3]")
def test_card2(psi):
    assert named(psi, compute_card2(psi, 4)) == {
        "f": CardSet.of([4]), "e": I(3, 4), "d": I(1, 3),
        "c": CardSet.of([2]), "b": I(1, 3), "a": I(0, 3)}


@criterion(5, "path_dnf(psi) is exactly the four 012-rows of the example")
def test_path_dnf(psi):
    rows = path_dnf(psi)
    assert len(rows) == 4
    assert {format_row(r, count=False) for r in rows} == EQ4


@criterion(6, "method 1: k=4 gives rows of size {35,21,56,1}; k=8 drops x1=x3=x7=0 row")
def test_method1(psi):
    rows = method1_sieve(psi, 4)
    assert len(rows) == 4
    assert sorted(r.cardinality for r in rows) == [1, 21, 35, 56]
    assert rows.cardinality == 113
    rows8 = method1_sieve(psi, 8)
    assert not any(r.tokens[0] == r.tokens[2] == r.tokens[6] == 0 for r in rows8)


@criterion(7, "method 3 on psi, k=4: disjoint, fixed weight, 113, oracle set, weight-trimmed rows at d and e, < 1 s")
def test_method3(psi):
    elapsed = best_time(lambda: method3_run(psi, 4), repeat=3)
    run = method3_run(psi, 4)
    rows = run.rows
    assert rows.pairwise_disjoint()
    assert all(r.weight == 4 for r in rows)
    assert rows.cardinality == 113
    want = set(brute_force(psi).models_of_weight(4))
    got = rows.expand()
    assert len(got) == len(set(got)) and set(got) == want
    d, e = psi.node_id("d"), psi.node_id("e")
    assert {(format_row(r, count=False), w) for r, w in run.tables[d].entries} == TABLE1
    assert {(format_row(r, count=False), w) for r, w in run.tables[e].entries} == TABLE2
    assert elapsed < 1.0


@criterion(8, "method 2: psi AND exactly-4 has 113 models = oracle; exactly_k_bdd(7,3) 35 models, <= 20 nodes")
def test_method2(psi):
    b3 = apply_and(psi, exactly_k_bdd(10, 4))
    assert count_models(b3) == 113
    streamed = list(method2_enumerate(psi, 4))
    assert len(streamed) == 113
    assert set(streamed) == set(brute_force(psi).models_of_weight(4))
    b = exactly_k_bdd(7, 3)
    assert count_models(b) == 35
    assert b.size <= 20


def property_instances(count=200, seed=20261016):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(4, 14)
        yield random_bdd(n, rng.randint(1, 3 * n), rng.getrandbits(32))


@criterion(9, ">= 200 random BDDs, n in [4,14], all k: oracle = gen_poly = methods 1/2/3, card1; < 60 s")
def test_property_suite():
    t0 = time.perf_counter()
    done = 0
    for bdd in property_instances():
        failures = [r.line() for r in run_checks(bdd) if not r.ok]
        assert not failures, (bdd.to_text(), failures)
        done += 1
    assert done >= 200
    assert time.perf_counter() - t0 < 60


def pick_k(bdd, cap=10**4):
    """Weight with the most models not exceeding ``cap``."""
    poly = gen_poly(bdd)
    cands = [(c, k) for k, c in enumerate(poly) if 0 < c <= cap]
    return max(cands)[1] if cands else None


def timed_family(instances):
    """(s, n, rows, seconds) per instance, skipping those with no small k."""
    out = []
    for bdd in instances:
        k = pick_k(bdd)
        if k is None:
            continue
        rows = method3_enumerate(bdd, k)
        assert rows.cardinality == gen_poly(bdd)[k]
        t = best_time(lambda: method3_enumerate(bdd, k), repeat=3)
        out.append((bdd.size, bdd.nvars, len(rows), t))
    return out


def loglog_slope(xs, ys):
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx, my = statistics.fmean(lx), statistics.fmean(ly)
    return (sum((a - mx) * (b - my) for a, b in zip(lx, ly))
            / sum((a - mx) ** 2 for a in lx))


@criterion(10, "scaling smoke test: polynomial growth in s and n, n=60 with 2^60 space stays fast")
def test_scaling():
    # growing s at n = 60
    by_s = {}
    for budget in (15, 30, 60, 110):
        inst = []
        for seed in range(40):
            b = random_bdd(60, budget, seed)
            if b.size <= 100:
                inst.append(b)
            if len(inst) == 4:
                break
        fam = timed_family(inst)
        assert fam
        by_s[statistics.fmean(s for s, *_ in fam)] = (
            sum(t for *_, t in fam), max(r for _, _, r, _ in fam))
    # growing n at a fixed node budget
    by_n = {}
    for n in (15, 30, 60, 120):
        fam = timed_family(random_bdd(n, 40, seed) for seed in range(4))
        assert fam
        by_n[n] = sum(t for *_, t in fam)

    for total, rows in by_s.values():
        assert rows <= 10**4
        assert total < 20.0
    slope_s = loglog_slope(list(by_s), [t for t, _ in by_s.values()])
    slope_n = loglog_slope(list(by_n), list(by_n.values()))
    print(f"method-3 time ~ s^{slope_s:.2f} at n=60, ~ n^{slope_n:.2f} at 40 nodes")
    assert slope_s <= 3.0
    assert slope_n <= 3.0
