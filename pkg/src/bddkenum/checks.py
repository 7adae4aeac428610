"""Cross-validation of every counting and enumeration route against the oracle."""
from __future__ import annotations

from dataclasses import dataclass

from .bdd import Bdd
from .counting import count_models, gen_poly
from .enumerators import method1_sieve, method2_enumerate, method3_run
from .oracle import DEFAULT_LIMIT, brute_force, node_weight_sets
from .schedule import compute_card1


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def run_checks(bdd: Bdd, kmax: int | None = None, limit: int = DEFAULT_LIMIT,
               expected_models: int | None = None,
               expected_poly: list[int] | None = None) -> list[CheckResult]:
    """Run every check; ``expected_*`` compare against known reference values."""
    n = bdd.nvars
    kmax = n if kmax is None else min(kmax, n)
    report = brute_force(bdd, limit)
    results = []

    def check(name, ok, detail=""):
        results.append(CheckResult(name, bool(ok), "" if ok else detail))

    total = count_models(bdd)
    check("count_models", total == report.total_models,
          f"count_models={total} oracle={report.total_models}")
    poly = gen_poly(bdd)
    check("gen_poly", poly == report.per_weight,
          f"gen_poly={poly} oracle={report.per_weight}")

    if expected_models is not None:
        check("expected models", total == expected_models,
              f"count_models={total} expected={expected_models}")
    if expected_poly is not None:
        check("expected per-weight counts", poly == expected_poly,
              f"gen_poly={poly} expected={expected_poly}")

    card1 = compute_card1(bdd)
    truth = node_weight_sets(bdd)
    bad = [bdd.name(a) for a in range(bdd.size) if set(card1[a]) != truth[a]]
    check("card1", not bad, f"mismatch at nodes {bad}")

    by_weight: dict[int, list] = {k: [] for k in range(n + 1)}
    for u in report.models:
        by_weight[sum(u)].append(u)

    for k in range(kmax + 1):
        want = sorted(by_weight[k])
        m1 = method1_sieve(bdd, k)
        check(f"method1 k={k}", sorted(m1.expand()) == want
              and m1.cardinality == len(want),
              f"{m1.cardinality} models vs oracle {len(want)}")
        m2 = sorted(method2_enumerate(bdd, k))
        check(f"method2 k={k}", m2 == want,
              f"{len(m2)} models vs oracle {len(want)}")
        run = method3_run(bdd, k)
        m3 = run.rows
        fixed = all(r.weight == k for r in m3)
        check(f"method3 k={k}", sorted(m3.expand()) == want
              and m3.cardinality == len(want) and fixed,
              f"{m3.cardinality} models vs oracle {len(want)}, "
              f"fixed-weight={fixed}")
        check(f"method3 disjoint k={k}", m3.pairwise_disjoint(),
              "overlapping rows")
    return results
