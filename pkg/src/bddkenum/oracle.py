"""Brute-force reference results and seeded random diagrams for testing."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .bdd import BOT, TOP, Bdd, Node

DEFAULT_LIMIT = 20


class OracleLimitError(ValueError):
    pass


@dataclass
class OracleReport:
    n: int
    total_models: int
    per_weight: list[int]
    models: list[tuple[int, ...]] | None = None

    def models_of_weight(self, k: int) -> list[tuple[int, ...]]:
        if self.models is None:
            raise ValueError("report was built without the model list")
        return [u for u in self.models if sum(u) == k]


def brute_force(bdd: Bdd, limit: int = DEFAULT_LIMIT,
                keep_models: bool = True) -> OracleReport:
    """Evaluate ``bdd`` on all ``2**n`` bitstrings."""
    n = bdd.nvars
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds oracle limit {limit}")
    per_weight = [0] * (n + 1)
    models = [] if keep_models else None
    for u in itertools.product((0, 1), repeat=n):
        if bdd.evaluate(u):
            per_weight[sum(u)] += 1
            if keep_models:
                models.append(u)
    return OracleReport(n, sum(per_weight), per_weight, models)


def random_bdd(n: int, nodes: int, seed: int) -> Bdd:
    """Seeded random ordered BDD with at most ``nodes`` branching nodes.

    Nodes are laid out bottom-up with non-increasing variable levels.  Son
    choice favours close levels (so short gaps and gaps of 2-3 levels are
    both common) and favours nodes nobody points to yet; nodes unreachable
    from the final root are dropped.
    """
    if n < 1 or nodes < 0:
        raise ValueError("need n >= 1 and nodes >= 0")
    rng = random.Random(seed)
    if nodes == 0:
        return Bdd(n, (), rng.choice((TOP, BOT)))
    levels = sorted((rng.randint(1, n) for _ in range(nodes)), reverse=True)
    built: list[Node] = []
    referenced: set[int] = set()

    def pick(v: int, avoid: int | None = None) -> int:
        cands = [i for i, nd in enumerate(built) if nd.var > v and i != avoid]
        if not cands or rng.random() < 0.1:
            return TOP if rng.random() < 0.6 else BOT
        fresh = [i for i in cands if i not in referenced]
        if fresh and rng.random() < 0.9:
            cands = fresh
        weights = [1.0 / (built[i].var - v) for i in cands]
        return rng.choices(cands, weights)[0]

    for v in levels:
        lo = pick(v)
        hi = pick(v, avoid=lo)
        if hi == lo and lo < 0:
            hi = TOP if lo == BOT else BOT
        referenced.update(s for s in (lo, hi) if s >= 0)
        built.append(Node(v, lo, hi))
    full = Bdd(n, tuple(built), len(built) - 1)
    return full.sub_bdd(full.root)


def node_weight_sets(bdd: Bdd) -> dict[int, set[int]]:
    """Weights attained by each node's subfunction, by exhaustive evaluation.

    The variables above the node are held at zero, which does not matter
    since the node's subdiagram never reads them.
    """
    n = bdd.nvars
    out = {}
    for a in range(bdd.size):
        sub = bdd.sub_bdd(a)
        start = bdd.nodes[a].var - 1
        seen = set()
        for tail in itertools.product((0, 1), repeat=n - start):
            if sub.evaluate((0,) * start + tail):
                seen.add(sum(tail))
        out[a] = seen
    return out
