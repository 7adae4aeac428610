"""Enumeration of ``Mod(phi)`` and ``Mod(phi, k)`` from a BDD.

* :func:`path_dnf` reads the root-to-TOP paths off as disjoint 012-rows.
* :func:`method1_sieve` filters those rows down to weight ``k``.
* :func:`method2_enumerate` intersects with an exactly-``k`` BDD and lists
  the models one by one.
* :func:`method3_enumerate` follows the card1/card2 schedule and builds
  fixed-weight 012g-rows bottom-up, sharing each ``(node, weight)`` result
  among all parents.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .bdd import BOT, TOP, Bdd, Node
from .rows import (DONTCARE, EMPTY_ROW, ONE, Row, RowSet, concat, gap_gadget,
                   weight_block)
from .schedule import make_schedule


def _check_k(bdd: Bdd, k: int) -> None:
    if not 0 <= k <= bdd.nvars:
        raise ValueError(f"k={k} outside [0,{bdd.nvars}]")


# -- orthogonal DNF and the sieve ---------------------------------------

def path_dnf(bdd: Bdd) -> RowSet:
    n = bdd.nvars
    rows = []
    tokens = [DONTCARE] * n

    def walk(v):
        if v == TOP:
            rows.append(Row(tuple(tokens)))
            return
        if v == BOT:
            return
        node = bdd.nodes[v]
        for bit, son in ((0, node.lo), (1, node.hi)):
            tokens[node.var - 1] = bit
            walk(son)
        tokens[node.var - 1] = DONTCARE

    walk(bdd.root)
    return RowSet(n, rows)


def method1_sieve(bdd: Bdd, k: int) -> RowSet:
    _check_k(bdd, k)
    out = []
    for row in path_dnf(bdd):
        fixed_ones = row.tokens.count(ONE)
        free = [i for i, t in enumerate(row.tokens) if t == DONTCARE]
        need = k - fixed_ones
        if not 0 <= need <= len(free):
            continue
        tokens = list(row.tokens)
        block = weight_block(len(free), need)
        for pos, tok in zip(free, block.tokens):
            tokens[pos] = tok
        out.append(Row(tuple(tokens), block.counts))
    return RowSet(bdd.nvars, out)


# -- second method: exactly-k BDD, conjunction, one-by-one listing ------

class _Builder:
    """Collects hash-consed nodes in sons-before-parents order."""

    def __init__(self):
        self.nodes: list[Node] = []
        self.unique: dict[Node, int] = {}

    def mk(self, var: int, lo: int, hi: int) -> int:
        if lo == hi:
            return lo
        key = Node(var, lo, hi)
        u = self.unique.get(key)
        if u is None:
            u = self.unique[key] = len(self.nodes)
            self.nodes.append(key)
        return u

    def build(self, nvars: int, root: int) -> Bdd:
        return Bdd(nvars, tuple(self.nodes), root)


def exactly_k_bdd(n: int, k: int) -> Bdd:
    """BDD over ``n`` variables accepting exactly the bitstrings with ``k`` ones.

    States are (position, ones so far); states that cannot reach ``k`` are
    folded into ``F``.
    """
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0,{n}]")
    b = _Builder()
    # level[j] = node for position i having seen j ones
    below = {k: TOP}
    for i in range(n, 0, -1):
        remaining = n - i + 1
        level = {}
        for j in range(max(0, k - remaining), min(k, i - 1) + 1):
            lo = below.get(j, BOT)
            hi = below.get(j + 1, BOT)
            level[j] = b.mk(i, lo, hi)
        below = level
    return b.build(n, below.get(0, BOT))


def apply_and(b1: Bdd, b2: Bdd) -> Bdd:
    if b1.nvars != b2.nvars:
        raise ValueError("diagrams have different numbers of variables")
    b = _Builder()
    memo: dict[tuple[int, int], int] = {}

    def cofactors(bdd, u, var):
        if u >= 0 and bdd.nodes[u].var == var:
            return bdd.nodes[u].lo, bdd.nodes[u].hi
        return u, u

    def rec(u, v):
        if u == BOT or v == BOT:
            return BOT
        if u == TOP and v == TOP:
            return TOP
        key = (u, v)
        if key in memo:
            return memo[key]
        var = min(b1.var(u), b2.var(v))
        u0, u1 = cofactors(b1, u, var)
        v0, v1 = cofactors(b2, v, var)
        lo = rec(u0, v0)
        hi = rec(u1, v1)
        r = memo[key] = b.mk(var, lo, hi)
        return r

    return b.build(b1.nvars, rec(b1.root, b2.root))


def iter_models(bdd: Bdd) -> Iterator[tuple[int, ...]]:
    """All models of ``bdd``, path by path with the 0-branch first."""
    for row in path_dnf(bdd):
        choices = [(0, 1) if t == DONTCARE else (t,) for t in row.tokens]
        yield from itertools.product(*choices)


def method2_enumerate(bdd: Bdd, k: int) -> Iterator[tuple[int, ...]]:
    _check_k(bdd, k)
    return iter_models(apply_and(bdd, exactly_k_bdd(bdd.nvars, k)))


# -- third method: schedule-driven compressed enumeration ---------------

@dataclass(frozen=True)
class WeightedRowSet:
    """Rows over a node's trailing variables, each tagged with its weight."""

    width: int
    entries: tuple[tuple[Row, int], ...]

    @property
    def cardinality(self) -> int:
        return sum(r.cardinality for r, _ in self.entries)

    def rows(self) -> RowSet:
        return RowSet(self.width, [r for r, _ in self.entries])


@dataclass
class Method3Result:
    rows: RowSet
    # node -> WeightedRowSet over that node's card2 weights
    tables: dict[int, WeightedRowSet]
    # every (node, weight) request issued for an attainable weight
    requests: set[tuple[int, int]]


def method3_run(bdd: Bdd, k: int) -> Method3Result:
    _check_k(bdd, k)
    sched = make_schedule(bdd, k)
    memo: dict[int, dict[int, list[Row]]] = {}
    requests: set[tuple[int, int]] = set()

    def sub(son: int, w: int) -> list[Row]:
        if son == TOP:
            return [EMPTY_ROW] if w == 0 else []
        if son == BOT or w < 0:
            return []
        if w in sched.card1[son]:
            requests.add((son, w))
        return memo.get(son, {}).get(w, [])

    for a in bdd.shelling_from_below():
        weights = sched.card2[a]
        if not weights:
            continue
        node = bdd.nodes[a]
        by_weight: dict[int, list[Row]] = {}
        for i in weights:
            out = []
            for bit, son in ((0, node.lo), (1, node.hi)):
                gap = bdd.var(son) - node.var - 1
                for w in range(gap + 1):
                    tails = sub(son, i - bit - w)
                    if not tails:
                        continue
                    head = gap_gadget(bit, gap, w)
                    out.extend(concat(head, t) for t in tails)
            by_weight[i] = out
        memo[a] = by_weight

    rows: list[Row] = []
    if sched.feasible:
        prefix = bdd.var(bdd.root) - 1
        for w in range(min(prefix, k) + 1):
            tails = sub(bdd.root, k - w)
            if tails:
                head = weight_block(prefix, w)
                rows.extend(concat(head, t) for t in tails)

    tables = {
        a: WeightedRowSet(
            bdd.nvars - bdd.nodes[a].var + 1,
            tuple((r, i) for i in sorted(by_weight) for r in by_weight[i]))
        for a, by_weight in memo.items()}
    return Method3Result(RowSet(bdd.nvars, rows), tables, requests)


def method3_enumerate(bdd: Bdd, k: int) -> RowSet:
    return method3_run(bdd, k).rows
