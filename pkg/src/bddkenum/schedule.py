"""Cardinality sets and the enumeration schedule.

``card1[a]`` holds every weight ``i`` for which the subfunction at ``a`` has
a model with ``i`` ones.  ``card2[a]`` is the subset of those weights that is
actually needed to assemble the models of weight ``k`` of the whole function.
Both are bitsets stored in Python ints (bit ``i`` set means weight ``i``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .bdd import BOT, TOP, Bdd


@dataclass(frozen=True)
class CardSet:
    bits: int = 0

    @classmethod
    def of(cls, items: Iterable[int]) -> CardSet:
        bits = 0
        for i in items:
            bits |= 1 << i
        return cls(bits)

    @classmethod
    def interval(cls, lo: int, hi: int) -> CardSet:
        if hi < lo:
            return cls(0)
        return cls(((1 << (hi - lo + 1)) - 1) << lo)

    def __contains__(self, i: int) -> bool:
        return i >= 0 and (self.bits >> i) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits, i = self.bits, 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: CardSet) -> CardSet:
        return CardSet(self.bits | other.bits)

    def __and__(self, other: CardSet) -> CardSet:
        return CardSet(self.bits & other.bits)

    def __le__(self, other: CardSet) -> bool:
        return self.bits & ~other.bits == 0

    def intervals(self) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        for i in self:
            if out and out[-1][1] == i - 1:
                out[-1] = (out[-1][0], i)
            else:
                out.append((i, i))
        return out

    def __str__(self) -> str:
        if not self.bits:
            return "{}"
        return ",".join(f"[{a},{b}]" for a, b in self.intervals())


def shift_window(bits: int, lo: int, hi: int) -> int:
    """Union of ``j + S`` for ``j`` in ``[lo, hi]``."""
    out = 0
    for j in range(lo, hi + 1):
        out |= bits << j
    return out


def unshift_window(bits: int, lo: int, hi: int) -> int:
    """Union of ``S - j`` for ``j`` in ``[lo, hi]``, dropping negatives."""
    out = 0
    for j in range(lo, hi + 1):
        out |= bits >> j
    return out


def compute_card1(bdd: Bdd) -> dict[int, CardSet]:
    bits = {TOP: 1, BOT: 0}
    for a in bdd.shelling_from_below():
        node = bdd.nodes[a]
        gap_lo = bdd.var(node.lo) - node.var - 1
        gap_hi = bdd.var(node.hi) - node.var - 1
        bits[a] = (shift_window(bits[node.lo], 0, gap_lo)
                   | shift_window(bits[node.hi], 1, 1 + gap_hi))
    return {a: CardSet(b) for a, b in bits.items()}


def function_card1(bdd: Bdd, card1: dict[int, CardSet] | None = None) -> CardSet:
    """Attainable weights of the whole function, free prefix included."""
    card1 = compute_card1(bdd) if card1 is None else card1
    prefix = bdd.var(bdd.root) - 1
    return CardSet(shift_window(card1[bdd.root].bits, 0, prefix))


def compute_card2(bdd: Bdd, k: int,
                  card1: dict[int, CardSet] | None = None) -> dict[int, CardSet]:
    """Schedule sets for every branching node (empty for unused nodes).

    The variables above the root, if any, act as a virtual upper cover with
    no branch bit.
    """
    if not 0 <= k <= bdd.nvars:
        raise ValueError(f"k={k} outside [0,{bdd.nvars}]")
    card1 = compute_card1(bdd) if card1 is None else card1
    need = {a: 0 for a in range(bdd.size)}
    root = bdd.root
    if root >= 0:
        need[root] = unshift_window(1 << k, 0, bdd.var(root) - 1)
    card2: dict[int, CardSet] = {}
    for a in bdd.shelling_from_above():
        mine = need[a] & card1[a].bits
        card2[a] = CardSet(mine)
        if not mine:
            continue
        node = bdd.nodes[a]
        for bit, son in ((0, node.lo), (1, node.hi)):
            if son < 0:
                continue
            gap = bdd.var(son) - node.var - 1
            need[son] |= unshift_window(mine, bit, bit + gap)
    return card2


@dataclass(frozen=True)
class Schedule:
    target_k: int
    card1: dict[int, CardSet]
    card2: dict[int, CardSet]
    feasible: bool


def make_schedule(bdd: Bdd, k: int) -> Schedule:
    card1 = compute_card1(bdd)
    return Schedule(k, card1, compute_card2(bdd, k, card1),
                    k in function_card1(bdd, card1))
