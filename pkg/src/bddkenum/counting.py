"""Exact model counts and per-weight counts of a BDD.

Everything is integer arithmetic.  For a node ``a`` the quantities refer to
the subfunction on variables ``var(a)..n``; a son that skips ``g`` levels is
scaled by ``2**g`` (plain counts) or multiplied by ``(1+z)**g`` (weight
polynomials).
"""
from __future__ import annotations

from fractions import Fraction

from .bdd import BOT, TOP, Bdd


def node_counts(bdd: Bdd) -> dict[int, int]:
    """Model count of every node's subfunction over its own trailing variables."""
    count = {TOP: 1, BOT: 0}
    for a in bdd.shelling_from_below():
        node = bdd.nodes[a]
        total = 0
        for son in (node.lo, node.hi):
            gap = bdd.var(son) - node.var - 1
            total += count[son] << gap
        count[a] = total
    return count


def count_models(bdd: Bdd) -> int:
    return node_counts(bdd)[bdd.root] << (bdd.var(bdd.root) - 1)


def node_probabilities(bdd: Bdd) -> dict[int, Fraction]:
    """Acceptance probability of each node's subfunction."""
    counts = node_counts(bdd)
    return {a: Fraction(c, 1 << (bdd.nvars + 1 - bdd.var(a)))
            for a, c in counts.items()}


def acceptance_probability(bdd: Bdd) -> Fraction:
    return Fraction(count_models(bdd), 1 << bdd.nvars)


def times_one_plus_z(poly: list[int], m: int) -> list[int]:
    """Multiply ``poly`` by ``(1+z)**m`` through ``m`` convolutions with [1, 1]."""
    poly = list(poly)
    for _ in range(m):
        poly = [a + b for a, b in zip(poly + [0], [0] + poly)]
    return poly


def _add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def node_polys(bdd: Bdd) -> dict[int, list[int]]:
    """Weight-count polynomial of each node's subfunction.

    The list for node ``a`` has ``n - var(a) + 2`` coefficients.
    """
    polys = {TOP: [1], BOT: [0]}
    for a in bdd.shelling_from_below():
        node = bdd.nodes[a]
        length = bdd.nvars - node.var + 2
        poly = [0] * length
        for bit, son in ((0, node.lo), (1, node.hi)):
            if son == BOT:
                continue  # exponent irrelevant, contributes 0
            gap = bdd.var(son) - node.var - 1
            term = times_one_plus_z(polys[son], gap)
            if bit:
                term = [0] + term
            poly = _add(poly, term)
        polys[a] = poly[:length] + [0] * (length - len(poly))
    return polys


def gen_poly(bdd: Bdd) -> list[int]:
    """Coefficients ``N_0..N_n`` where ``N_k`` counts models with ``k`` ones."""
    n = bdd.nvars
    if bdd.root == BOT:
        return [0] * (n + 1)
    poly = node_polys(bdd)[bdd.root]
    poly = times_one_plus_z(poly, bdd.var(bdd.root) - 1)
    return poly + [0] * (n + 1 - len(poly))


def count_k(bdd: Bdd, k: int) -> int:
    if not 0 <= k <= bdd.nvars:
        raise ValueError(f"k={k} outside [0,{bdd.nvars}]")
    return gen_poly(bdd)[k]
