"""012g-rows: compressed sets of bitstrings with wildcards.

A row has one token per variable position:

* ``ZERO`` / ``ONE`` fix the bit,
* ``DONTCARE`` allows both values,
* a group token ``group_token(g)`` puts the position into group ``g``; the
  positions of group ``g`` must carry exactly ``counts[g]`` ones.

Group ids are relabelled canonically (first appearance, left to right) on
construction, so two rows denoting the same wildcard pattern compare equal.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

ZERO = 0
ONE = 1
DONTCARE = 2
_GROUP_BASE = 3


def group_token(gid: int) -> int:
    return _GROUP_BASE + gid


def is_group(tok: int) -> bool:
    return tok >= _GROUP_BASE


def group_of(tok: int) -> int:
    return tok - _GROUP_BASE


class RowError(ValueError):
    pass


@dataclass(frozen=True)
class Row:
    tokens: tuple[int, ...]
    counts: tuple[int, ...] = ()

    def __post_init__(self):
        tokens = tuple(self.tokens)
        relabel: dict[int, int] = {}
        sizes: list[int] = []
        out = []
        for tok in tokens:
            if is_group(tok):
                g = group_of(tok)
                if g not in relabel:
                    relabel[g] = len(relabel)
                    sizes.append(0)
                sizes[relabel[g]] += 1
                out.append(group_token(relabel[g]))
            elif tok in (ZERO, ONE, DONTCARE):
                out.append(tok)
            else:
                raise RowError(f"bad token {tok!r}")
        if len(relabel) != len(self.counts):
            raise RowError("every group needs exactly one count")
        if relabel and sorted(relabel) != list(range(len(self.counts))):
            raise RowError("group ids must be 0..len(counts)-1")
        counts = [0] * len(relabel)
        for old, new in relabel.items():
            counts[new] = self.counts[old]
        for t, size in zip(counts, sizes):
            if not 1 <= t < size:
                raise RowError(
                    f"group needs 1 <= t < size, got t={t} size={size}")
        object.__setattr__(self, "tokens", tuple(out))
        object.__setattr__(self, "counts", tuple(counts))

    @classmethod
    def fixed(cls, bits: Sequence[int]) -> Row:
        return cls(tuple(bits))

    @classmethod
    def _trusted(cls, tokens: tuple[int, ...], counts: tuple[int, ...]) -> Row:
        # caller guarantees canonical labels and valid counts
        row = object.__new__(cls)
        object.__setattr__(row, "tokens", tokens)
        object.__setattr__(row, "counts", counts)
        return row

    @cached_property
    def _fixed_masks(self) -> tuple[int, int]:
        zeros = ones = 0
        for i, tok in enumerate(self.tokens):
            if tok == ZERO:
                zeros |= 1 << i
            elif tok == ONE:
                ones |= 1 << i
        return zeros, ones

    @property
    def width(self) -> int:
        return len(self.tokens)

    def group_sizes(self) -> list[int]:
        sizes = [0] * len(self.counts)
        for tok in self.tokens:
            if is_group(tok):
                sizes[group_of(tok)] += 1
        return sizes

    @property
    def cardinality(self) -> int:
        free = sum(1 for tok in self.tokens if tok == DONTCARE)
        total = 1 << free
        for size, t in zip(self.group_sizes(), self.counts):
            total *= math.comb(size, t)
        return total

    @property
    def weight(self) -> int | None:
        """Common number of ones of all members, or None if not fixed-weight."""
        if DONTCARE in self.tokens:
            return None
        return self.tokens.count(ONE) + sum(self.counts)

    def __contains__(self, u: Sequence[int]) -> bool:
        return row_contains(self, u)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return expand(self)

    def __str__(self) -> str:
        return format_row(self)


def row_cardinality(r: Row) -> int:
    return r.cardinality


def row_contains(r: Row, u: Sequence[int]) -> bool:
    if len(u) != r.width:
        raise ValueError(f"bitstring has length {len(u)}, row width {r.width}")
    ones = [0] * len(r.counts)
    for tok, bit in zip(r.tokens, u):
        if tok == ZERO or tok == ONE:
            if bit != tok:
                return False
        elif is_group(tok):
            ones[group_of(tok)] += bit
    return tuple(ones) == r.counts


def expand(r: Row) -> Iterator[tuple[int, ...]]:
    """Yield the members of ``r`` in lexicographic order."""
    template = [t if t in (ZERO, ONE) else 0 for t in r.tokens]
    slots: list[list[int]] = [
        [i] for i, t in enumerate(r.tokens) if t == DONTCARE]
    patterns: list[list[tuple[int, ...]]] = [[(0,), (1,)]] * len(slots)
    for g, t in enumerate(r.counts):
        pos = [i for i, tok in enumerate(r.tokens) if tok == group_token(g)]
        slots.append(pos)
        patterns.append([
            tuple(1 if i in ones else 0 for i in range(len(pos)))
            for ones in map(set, itertools.combinations(range(len(pos)), t))])
    out = []
    for choice in itertools.product(*patterns):
        bits = list(template)
        for pos, pat in zip(slots, choice):
            for i, b in zip(pos, pat):
                bits[i] = b
        out.append(tuple(bits))
    out.sort()
    return iter(out)


def rows_disjoint(r1: Row, r2: Row) -> bool:
    if r1.width != r2.width:
        raise ValueError("rows differ in width")
    z1, o1 = r1._fixed_masks
    z2, o2 = r2._fixed_masks
    if (z1 & o2) or (o1 & z2):
        return True
    return not _intersect(r1, r2)


def _intersect(r1: Row, r2: Row) -> bool:
    """Exact search for a common member, memoised on remaining group quotas."""
    width = r1.width
    # positions still to come per group, after position p
    left1 = _suffix_sizes(r1)
    left2 = _suffix_sizes(r2)

    @lru_cache(maxsize=None)
    def rec(p: int, need1: tuple[int, ...], need2: tuple[int, ...]) -> bool:
        if p == width:
            return not any(need1) and not any(need2)
        for bit in (0, 1):
            n1 = _step(r1.tokens[p], bit, need1, left1[p + 1])
            if n1 is None:
                continue
            n2 = _step(r2.tokens[p], bit, need2, left2[p + 1])
            if n2 is None:
                continue
            if rec(p + 1, n1, n2):
                return True
        return False

    return rec(0, r1.counts, r2.counts)


def _suffix_sizes(r: Row) -> list[tuple[int, ...]]:
    out = [tuple([0] * len(r.counts))]
    cur = [0] * len(r.counts)
    for tok in reversed(r.tokens):
        if is_group(tok):
            cur[group_of(tok)] += 1
        out.append(tuple(cur))
    out.reverse()
    return out


def _step(tok, bit, need, left_after):
    if tok == ZERO or tok == ONE:
        return need if tok == bit else None
    if tok == DONTCARE:
        return need
    g = group_of(tok)
    rem = need[g] - bit
    if rem < 0 or rem > left_after[g]:
        return None
    if bit:
        need = need[:g] + (rem,) + need[g + 1:]
    return need


def concat(prefix: Row, suffix: Row) -> Row:
    off = len(prefix.counts)
    tokens = prefix.tokens + tuple(
        group_token(group_of(t) + off) if is_group(t) else t
        for t in suffix.tokens)
    return Row._trusted(tokens, prefix.counts + suffix.counts)


EMPTY_ROW = Row(())


def weight_block(length: int, w: int) -> Row:
    """Row of ``length`` positions carrying exactly ``w`` ones."""
    if not 0 <= w <= length:
        raise ValueError(f"weight {w} outside [0,{length}]")
    if w == 0:
        return Row((ZERO,) * length)
    if w == length:
        return Row((ONE,) * length)
    return Row((group_token(0),) * length, (w,))


def gap_gadget(branch_bit: int | None, gap_len: int, w: int) -> Row:
    """Branch bit (if any) followed by ``gap_len`` skipped positions of weight ``w``."""
    block = weight_block(gap_len, w)
    if branch_bit is None:
        return block
    if branch_bit not in (0, 1):
        raise ValueError(f"branch bit must be 0, 1 or None, got {branch_bit}")
    return concat(Row((branch_bit,)), block)


# -- text format ---------------------------------------------------------

def _label(g: int) -> str:
    # a..z, then aa, ab, ... for rows with more than 26 groups
    s = ""
    g += 1
    while g:
        g, rem = divmod(g - 1, 26)
        s = chr(ord("a") + rem) + s
    return s


def _unlabel(s: str) -> int:
    g = 0
    for ch in s:
        g = g * 26 + (ord(ch) - ord("a") + 1)
    return g - 1


_CHAR = {ZERO: "0", ONE: "1", DONTCARE: "*"}


def format_row(r: Row, count: bool = True) -> str:
    text = " ".join(
        _label(group_of(t)) if is_group(t) else _CHAR[t] for t in r.tokens)
    if r.counts:
        legend = " ".join(
            f"{_label(g)}=g({t})" for g, t in enumerate(r.counts))
        text += f" ; {legend}"
    if count:
        text += f" # count={r.cardinality}"
    return text


def parse_row(text: str) -> Row:
    body, _, tail = text.partition("#")
    tokens_s, _, legend_s = body.partition(";")
    labels: dict[str, int] = {}
    tokens = []
    for tok in tokens_s.split():
        if tok in ("0", "1"):
            tokens.append(int(tok))
        elif tok in ("*", "2"):
            tokens.append(DONTCARE)
        elif tok.isalpha() and tok.islower():
            tokens.append(group_token(_unlabel(tok)))
            labels.setdefault(tok, _unlabel(tok))
        else:
            raise RowError(f"bad row token {tok!r}")
    counts: dict[int, int] = {}
    for item in legend_s.split():
        label, _, spec = item.partition("=")
        if not (spec.startswith("g(") and spec.endswith(")")):
            raise RowError(f"bad legend entry {item!r}")
        counts[_unlabel(label)] = int(spec[2:-1])
    if set(counts) != set(labels.values()):
        raise RowError("legend does not match group labels")
    # compact ids to 0..m-1 in order of first appearance
    order = {g: i for i, g in enumerate(dict.fromkeys(
        group_of(t) for t in tokens if is_group(t)))}
    tokens = [group_token(order[group_of(t)]) if is_group(t) else t
              for t in tokens]
    row = Row(tuple(tokens),
              tuple(counts[g] for g in sorted(order, key=order.get)))
    tail = tail.strip()
    if tail:
        if not tail.startswith("count="):
            raise RowError(f"bad row trailer {tail!r}")
        if int(tail[len("count="):]) != row.cardinality:
            raise RowError("stated count does not match the row")
    return row


# -- row sets ------------------------------------------------------------

@dataclass(frozen=True)
class RowSet:
    """A disjoint union of rows of equal width."""

    width: int
    rows: tuple[Row, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r.width != self.width:
                raise RowError(f"row width {r.width} != {self.width}")

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def cardinality(self) -> int:
        return sum(r.cardinality for r in self.rows)

    def expand(self) -> list[tuple[int, ...]]:
        return [u for r in self.rows for u in expand(r)]

    def pairwise_disjoint(self) -> bool:
        rows = self.rows
        return all(rows_disjoint(rows[i], rows[j])
                   for i in range(len(rows)) for j in range(i + 1, len(rows)))

    def to_text(self, k: int | None = None) -> str:
        lines = []
        if k is not None:
            lines.append(f"k={k} rows={len(self.rows)} models={self.cardinality}")
        lines.extend(format_row(r) for r in self.rows)
        return "\n".join(lines) + "\n"
