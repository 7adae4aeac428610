"""Ordered binary decision diagrams: storage, text format, traversal.

Branching nodes are dense integer ids ``0..s-1`` stored so that every son
precedes its parent; that storage order is the canonical shelling from below.
The two sinks are the negative ids :data:`TOP` and :data:`BOT`.

Diagrams are ordered but need not be reduced: two nodes may share the same
``(var, lo, hi)`` triple.
"""
from __future__ import annotations

import io
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

TOP = -1
BOT = -2

_TERMINAL_NAMES = {TOP: "T", BOT: "F"}
_ID_RE = re.compile(r"^[A-Za-z0-9_]+$")


class BddError(ValueError):
    """Raised for malformed diagrams or malformed BDD files."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def is_terminal(u: int) -> bool:
    return u < 0


@dataclass(frozen=True)
class Node:
    var: int
    lo: int
    hi: int


@dataclass(frozen=True)
class Bdd:
    """An ordered BDD over variables ``1..nvars``.

    ``names`` holds the identifiers used in the text format; when omitted,
    nodes are named ``n0, n1, ...``.
    """

    nvars: int
    nodes: tuple[Node, ...]
    root: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.names:
            object.__setattr__(
                self, "names", tuple(f"n{i}" for i in range(len(self.nodes))))
        self.validate()

    def validate(self) -> None:
        n = self.nvars
        if n < 1:
            raise BddError(f"nvars must be positive, got {n}")
        if len(self.names) != len(self.nodes):
            raise BddError("names and nodes differ in length")
        if len(set(self.names)) != len(self.names):
            raise BddError("duplicate node names")
        for i, node in enumerate(self.nodes):
            if not 1 <= node.var <= n:
                raise BddError(
                    f"node {self.names[i]}: var {node.var} outside [1,{n}]")
            for son in (node.lo, node.hi):
                if son in (TOP, BOT):
                    continue
                if not 0 <= son < i:
                    raise BddError(
                        f"node {self.names[i]}: son {son} not declared earlier")
                if self.nodes[son].var <= node.var:
                    raise BddError(
                        f"node {self.names[i]}: ordering violation, son "
                        f"{self.names[son]} has var {self.nodes[son].var} "
                        f"<= {node.var}")
        if self.root not in (TOP, BOT) and not 0 <= self.root < len(self.nodes):
            raise BddError(f"root {self.root} does not exist")

    # -- basic accessors -------------------------------------------------

    @property
    def size(self) -> int:
        """Number of branching nodes."""
        return len(self.nodes)

    def var(self, u: int) -> int:
        """Variable index of ``u``; sinks sit at level ``nvars + 1``."""
        if u < 0:
            return self.nvars + 1
        return self.nodes[u].var

    def name(self, u: int) -> str:
        if u < 0:
            return _TERMINAL_NAMES[u]
        return self.names[u]

    def node_id(self, name: str) -> int:
        if name == "T":
            return TOP
        if name == "F":
            return BOT
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    # -- semantics -------------------------------------------------------

    def evaluate(self, u: Sequence[int]) -> bool:
        """Follow the path selected by bitstring ``u`` (``u[i]`` is x_{i+1})."""
        if len(u) != self.nvars:
            raise ValueError(
                f"bitstring has length {len(u)}, expected {self.nvars}")
        v = self.root
        while v >= 0:
            node = self.nodes[v]
            v = node.hi if u[node.var - 1] else node.lo
        return v == TOP

    def shelling_from_below(self) -> list[int]:
        return list(range(len(self.nodes)))

    def shelling_from_above(self) -> list[int]:
        return list(reversed(range(len(self.nodes))))

    def upper_covers(self) -> dict[int, set[tuple[int, int]]]:
        """Map each branching node to the set of ``(parent, branch_bit)``."""
        covers: dict[int, set[tuple[int, int]]] = {
            i: set() for i in range(len(self.nodes))}
        for i, node in enumerate(self.nodes):
            if node.lo >= 0:
                covers[node.lo].add((i, 0))
            if node.hi >= 0:
                covers[node.hi].add((i, 1))
        return covers

    def reachable(self, start: int | None = None) -> list[int]:
        """Branching nodes reachable from ``start`` (default root), in storage order."""
        start = self.root if start is None else start
        seen = set()
        stack = [start]
        while stack:
            v = stack.pop()
            if v < 0 or v in seen:
                continue
            seen.add(v)
            stack.append(self.nodes[v].lo)
            stack.append(self.nodes[v].hi)
        return sorted(seen)

    def sub_bdd(self, start: int | str) -> Bdd:
        """The diagram rooted at ``start``, over the same variables."""
        if isinstance(start, str):
            start = self.node_id(start)
        keep = self.reachable(start)
        remap = {old: new for new, old in enumerate(keep)}
        remap[TOP] = TOP
        remap[BOT] = BOT
        nodes = tuple(
            Node(self.nodes[i].var, remap[self.nodes[i].lo],
                 remap[self.nodes[i].hi])
            for i in keep)
        names = tuple(self.names[i] for i in keep)
        return Bdd(self.nvars, nodes, remap[start], names)

    # -- text format -----------------------------------------------------

    def to_text(self) -> str:
        out = io.StringIO()
        out.write(f"nvars {self.nvars}\n")
        for i, node in enumerate(self.nodes):
            out.write(f"node {self.names[i]} {node.var} "
                      f"{self.name(node.lo)} {self.name(node.hi)}\n")
        out.write(f"root {self.name(self.root)}\n")
        return out.getvalue()


def constant(nvars: int, value: bool) -> Bdd:
    return Bdd(nvars, (), TOP if value else BOT)


def parse_bdd(text: str | Iterable[str]) -> Bdd:
    """Parse the line-oriented BDD format.

    ::

        nvars <n>
        node <id> <var> <lo> <hi>
        root <id|T|F>
    """
    lines = text.splitlines() if isinstance(text, str) else text
    nvars = None
    root = None
    nodes: list[Node] = []
    names: list[str] = []
    index: dict[str, int] = {}

    def son(tok: str, lineno: int) -> int:
        if tok == "T":
            return TOP
        if tok == "F":
            return BOT
        if tok not in index:
            raise BddError(f"reference to undeclared node {tok!r}", lineno)
        return index[tok]

    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if root is not None:
            raise BddError("content after root directive", lineno)
        parts = line.split()
        kind = parts[0]
        if kind == "nvars":
            if nvars is not None or nodes:
                raise BddError("nvars must appear once, first", lineno)
            if len(parts) != 2:
                raise BddError("expected 'nvars <n>'", lineno)
            nvars = _int(parts[1], lineno)
            if nvars < 1:
                raise BddError("nvars must be positive", lineno)
        elif nvars is None:
            raise BddError("nvars must come first", lineno)
        elif kind == "node":
            if len(parts) != 5:
                raise BddError("expected 'node <id> <var> <lo> <hi>'", lineno)
            _, name, var_s, lo_s, hi_s = parts
            if not _ID_RE.match(name) or name in ("T", "F"):
                raise BddError(f"bad node id {name!r}", lineno)
            if name in index:
                raise BddError(f"duplicate node id {name!r}", lineno)
            var = _int(var_s, lineno)
            if not 1 <= var <= nvars:
                raise BddError(f"var {var} outside [1,{nvars}]", lineno)
            lo, hi = son(lo_s, lineno), son(hi_s, lineno)
            for s in (lo, hi):
                if s >= 0 and nodes[s].var <= var:
                    raise BddError(
                        f"ordering violation: son {names[s]} has var "
                        f"{nodes[s].var} <= {var}", lineno)
            index[name] = len(nodes)
            nodes.append(Node(var, lo, hi))
            names.append(name)
        elif kind == "root":
            if len(parts) != 2:
                raise BddError("expected 'root <id|T|F>'", lineno)
            root = son(parts[1], lineno)
        else:
            raise BddError(f"unknown directive {kind!r}", lineno)

    if nvars is None:
        raise BddError("missing nvars directive")
    if root is None:
        raise BddError("missing root directive")
    return Bdd(nvars, tuple(nodes), root, tuple(names))


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise BddError(f"expected integer, got {tok!r}", lineno) from None


def read_bdd(path) -> Bdd:
    with open(path) as fh:
        return parse_bdd(fh.read())


def write_bdd(bdd: Bdd, path) -> None:
    with open(path, "w") as fh:
        fh.write(bdd.to_text())
