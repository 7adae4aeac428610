"""DIMACS CNF ingestion: one BDD per clause, conjoined in file order."""
from __future__ import annotations

from .bdd import BOT, TOP, Bdd, Node, constant
from .enumerators import apply_and


class DimacsError(ValueError):
    pass


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    nvars = nclauses = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if nvars is not None or len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: bad problem line {line!r}")
            try:
                nvars, nclauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: bad problem line") from None
            continue
        if nvars is None:
            raise DimacsError(f"line {lineno}: clause before problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            elif abs(lit) > nvars:
                raise DimacsError(
                    f"line {lineno}: variable {abs(lit)} exceeds declared {nvars}")
            else:
                current.append(lit)
    if nvars is None:
        raise DimacsError("missing problem line")
    if current:
        clauses.append(current)
    if len(clauses) != nclauses:
        raise DimacsError(
            f"declared {nclauses} clauses, found {len(clauses)}")
    return nvars, clauses


def clause_bdd(nvars: int, clause: list[int]) -> Bdd:
    lits = sorted(set(clause), key=abs)
    vars_ = [abs(x) for x in lits]
    if len(set(vars_)) != len(vars_):
        return constant(nvars, True)  # contains x and -x
    nodes: list[Node] = []
    rest = BOT
    for lit in reversed(lits):
        node = Node(lit, rest, TOP) if lit > 0 else Node(-lit, TOP, rest)
        nodes.append(node)
        rest = len(nodes) - 1
    return Bdd(nvars, tuple(nodes), rest)


def cnf_to_bdd(text: str) -> Bdd:
    nvars, clauses = parse_dimacs(text)
    result = constant(nvars, True)
    for clause in clauses:
        result = apply_and(result, clause_bdd(nvars, clause))
        if result.root == BOT:
            break
    return result
