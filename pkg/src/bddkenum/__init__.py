"""Counting and compressed enumeration of fixed-weight models of a BDD."""
from .bdd import BOT, TOP, Bdd, BddError, Node, parse_bdd, read_bdd, write_bdd
from .counting import (acceptance_probability, count_k, count_models,
                       gen_poly, node_polys, node_probabilities)
from .enumerators import (WeightedRowSet, apply_and, exactly_k_bdd,
                          method1_sieve, method2_enumerate, method3_enumerate,
                          method3_run, path_dnf)
from .oracle import OracleReport, brute_force, random_bdd
from .rows import (Row, RowSet, concat, expand, format_row, gap_gadget,
                   parse_row, row_cardinality, row_contains, rows_disjoint)
from .schedule import CardSet, Schedule, compute_card1, compute_card2, make_schedule

__version__ = "0.1.0"

__all__ = [
    "BOT", "TOP", "Bdd", "BddError", "Node", "parse_bdd", "read_bdd", "write_bdd",
    "acceptance_probability", "count_k", "count_models", "gen_poly",
    "node_polys", "node_probabilities",
    "WeightedRowSet", "apply_and", "exactly_k_bdd", "method1_sieve",
    "method2_enumerate", "method3_enumerate", "method3_run", "path_dnf",
    "OracleReport", "brute_force", "random_bdd",
    "Row", "RowSet", "concat", "expand", "format_row", "gap_gadget",
    "parse_row", "row_cardinality", "row_contains", "rows_disjoint",
    "CardSet", "Schedule", "compute_card1", "compute_card2", "make_schedule",
]
