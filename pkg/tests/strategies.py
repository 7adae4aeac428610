from hypothesis import strategies as st

from bddkenum.oracle import random_bdd


@st.composite
def bdds(draw, min_n=1, max_n=10, max_nodes_per_var=3):
    n = draw(st.integers(min_n, max_n))
    nodes = draw(st.integers(0, max_nodes_per_var * n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_bdd(n, nodes, seed)
