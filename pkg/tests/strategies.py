from hypothesis import strategies as st

from hyperstate.hypergraph import Hypergraph


@st.composite
def hypergraphs(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    edges = draw(st.frozensets(st.integers(0, (1 << n) - 1)))
    return Hypergraph(n, edges)


@st.composite
def hypergraph_pairs(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    a = draw(st.frozensets(st.integers(0, (1 << n) - 1)))
    b = draw(st.frozensets(st.integers(0, (1 << n) - 1)))
    return Hypergraph(n, a), Hypergraph(n, b)
