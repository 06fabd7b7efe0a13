"""Set-based reference implementations used as test oracles.

A hypergraph here is (n, set of frozensets of vertex labels). Nothing in this
file touches the bitmask representation used by the package.
"""

import itertools


def ref_edges(g):
    return {frozenset(e) for e in g.edge_sets()}


def ref_delete(vertices, edges, k, mode):
    """Literal two-way vertex deletion on labelled sets (no re-indexing)."""
    incident = {e for e in edges if k in e}
    out = set(edges) ^ incident
    if mode == -1:
        for e in incident:
            out ^= {e - {k}}
    return [v for v in vertices if v != k], out


def ref_reindex(vertices, edges):
    pos = {v: i + 1 for i, v in enumerate(sorted(vertices))}
    return len(vertices), {frozenset(pos[v] for v in e) for e in edges}


def ref_is_cover(n, edges, cover, semantics):
    results = []
    for modes in itertools.product((1, -1), repeat=len(cover)):
        vertices, es = list(range(1, n + 1)), set(edges)
        for k, mode in zip(cover, modes):
            vertices, es = ref_delete(vertices, es, k, mode)
        results.append(all(len(e) <= 1 for e in es))
    return any(results) if semantics == "exists" else all(results)


def ref_truth(n, edges):
    """Evaluate XOR of monomials directly at every x (x_1 most significant)."""
    out = []
    for x in range(1 << n):
        bits = [(x >> (n - k)) & 1 for k in range(1, n + 1)]
        value = 0
        for e in edges:
            value ^= all(bits[k - 1] for k in e)
        out.append(int(value))
    return out
