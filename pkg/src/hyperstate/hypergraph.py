"""Finite hypergraphs on the vertex set {1..n} as immutable values.

Hyperedges are stored as integer bitmasks with vertex ``k`` at bit ``n - k``
(vertex 1 is the most significant bit). This is the same convention used for
computational-basis indices, so a hyperedge mask ``m`` selects exactly the
basis states ``x`` with ``x & m == m``. The empty hyperedge is mask 0.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import HypergraphError, ParseError


def popcount(m: int) -> int:
    return m.bit_count()


def vertex_bit(n: int, k: int) -> int:
    return 1 << (n - k)


def mask_of(n: int, vertices: Iterable[int]) -> int:
    m = 0
    for k in vertices:
        if not 1 <= k <= n:
            raise HypergraphError(f"vertex {k} outside 1..{n}")
        m |= vertex_bit(n, k)
    return m


def vertices_of(n: int, m: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n + 1) if m & vertex_bit(n, k))


def _drop_bit(m: int, pos: int) -> int:
    low = m & ((1 << pos) - 1)
    return ((m >> (pos + 1)) << pos) | low


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph ``([n], E)``.

    ``labels`` records the original vertex names after deletions; it does not
    take part in equality or hashing.
    """

    n: int
    edges: frozenset[int] = frozenset()
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError("vertex count must be non-negative")
        edges = frozenset(self.edges)
        limit = 1 << self.n
        for m in edges:
            if not 0 <= m < limit:
                raise HypergraphError(f"hyperedge mask {m} references a vertex outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise HypergraphError("labels must name every vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        masks = [mask_of(n, e) for e in edges]
        if len(set(masks)) != len(masks):
            raise HypergraphError("duplicate hyperedge")
        return cls(n, frozenset(masks))

    @classmethod
    def empty(cls, n: int) -> "Hypergraph":
        return cls(n)

    @classmethod
    def from_index(cls, n: int, index: int) -> "Hypergraph":
        """Hypergraph whose edge set is the set bits of ``index`` (bit m <-> mask m)."""
        return cls(n, frozenset(m for m in range(1 << n) if index >> m & 1))

    @property
    def index(self) -> int:
        return sum(1 << m for m in self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge_sets(self) -> list[tuple[int, ...]]:
        """Hyperedges as vertex tuples, ordered by size then lexicographically."""
        return sorted((vertices_of(self.n, m) for m in self.edges), key=lambda e: (len(e), e))

    def __contains__(self, edge) -> bool:
        return mask_of(self.n, edge) in self.edges

    def __xor__(self, other: "Hypergraph") -> "Hypergraph":
        return hypergraph_sum(self, other)

    def __str__(self) -> str:
        return format_compact(self)


def hypergraph_sum(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """Symmetric difference of edge sets on a shared vertex set."""
    if g.n != h.n:
        raise HypergraphError(f"vertex-count mismatch: {g.n} vs {h.n}")
    return Hypergraph(g.n, g.edges ^ h.edges)


def add_edges(g: Hypergraph, edges: Iterable[Iterable[int]]) -> Hypergraph:
    masks = frozenset(mask_of(g.n, e) for e in edges)
    return Hypergraph(g.n, g.edges ^ masks, g.labels)


def add_edge_masks(g: Hypergraph, masks: Iterable[int]) -> Hypergraph:
    """Toggle each mask in ``masks`` (repeated masks cancel)."""
    edges = set(g.edges)
    for m in masks:
        edges ^= {m}
    return Hypergraph(g.n, frozenset(edges), g.labels)


def _check_vertex(g: Hypergraph, k: int) -> None:
    if not 1 <= k <= g.n:
        raise HypergraphError(f"vertex {k} outside 1..{g.n}")


def delete_edges_in_place(edges: frozenset[int], bit: int, mode: int) -> frozenset[int]:
    """Deletion of the vertex at ``bit`` without re-indexing the rest.

    ``mode`` is +1 (drop incident edges) or -1 (shrink incident edges, with
    coinciding edges cancelling in pairs).
    """
    incident = {m for m in edges if m & bit}
    out = set(edges) - incident
    if mode < 0:
        for m in incident:
            out ^= {m & ~bit}
    return frozenset(out)


def _delete(g: Hypergraph, k: int, mode: int) -> Hypergraph:
    _check_vertex(g, k)
    pos = g.n - k
    kept = delete_edges_in_place(g.edges, 1 << pos, mode)
    labels = g.labels[: k - 1] + g.labels[k:]
    return Hypergraph(g.n - 1, frozenset(_drop_bit(m, pos) for m in kept), labels)


def delete_plus(g: Hypergraph, k: int) -> Hypergraph:
    """Remove vertex ``k`` and every hyperedge incident with it."""
    return _delete(g, k, +1)


def delete_minus(g: Hypergraph, k: int) -> Hypergraph:
    """Remove vertex ``k`` from every hyperedge; duplicates cancel pairwise."""
    return _delete(g, k, -1)


def delete(g: Hypergraph, k: int, mode: int) -> Hypergraph:
    if mode not in (1, -1):
        raise HypergraphError(f"deletion mode must be +1 or -1, got {mode}")
    return _delete(g, k, mode)


def rank(g: Hypergraph) -> int:
    return max((popcount(m) for m in g.edges), default=0)


def is_trivial(g: Hypergraph) -> bool:
    return all(popcount(m) <= 1 for m in g.edges)


def components(g: Hypergraph) -> list[frozenset[int]]:
    """Connected vertex classes, ordered by smallest member."""
    parent = list(range(g.n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for m in g.edges:
        vs = vertices_of(g.n, m)
        for v in vs[1:]:
            a, b = find(vs[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, set[int]] = {}
    for v in g.vertices:
        classes.setdefault(find(v), set()).add(v)
    return [frozenset(c) for _, c in sorted(classes.items())]


def con(g: Hypergraph) -> int:
    return len(components(g))


def is_connected(g: Hypergraph) -> bool:
    return con(g) <= 1


def induced(g: Hypergraph, vertices: Iterable[int]) -> Hypergraph:
    """Subhypergraph on ``vertices`` keeping the edges lying wholly inside it.

    The empty hyperedge belongs to every subset, so callers that split a
    hypergraph into pieces must assign it to exactly one piece themselves.
    """
    keep = sorted(set(vertices))
    for v in keep:
        _check_vertex(g, v)
    sub_n = len(keep)
    new_pos = {v: sub_n - i - 1 for i, v in enumerate(keep)}
    inside = mask_of(g.n, keep)
    edges = set()
    for m in g.edges:
        if m & ~inside:
            continue
        edges.add(sum(1 << new_pos[v] for v in vertices_of(g.n, m)))
    return Hypergraph(sub_n, frozenset(edges), tuple(g.labels[v - 1] for v in keep))


def disjoint_union(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """``g`` on vertices 1..g.n followed by ``h`` shifted to g.n+1..g.n+h.n.

    The empty hyperedge contributes the scalar -1 on either side, so it
    combines by symmetric difference.
    """
    edges = {m << h.n for m in g.edges if m} | {m for m in h.edges if m}
    phi = (0 in g.edges) ^ (0 in h.edges)
    if phi:
        edges.add(0)
    return Hypergraph(g.n + h.n, frozenset(edges))


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection on {1..n}; ``mapping[k - 1]`` is the image of ``k``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise HypergraphError(f"not a permutation of 1..{len(mapping)}: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def swap(cls, n: int, a: int, b: int) -> "VertexPermutation":
        m = list(range(1, n + 1))
        m[a - 1], m[b - 1] = m[b - 1], m[a - 1]
        return cls(tuple(m))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, k: int) -> int:
        return self.mapping[k - 1]

    def inverse(self) -> "VertexPermutation":
        inv = [0] * self.n
        for k, image in enumerate(self.mapping, start=1):
            inv[image - 1] = k
        return VertexPermutation(tuple(inv))

    def __str__(self) -> str:
        return " ".join(f"{k}->{v}" for k, v in enumerate(self.mapping, start=1))


def relabel(g: Hypergraph, p: VertexPermutation) -> Hypergraph:
    if p.n != g.n:
        raise HypergraphError(f"permutation arity {p.n} does not match {g.n} vertices")
    return Hypergraph(g.n, frozenset(mask_of(g.n, (p(v) for v in vertices_of(g.n, m))) for m in g.edges))


def _size_profile(g: Hypergraph) -> list[int]:
    return sorted(popcount(m) for m in g.edges)


def _degree_profile(g: Hypergraph) -> list[tuple[int, ...]]:
    # per-vertex multiset of incident edge sizes
    prof = []
    for k in g.vertices:
        bit = vertex_bit(g.n, k)
        prof.append(tuple(sorted(popcount(m) for m in g.edges if m & bit)))
    return prof


def isomorphic(g: Hypergraph, h: Hypergraph) -> VertexPermutation | None:
    """A permutation P with relabel(g, P) == h, or None.

    Brute force over n! candidates; vertices may only map to vertices with the
    same incident-edge-size profile.
    """
    if g.n != h.n or len(g.edges) != len(h.edges) or _size_profile(g) != _size_profile(h):
        return None
    gp, hp = _degree_profile(g), _degree_profile(h)
    if sorted(gp) != sorted(hp):
        return None
    choices = [[j for j in h.vertices if hp[j - 1] == gp[k - 1]] for k in g.vertices]
    for images in itertools.product(*choices):
        if len(set(images)) != g.n:
            continue
        p = VertexPermutation(images)
        if relabel(g, p) == h:
            return p
    return None


def _modes_leave_trivial(edges: frozenset[int], bits: list[int], semantics: str) -> bool:
    if not bits:
        return all(popcount(m) <= 1 for m in edges)
    bit, rest = bits[0], bits[1:]
    outcomes = (_modes_leave_trivial(delete_edges_in_place(edges, bit, mode), rest, semantics) for mode in (1, -1))
    return any(outcomes) if semantics == "exists" else all(outcomes)


def is_vertex_cover(g: Hypergraph, cover: Iterable[int], semantics: str = "exists") -> bool:
    """Whether deleting ``cover`` can leave a trivial hypergraph.

    With ``semantics="exists"`` some choice of deletion mode per vertex must
    work; with ``"forall"`` every choice must.
    """
    if semantics not in ("exists", "forall"):
        raise ValueError(f"unknown semantics {semantics!r}")
    cover = sorted(set(cover))
    for k in cover:
        _check_vertex(g, k)
    return _modes_leave_trivial(g.edges, [vertex_bit(g.n, k) for k in cover], semantics)


def min_vertex_cover(g: Hypergraph, semantics: str = "exists") -> frozenset[int]:
    """Smallest vertex cover; ties go to the lexicographically first subset."""
    for size in range(g.n + 1):
        for cover in itertools.combinations(g.vertices, size):
            if is_vertex_cover(g, cover, semantics):
                return frozenset(cover)
    raise AssertionError("the full vertex set is always a cover")


def all_hypergraphs(n: int) -> Iterator[Hypergraph]:
    """Stream every hypergraph on n vertices in edge-set index order."""
    for index in range(1 << (1 << n)):
        yield Hypergraph.from_index(n, index)


# -- text and JSON forms -------------------------------------------------


def format_compact(g: Hypergraph) -> str:
    parts = ["0" if not e else ",".join(map(str, e)) for e in g.edge_sets()]
    return f"{g.n}:" + ";".join(parts)


def parse_compact(text: str) -> Hypergraph:
    """Parse ``<n>:<edge>;<edge>;...`` where ``0`` is the empty hyperedge."""
    text = text.strip()
    head, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"missing ':' in {text!r}")
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"bad vertex count {head!r}") from None
    if n < 0:
        raise ParseError("vertex count must be non-negative")
    edges = []
    body = body.strip()
    if body:
        for token in body.split(";"):
            token = token.strip()
            if token == "0":
                edges.append(())
                continue
            try:
                vs = [int(v) for v in token.split(",")]
            except ValueError:
                raise ParseError(f"bad hyperedge {token!r}") from None
            if len(set(vs)) != len(vs) or 0 in vs:
                raise ParseError(f"bad hyperedge {token!r}")
            edges.append(vs)
    return Hypergraph.from_edges(n, edges)


def to_json_obj(g: Hypergraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_sets()]}


def from_json_obj(obj) -> Hypergraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("expected an object with 'n' and 'edges'")
    n, edges = obj["n"], obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError("'n' must be an integer and 'edges' a list")
    if any(not isinstance(e, list) or not all(isinstance(v, int) for v in e) for e in edges):
        raise ParseError("each hyperedge must be a list of integers")
    if any(len(set(e)) != len(e) for e in edges):
        raise ParseError("repeated vertex inside a hyperedge")
    return Hypergraph.from_edges(n, edges)


def parse(text: str) -> Hypergraph:
    """Accept either the compact form or the JSON form."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None
        return from_json_obj(obj)
    return parse_compact(text)
