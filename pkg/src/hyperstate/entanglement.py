"""Separability structure, Schmidt-measure bounds and the connectivity census."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from typing import Iterator

from .errors import CapacityError
from .hypergraph import (
    Hypergraph,
    VertexPermutation,
    all_hypergraphs,
    components,
    induced,
    is_connected,
    is_trivial,
    min_vertex_cover,
    popcount,
)
from .state import SignState, build_state, permute_qubits, schmidt_rank, tensor

MAX_SWEEP_QUBITS = 8
MAX_CENSUS_N = 4
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SeparabilityReport:
    components: tuple[frozenset[int], ...]
    factors: tuple[Hypergraph, ...]
    max_m: int
    fully_separable: bool
    completely_entangled: bool

    def as_record(self) -> dict:
        return {
            "components": [sorted(c) for c in self.components],
            "factors": [str(f) for f in self.factors],
            "max_m": self.max_m,
            "fully_separable": self.fully_separable,
            "completely_entangled": self.completely_entangled,
        }


def separability_structure(g: Hypergraph) -> SeparabilityReport:
    """Split g into its components.

    Every hyperedge of size >= 2 lies inside one component. Loops stay with
    their vertex, and the empty hyperedge (a global sign) is given to the
    first factor only.
    """
    parts = tuple(components(g))
    factors = []
    for i, part in enumerate(parts):
        f = induced(g, part)
        if i > 0 and 0 in f.edges:
            f = Hypergraph(f.n, f.edges - {0}, f.labels)
        factors.append(f)
    return SeparabilityReport(
        components=parts,
        factors=tuple(factors),
        max_m=len(parts),
        fully_separable=is_trivial(g),
        completely_entangled=g.n >= 2 and is_connected(g),
    )


def recombine(report: SeparabilityReport) -> SignState:
    """Tensor the factor states and restore the original qubit order."""
    state = SignState(0, [1])
    order: list[int] = []
    for part, factor in zip(report.components, report.factors):
        state = tensor(state, build_state(factor))
        order.extend(sorted(part))
    # qubit at position i of the tensor product is original vertex order[i]
    return permute_qubits(state, VertexPermutation(tuple(order)))


def bipartitions(n: int) -> Iterator[frozenset[int]]:
    """One side of every bipartition of {1..n}: the side holding vertex 1."""
    rest = range(2, n + 1)
    for size in range(0, n - 1):
        for extra in itertools.combinations(rest, size):
            yield frozenset((1, *extra))


def max_cut_rank(state: SignState) -> tuple[int, frozenset[int] | None]:
    """Largest bipartite Schmidt rank over all bipartitions, with the first cut attaining it."""
    if state.n > MAX_SWEEP_QUBITS:
        raise CapacityError(f"bipartition sweep limited to {MAX_SWEEP_QUBITS} qubits")
    best, witness = 0, None
    for part in bipartitions(state.n):
        r = schmidt_rank(state, part)
        if r > best:
            best, witness = r, part
    return max(best, 1), witness


def _ceil_log2(r: int) -> int:
    return (r - 1).bit_length()


def schmidt_lower_bound(g: Hypergraph) -> tuple[int, frozenset[int] | None]:
    r, witness = max_cut_rank(build_state(g))
    return _ceil_log2(r), witness


def schmidt_upper_bound(g: Hypergraph, semantics: str = "forall") -> tuple[int, frozenset[int]]:
    """Size of a minimum vertex cover, with the cover.

    Only the "forall" reading (every deletion-mode choice trivialises g) is a
    valid upper bound on the Schmidt measure; "exists" is accepted for
    comparison.
    """
    if g.n > MAX_SWEEP_QUBITS:
        raise CapacityError(f"vertex-cover search limited to {MAX_SWEEP_QUBITS} vertices")
    cover = min_vertex_cover(g, semantics)
    return len(cover), cover


@dataclass(frozen=True)
class SchmidtBounds:
    lower: int
    upper: int
    witness_bipartition: frozenset[int] | None
    witness_cover: frozenset[int]
    max_rank: int
    exists_cover: frozenset[int]

    @property
    def exact(self) -> bool:
        # log2(max_rank) is the real lower bound; lower is its ceiling
        return 1 << self.upper == self.max_rank

    def as_record(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "max_rank": self.max_rank,
            "witness_bipartition": sorted(self.witness_bipartition) if self.witness_bipartition else None,
            "witness_cover": sorted(self.witness_cover),
            "exists_cover": sorted(self.exists_cover),
        }


def schmidt_bounds(g: Hypergraph) -> SchmidtBounds:
    r, part = max_cut_rank(build_state(g))
    upper, cover = schmidt_upper_bound(g, "forall")
    return SchmidtBounds(
        lower=_ceil_log2(r),
        upper=upper,
        witness_bipartition=part,
        witness_cover=cover,
        max_rank=r,
        exists_cover=min_vertex_cover(g, "exists"),
    )


def discon_bound(n: int) -> int:
    """(2^n - 2) * 2^(2^(n-1) + 2), the bound on disconnected hypergraphs."""
    return ((1 << n) - 2) << ((1 << (n - 1)) + 2)


@dataclass(frozen=True)
class CensusReport:
    n: int
    total: int
    disconnected: int
    connected: int
    trivial: int
    contains_full: int
    full_edge_connected: int
    stabilizer: int
    graph_state: int

    @property
    def discon_bound(self) -> int:
        return discon_bound(self.n)

    @property
    def discon_fraction(self) -> float:
        return self.disconnected / self.total

    def failures(self) -> list[str]:
        out = []
        if self.disconnected > self.discon_bound:
            out.append(f"disconnected count {self.disconnected} exceeds bound {self.discon_bound}")
        if self.full_edge_connected != self.contains_full:
            out.append(
                f"{self.contains_full - self.full_edge_connected} hypergraphs containing [n] are disconnected"
            )
        return out

    def as_record(self) -> dict:
        rec = {"schema": SCHEMA_VERSION, **asdict(self)}
        rec["discon_bound"] = self.discon_bound
        rec["bound_holds"] = self.disconnected <= self.discon_bound
        return rec


def census(n: int) -> CensusReport:
    """Stream all 2^(2^n) hypergraphs on n vertices and tally their classes."""
    if not 1 <= n <= MAX_CENSUS_N:
        raise CapacityError(f"census supports 1 <= n <= {MAX_CENSUS_N}, got {n}")
    full = (1 << n) - 1
    counts = dict(total=0, disconnected=0, trivial=0, contains_full=0, full_edge_connected=0, stabilizer=0, graph_state=0)
    for g in all_hypergraphs(n):
        sizes = [popcount(m) for m in g.edges]
        connected = is_connected(g)
        counts["total"] += 1
        counts["disconnected"] += not connected
        counts["trivial"] += all(s <= 1 for s in sizes)
        if full in g.edges:
            counts["contains_full"] += 1
            counts["full_edge_connected"] += connected
        counts["stabilizer"] += all(s <= 2 for s in sizes)
        counts["graph_state"] += all(s == 2 for s in sizes)
    return CensusReport(n=n, connected=counts["total"] - counts["disconnected"], **counts)
