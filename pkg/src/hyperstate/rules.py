"""Pauli operators and Z measurements as hypergraph rewrites.

Every rule returns a hypergraph whose state equals the image of the input
state, with the sign -1 carried by the empty hyperedge. The only phase that
cannot be absorbed into the hypergraph is ``i``; rules that can produce it
return it next to the hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import HypergraphError
from .hypergraph import (
    Hypergraph,
    add_edge_masks,
    delete_minus,
    delete_plus,
    popcount,
    rank,
    vertex_bit,
    vertices_of,
)
from .state import PauliElement


def _check(g: Hypergraph, k: int) -> int:
    if not 1 <= k <= g.n:
        raise HypergraphError(f"vertex {k} outside 1..{g.n}")
    return vertex_bit(g.n, k)


def conjugated_x_masks(g: Hypergraph, k: int) -> list[int]:
    bit = _check(g, k)
    return sorted(m & ~bit for m in g.edges if m & bit)


def conjugated_x_generator(g: Hypergraph, k: int) -> list[tuple[int, ...]]:
    """Hyperedges F with U X_k U^dagger = X_k * prod_{f in F} Z_f, where U = prod_{e in E} Z_e."""
    return sorted((vertices_of(g.n, m) for m in conjugated_x_masks(g, k)), key=lambda e: (len(e), e))


def pauli_x_rule(g: Hypergraph, k: int) -> Hypergraph:
    return add_edge_masks(g, conjugated_x_masks(g, k))


def pauli_z_rule(g: Hypergraph, k: int) -> Hypergraph:
    return add_edge_masks(g, [_check(g, k)])


def pauli_y_rule(g: Hypergraph, k: int) -> tuple[Hypergraph, complex]:
    """Y = i X Z: apply the Z rule, then the X rule, and return phase i."""
    return pauli_x_rule(pauli_z_rule(g, k), k), 1j


def _fold_phase(g: Hypergraph, phase: complex) -> tuple[Hypergraph, complex]:
    if phase in (-1, -1j):
        g = add_edge_masks(g, [0])
        phase = -phase
    return g, complex(phase.real + 0.0, phase.imag + 0.0)


def apply_pauli_element(g: Hypergraph, p: PauliElement) -> tuple[Hypergraph, complex]:
    """Rewrite ``g`` under ``p``; the returned phase is 1 or i."""
    if p.n != g.n:
        raise HypergraphError(f"Pauli element acts on {p.n} qubits, hypergraph has {g.n}")
    phase = p.phase
    for k, letter in enumerate(p.letters, start=1):
        if letter == "X":
            g = pauli_x_rule(g, k)
        elif letter == "Z":
            g = pauli_z_rule(g, k)
        elif letter == "Y":
            g, extra = pauli_y_rule(g, k)
            phase *= extra
    return _fold_phase(g, phase)


def measure_z_rule(g: Hypergraph, k: int, outcome: int) -> Hypergraph:
    if outcome == 1:
        return delete_plus(g, k)
    if outcome == -1:
        return delete_minus(g, k)
    raise HypergraphError(f"outcome must be +1 or -1, got {outcome}")


def stabilizer_generator(g: Hypergraph, k: int) -> PauliElement | None:
    """X_k conjugated by the hyperedge gates of g, if it stays in the Pauli group."""
    masks = conjugated_x_masks(g, k)
    if any(popcount(m) > 1 for m in masks):
        return None
    letters = ["I"] * g.n
    letters[k - 1] = "X"
    phase = 1
    for m in masks:
        if m == 0:
            phase = -phase
        else:
            letters[vertices_of(g.n, m)[0] - 1] = "Z"
    return PauliElement("".join(letters), phase)


@dataclass(frozen=True)
class StabilizerCertificate:
    is_stabilizer: bool
    generators: tuple[PauliElement, ...] = ()
    witness_vertex: int | None = None
    witness_edge: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.is_stabilizer


def is_stabilizer(g: Hypergraph) -> StabilizerCertificate:
    """Rank <= 2 test with a certificate either way.

    When rank > 2 the witness is a largest hyperedge e_r and a vertex k in it:
    e_r - {k} has two or more vertices, so the conjugated X_k is not a Pauli.
    """
    if rank(g) > 2:
        e_r = max(g.edges, key=lambda m: (popcount(m), -m))
        e_vertices = vertices_of(g.n, e_r)
        return StabilizerCertificate(False, witness_vertex=e_vertices[0], witness_edge=e_vertices)
    gens = tuple(stabilizer_generator(g, k) for k in g.vertices)
    return StabilizerCertificate(True, generators=gens)


class StateClass(str, Enum):
    GRAPH = "graph-state"
    STABILIZER = "stabilizer-not-graph"
    HYPERGRAPH = "proper-hypergraph"

    def __str__(self) -> str:
        return self.value


def classify(g: Hypergraph) -> StateClass:
    if all(popcount(m) == 2 for m in g.edges):
        return StateClass.GRAPH
    if rank(g) <= 2:
        return StateClass.STABILIZER
    return StateClass.HYPERGRAPH
