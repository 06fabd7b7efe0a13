"""Exact calculus for hypergraph states."""

from .anf import BooleanFunction, from_hypergraph, to_hypergraph
from .entanglement import census, schmidt_bounds, separability_structure
from .errors import CapacityError, HypergraphError, ParseError
from .hypergraph import Hypergraph, VertexPermutation, parse
from .rules import apply_pauli_element, classify, is_stabilizer, measure_z_rule
from .state import PauliElement, SignState, build_state

__all__ = [
    "BooleanFunction",
    "CapacityError",
    "Hypergraph",
    "HypergraphError",
    "ParseError",
    "PauliElement",
    "SignState",
    "VertexPermutation",
    "apply_pauli_element",
    "build_state",
    "census",
    "classify",
    "from_hypergraph",
    "is_stabilizer",
    "measure_z_rule",
    "parse",
    "schmidt_bounds",
    "separability_structure",
    "to_hypergraph",
]
