"""Boolean functions in algebraic normal form.

Truth tables are indexed by ``x = x_1 x_2 ... x_n`` read as a binary number
with ``x_1`` most significant. ANF monomials use the hyperedge mask convention
of :mod:`hyperstate.hypergraph`, so the monomial of mask ``m`` evaluates to 1
at ``x`` exactly when ``x & m == m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import HypergraphError, ParseError
from .hypergraph import Hypergraph, mask_of, popcount


def _check_table_length(length: int) -> int:
    if length < 1 or length & (length - 1):
        raise ValueError(f"table length {length} is not a power of two")
    return length.bit_length() - 1


def mobius(table) -> np.ndarray:
    """Binary Moebius transform over GF(2); it is its own inverse."""
    a = np.array(table, dtype=np.uint8).ravel() & 1
    n = _check_table_length(a.size)
    for i in range(n):
        step = 1 << i
        view = a.reshape(-1, 2, step)
        view[:, 1, :] ^= view[:, 0, :]
    return a


def inverse_mobius(coefficients) -> np.ndarray:
    return mobius(coefficients)


def monomial(e: Iterable[int], x: Sequence[int]) -> int:
    """c(e) at assignment x = (x_1, ..., x_n); the empty monomial is 1."""
    out = 1
    for k in e:
        out &= int(x[k - 1])
    return out


@dataclass(frozen=True)
class BooleanFunction:
    n: int
    anf: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "anf", frozenset(self.anf))
        if any(not 0 <= m < 1 << self.n for m in self.anf):
            raise HypergraphError(f"monomial outside {self.n} variables")

    @classmethod
    def from_truth(cls, table) -> "BooleanFunction":
        coeffs = mobius(table)
        n = coeffs.size.bit_length() - 1
        return cls(n, frozenset(int(m) for m in np.flatnonzero(coeffs)))

    @classmethod
    def from_truth_string(cls, text: str) -> "BooleanFunction":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ParseError(f"truth table must be a 0/1 string, got {text!r}")
        if len(text) & (len(text) - 1):
            raise ParseError(f"truth table length {len(text)} is not a power of two")
        return cls.from_truth([int(c) for c in text])

    @classmethod
    def from_monomials(cls, n: int, monomials: Iterable[Iterable[int]]) -> "BooleanFunction":
        anf: set[int] = set()
        for e in monomials:
            anf ^= {mask_of(n, e)}
        return cls(n, frozenset(anf))

    @cached_property
    def truth(self) -> np.ndarray:
        coeffs = np.zeros(1 << self.n, dtype=np.uint8)
        coeffs[list(self.anf)] = 1
        out = inverse_mobius(coeffs)
        out.setflags(write=False)
        return out

    def truth_string(self) -> str:
        return "".join(map(str, self.truth.tolist()))

    def __call__(self, x: Sequence[int]) -> int:
        index = 0
        for bit in x:
            index = index << 1 | int(bit)
        return int(self.truth[index])

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        return xor(self, other)

    def degree(self) -> int | None:
        return max((popcount(m) for m in self.anf), default=None)

    def codegree(self) -> int | None:
        return min((popcount(m) for m in self.anf), default=None)


def xor(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    if f.n != g.n:
        raise HypergraphError(f"arity mismatch: {f.n} vs {g.n}")
    return BooleanFunction(f.n, f.anf ^ g.anf)


def from_hypergraph(g: Hypergraph) -> BooleanFunction:
    return BooleanFunction(g.n, g.edges)


def to_hypergraph(f: BooleanFunction) -> Hypergraph:
    return Hypergraph(f.n, f.anf)


def is_quadratic(f: BooleanFunction) -> bool:
    return (f.degree() or 0) <= 2


def is_graph_function(f: BooleanFunction) -> bool:
    """Quadratic with every monomial of degree exactly two.

    The zero function counts: it is the edgeless graph.
    """
    return all(popcount(m) == 2 for m in f.anf)
