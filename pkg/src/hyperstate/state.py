"""Exact real-equally-weighted states.

A state on n qubits is a table of 2**n signs plus one global unit phase in
{1, i, -1, -i}; the amplitude at basis index x is ``phase * signs[x] / 2**(n/2)``.
Nothing is ever stored as a floating-point amplitude, so all comparisons here
are exact. Basis indices put qubit 1 in the most significant bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .anf import BooleanFunction
from .errors import CapacityError, HypergraphError, ParseError
from .hypergraph import Hypergraph, VertexPermutation, mask_of
from .intrank import bareiss_rank

MAX_QUBITS = 24

PHASE_TEXT = {1: "1", 1j: "i", -1: "-1", -1j: "-i"}
TEXT_PHASE = {v: k for k, v in PHASE_TEXT.items()}


def check_phase(phase) -> complex:
    phase = complex(phase)
    if phase not in PHASE_TEXT:
        raise ValueError(f"phase must be one of 1, i, -1, -i; got {phase}")
    # normalise signed zeros so that equal phases print identically
    return complex(phase.real + 0.0, phase.imag + 0.0)


def phase_text(phase) -> str:
    return PHASE_TEXT[check_phase(phase)]


def check_capacity(n: int) -> None:
    if n > MAX_QUBITS:
        raise CapacityError(f"{n} qubits exceeds the supported maximum of {MAX_QUBITS}")


@dataclass(frozen=True, eq=False)
class SignState:
    n: int
    signs: np.ndarray
    phase: complex = 1

    def __post_init__(self):
        check_capacity(self.n)
        signs = np.array(self.signs, dtype=np.int8).ravel()
        if signs.size != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} signs, got {signs.size}")
        if not np.all(np.abs(signs) == 1):
            raise ValueError("sign entries must be +1 or -1")
        signs.setflags(write=False)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "phase", check_phase(self.phase))

    def canonical(self) -> tuple[complex, np.ndarray]:
        """Representative with phase 1 or i (a -1 is pushed into the signs)."""
        if self.phase in (-1, -1j):
            return -self.phase, -self.signs
        return self.phase, self.signs

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignState):
            return NotImplemented
        if self.n != other.n:
            return False
        pa, sa = self.canonical()
        pb, sb = other.canonical()
        return pa == pb and np.array_equal(sa, sb)

    def __hash__(self) -> int:
        p, s = self.canonical()
        return hash((self.n, p, s.tobytes()))

    def scaled_vector(self) -> np.ndarray:
        """Amplitudes times 2**(n/2): entries are exactly +-1 or +-i."""
        return self.phase * self.signs.astype(complex)

    def to_vector(self) -> np.ndarray:
        return self.scaled_vector() / np.sqrt(float(1 << self.n))

    def sign_string(self) -> str:
        return "".join("+" if v > 0 else "-" for v in self.signs.tolist())

    def __str__(self) -> str:
        return f"{self.sign_string()} phase {phase_text(self.phase)}"


def parse_sign_string(text: str, phase="1") -> SignState:
    text = text.strip()
    if not text or set(text) - {"+", "-"} or len(text) & (len(text) - 1):
        raise ParseError(f"bad sign string {text!r}")
    if isinstance(phase, str):
        if phase not in TEXT_PHASE:
            raise ParseError(f"bad phase {phase!r}")
        phase = TEXT_PHASE[phase]
    return SignState(len(text).bit_length() - 1, [1 if c == "+" else -1 for c in text], phase)


def _indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def plus_state(n: int) -> SignState:
    check_capacity(n)
    return SignState(n, np.ones(1 << n, dtype=np.int8))


def _gate_parity(n: int, masks: Iterable[int]) -> np.ndarray:
    idx = _indices(n)
    parity = np.zeros(1 << n, dtype=bool)
    for m in masks:
        parity ^= (idx & m) == m
    return parity


def apply_hyperedge_mask(s: SignState, m: int) -> SignState:
    if not 0 <= m < 1 << s.n:
        raise HypergraphError(f"hyperedge mask {m} outside {s.n} qubits")
    flip = _gate_parity(s.n, [m])
    return SignState(s.n, np.where(flip, -s.signs, s.signs), s.phase)


def apply_hyperedge_gate(s: SignState, e: Iterable[int]) -> SignState:
    """Z_e: negate the amplitudes where every qubit of e is 1 (all of them for e = {})."""
    return apply_hyperedge_mask(s, mask_of(s.n, e))


def build_state(g: Hypergraph) -> SignState:
    check_capacity(g.n)
    parity = _gate_parity(g.n, g.edges)
    return SignState(g.n, 1 - 2 * parity.astype(np.int8))


def from_boolean(f: BooleanFunction) -> SignState:
    check_capacity(f.n)
    return SignState(f.n, 1 - 2 * f.truth.astype(np.int8))


_PAULI_RE = re.compile(r"^\s*(?P<phase>[+-](?:1|i))?\s*(?P<letters>[IXYZ]*)\s*$")
_PREFIX = {1: "+1", 1j: "+i", -1: "-1", -1j: "-i"}


@dataclass(frozen=True)
class PauliElement:
    """``phase * p_1 (x) ... (x) p_n`` with letters from IXYZ."""

    letters: str
    phase: complex = 1

    def __post_init__(self):
        if set(self.letters) - set("IXYZ"):
            raise ValueError(f"Pauli letters must come from IXYZ, got {self.letters!r}")
        object.__setattr__(self, "phase", check_phase(self.phase))

    @property
    def n(self) -> int:
        return len(self.letters)

    @classmethod
    def parse(cls, text: str) -> "PauliElement":
        match = _PAULI_RE.match(text)
        if match is None:
            raise ParseError(f"bad Pauli string {text!r}")
        prefix = match["phase"] or "+1"
        phase = {"+1": 1, "-1": -1, "+i": 1j, "-i": -1j}[prefix]
        return cls(match["letters"], phase)

    @classmethod
    def single(cls, n: int, k: int, letter: str) -> "PauliElement":
        if not 1 <= k <= n:
            raise HypergraphError(f"qubit {k} outside 1..{n}")
        return cls("I" * (k - 1) + letter + "I" * (n - k))

    def __str__(self) -> str:
        return f"{_PREFIX[self.phase]} {self.letters}"


def apply_pauli(s: SignState, p: PauliElement) -> SignState:
    if p.n != s.n:
        raise HypergraphError(f"Pauli element acts on {p.n} qubits, state has {s.n}")
    idx = _indices(s.n)
    signs = s.signs.astype(np.int8)
    phase = s.phase * p.phase
    for k, letter in enumerate(p.letters, start=1):
        if letter == "I":
            continue
        bit = 1 << (s.n - k)
        if letter in "XY":
            signs = signs[idx ^ bit]
        if letter in "ZY":
            signs = np.where(idx & bit, -signs, signs)
        if letter == "Y":
            # Y = -i Z X on the computational basis
            phase *= -1j
    return SignState(s.n, signs, phase)


def project_z(s: SignState, k: int, outcome: int) -> tuple[Fraction, SignState]:
    """Measure sigma_z on qubit k; return the outcome probability and post-state.

    The post-state lives on the remaining n - 1 qubits in their original order.
    """
    if not 1 <= k <= s.n:
        raise HypergraphError(f"qubit {k} outside 1..{s.n}")
    if outcome not in (1, -1):
        raise HypergraphError(f"outcome must be +1 or -1, got {outcome}")
    bit = 1 << (s.n - k)
    hit = (_indices(s.n) & bit) == (0 if outcome == 1 else bit)
    probability = Fraction(int(hit.sum()), 1 << s.n)
    return probability, SignState(s.n - 1, s.signs[hit], s.phase)


def tensor(a: SignState, b: SignState) -> SignState:
    check_capacity(a.n + b.n)
    return SignState(a.n + b.n, np.outer(a.signs, b.signs).ravel(), a.phase * b.phase)


def permute_qubits(s: SignState, p: VertexPermutation) -> SignState:
    """Move qubit k to position p(k)."""
    if p.n != s.n:
        raise HypergraphError(f"permutation arity {p.n} does not match {s.n} qubits")
    if s.n == 0:
        return s
    axes = [k - 1 for k in p.inverse().mapping]
    moved = np.transpose(s.signs.reshape((2,) * s.n), axes)
    return SignState(s.n, moved.ravel(), s.phase)


def equal_up_to_global_phase(a: SignState, b: SignState) -> complex | None:
    """The unit mu with a == mu * b, if there is one."""
    if a.n != b.n:
        raise HypergraphError(f"qubit-count mismatch: {a.n} vs {b.n}")
    ra = a.signs * a.signs[0]
    rb = b.signs * b.signs[0]
    if not np.array_equal(ra, rb):
        return None
    return check_phase(a.phase * b.phase.conjugate() * int(a.signs[0]) * int(b.signs[0]))


def bipartite_matrix(s: SignState, part: Iterable[int]) -> np.ndarray:
    """Sign table reshaped with rows indexed by ``part`` and columns by the rest."""
    part = sorted(set(part))
    if not part or len(part) >= s.n or any(not 1 <= k <= s.n for k in part):
        raise HypergraphError(f"{part} is not a proper non-empty subset of 1..{s.n}")
    rest = [k for k in range(1, s.n + 1) if k not in part]
    arr = np.transpose(s.signs.reshape((2,) * s.n), [k - 1 for k in part + rest])
    return arr.reshape(1 << len(part), 1 << len(rest))


def schmidt_rank(s: SignState, part: Iterable[int]) -> int:
    """Schmidt rank of ``s`` across (part | complement), computed exactly."""
    m = bipartite_matrix(s, part)
    if m.shape[0] > m.shape[1]:
        m = m.T
    # rows equal up to sign do not change the rank; two distinct +-1 rows
    # that are not negatives of each other are independent
    rows = {tuple(r) if r[0] > 0 else tuple(-v for v in r) for r in m.tolist()}
    if len(rows) <= 2:
        return len(rows)
    return bareiss_rank(sorted(rows))
