"""Density-matrix simulation of the swap-test interferometer.

Register layout (qubit 0 most significant)::

    0        ancilla
    1, 2, 3  copy 1: A1, B1, C1
    4, 5, 6  copy 2: A2, B2, C2

The ancilla starts in |+>, controls a SWAP of the two copies and is rotated
by a final Hadamard; its polarization <sigma_z> then equals Tr[rho1 rho2].
Only that single expectation value is read out.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import ParamOutOfRange, TargetOutOfRange, ThetaZero
from .linalg import dagger, kron, partial_trace, unitary_from_hermitian
from .states import HADAMARD, PAULI, AXES, DensityMatrix, as_density, single_qubit_polarized

UNITARY_ATOL = 1e-10
TRACE_ATOL = 1e-10

ANCILLA = 0
COPY1 = (1, 2, 3)
COPY2 = (4, 5, 6)
N_REGISTER = 7

CNOT = np.eye(4, dtype=complex)[[0, 1, 3, 2]]
FREDKIN = np.eye(8, dtype=complex)[[0, 1, 2, 3, 4, 6, 5, 7]]
PLUS = np.full((2, 2), 0.5, dtype=complex)

GateKind = Literal["hadamard", "cnot", "controlled_swap", "local_unitary"]
_ARITY = {"hadamard": 1, "cnot": 2, "controlled_swap": 3}


@dataclass(frozen=True, eq=False)
class GateOp:
    """A gate acting on ``targets``.

    ``cnot`` targets are (control, target); ``controlled_swap`` targets are
    (control, a, b). ``local_unitary`` takes an explicit matrix acting on the
    targets in the order given.
    """

    kind: GateKind
    targets: tuple[int, ...]
    matrix: np.ndarray | None = None

    def __post_init__(self):
        targets = tuple(int(t) for t in self.targets)
        object.__setattr__(self, "targets", targets)
        if len(set(targets)) != len(targets):
            raise ValueError(f"gate targets must be distinct: {targets}")
        if self.kind == "local_unitary":
            if self.matrix is None:
                raise ValueError("local_unitary needs a matrix")
            m = np.asarray(self.matrix, dtype=complex)
            if m.shape != (2 ** len(targets),) * 2:
                raise ValueError(f"matrix shape {m.shape} does not fit {len(targets)} targets")
            if np.max(np.abs(m @ dagger(m) - np.eye(len(m)))) >= UNITARY_ATOL:
                raise ValueError("local_unitary matrix is not unitary")
            object.__setattr__(self, "matrix", m)
        elif self.kind in _ARITY:
            if len(targets) != _ARITY[self.kind]:
                raise ValueError(f"{self.kind} acts on {_ARITY[self.kind]} qubits, got {targets}")
        else:
            raise ValueError(f"unknown gate kind {self.kind!r}")

    def local_matrix(self) -> np.ndarray:
        if self.kind == "hadamard":
            return HADAMARD
        if self.kind == "cnot":
            return CNOT
        if self.kind == "controlled_swap":
            return FREDKIN
        return self.matrix


def hadamard(q: int) -> GateOp:
    return GateOp("hadamard", (q,))


def cnot(control: int, target: int) -> GateOp:
    return GateOp("cnot", (control, target))


def controlled_swap(control: int, a: int, b: int) -> GateOp:
    return GateOp("controlled_swap", (control, a, b))


def local_unitary(targets: Sequence[int], matrix) -> GateOp:
    return GateOp("local_unitary", tuple(targets), np.asarray(matrix, dtype=complex))


def embed(op: np.ndarray, targets: Sequence[int], n_qubits: int) -> np.ndarray:
    """Full-register matrix of ``op`` acting on ``targets`` (identity elsewhere)."""
    k = len(targets)
    if any(t < 0 or t >= n_qubits for t in targets):
        raise TargetOutOfRange(f"targets {tuple(targets)} outside a {n_qubits}-qubit register")
    d = 2**n_qubits
    ident = np.eye(d, dtype=complex).reshape([2] * n_qubits + [d])
    op_t = np.asarray(op, dtype=complex).reshape([2] * (2 * k))
    out = np.tensordot(op_t, ident, axes=(list(range(k, 2 * k)), list(targets)))
    # tensordot puts the op's output legs first; move them back into place
    out = np.moveaxis(out, list(range(k)), list(targets))
    return out.reshape(d, d)


@dataclass(frozen=True, eq=False)
class CircuitState:
    """Density matrix of the whole register."""

    register: np.ndarray
    n_qubits: int = N_REGISTER

    def __post_init__(self):
        d = 2**self.n_qubits
        if self.register.shape != (d, d):
            raise ValueError(f"register shape {self.register.shape} != ({d}, {d})")

    @property
    def trace(self) -> float:
        return float(np.trace(self.register).real)

    def as_density(self) -> DensityMatrix:
        """Validated copy; checks Hermiticity, trace and positivity."""
        return DensityMatrix(self.register)

    def reduced(self, qubits: Iterable[int]) -> np.ndarray:
        return partial_trace(self.register, [2] * self.n_qubits, list(qubits))


def apply_gate(state: CircuitState, gate: GateOp) -> CircuitState:
    """G rho G^dagger for the full-register embedding G of ``gate``."""
    g = embed(gate.local_matrix(), gate.targets, state.n_qubits)
    rho = g @ state.register @ dagger(g)
    if abs(np.trace(rho).real - state.trace) >= TRACE_ATOL:
        raise ArithmeticError("gate application changed the trace")
    return CircuitState(rho, state.n_qubits)


def run(state: CircuitState, gates: Iterable[GateOp]) -> CircuitState:
    for gate in gates:
        state = apply_gate(state, gate)
    return state


def ancilla_polarization(state: CircuitState, ancilla: int = ANCILLA) -> float:
    """<sigma_z> of the ancilla; the only quantity the interferometer reads out."""
    reduced = state.reduced([ancilla])
    return float((reduced[0, 0] - reduced[1, 1]).real)


def sample_polarization(expectation: float, shots: int, rng: np.random.Generator | None = None) -> float:
    """Estimate <sigma_z> from ``shots`` projective ancilla measurements."""
    if shots < 1:
        raise ValueError(f"shots must be positive, got {shots}")
    rng = rng if rng is not None else np.random.default_rng()
    p0 = min(max((1 + expectation) / 2, 0.0), 1.0)
    zeros = rng.binomial(shots, p0)
    return 2 * zeros / shots - 1


def ghz_copy_gates(copy: Sequence[int]) -> list[GateOp]:
    a, b, c = copy
    return [hadamard(a), cnot(a, b), cnot(a, c)]


def spin_rotation_gates(axis: str, theta: float, copy: Sequence[int] = COPY2) -> list[GateOp]:
    """exp(-i sigma_axis theta / 2) on every qubit of ``copy``; together U_{J3}(theta)."""
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    u = unitary_from_hermitian(PAULI[axis] / 2, theta)
    return [local_unitary((q,), u) for q in copy]


def swap_test_gates(ancilla: int = ANCILLA, copy1: Sequence[int] = COPY1, copy2: Sequence[int] = COPY2) -> list[GateOp]:
    gates = [controlled_swap(ancilla, a, b) for a, b in zip(copy1, copy2)]
    gates.append(hadamard(ancilla))
    return gates


def product_register(rho1, rho2) -> CircuitState:
    """|+><+| (x) rho1 (x) rho2 for two three-qubit states."""
    return CircuitState(kron(PLUS, np.asarray(rho1, dtype=complex), np.asarray(rho2, dtype=complex)))


def _check_p(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise ParamOutOfRange(f"mixing parameter p must lie in [0, 1], got {p}")
    return float(p)


def prepare_two_copies(p: float) -> CircuitState:
    """Ancilla in |+> and two GHZ-diagonal copies built gate by gate from polarized qubits."""
    q = single_qubit_polarized(_check_p(p)).matrix
    state = CircuitState(kron(PLUS, *[q] * 6))
    return run(state, ghz_copy_gates(COPY1) + ghz_copy_gates(COPY2))


def swap_test(rho1, rho2, shots: int | None = None, rng: np.random.Generator | None = None) -> float:
    """Ancilla polarization after a swap test on two injected three-qubit states."""
    out = run(product_register(as_density(rho1), as_density(rho2)), swap_test_gates())
    value = ancilla_polarization(out)
    return value if shots is None else sample_polarization(value, shots, rng)


def swap_test_overlap(
    p: float, axis: str, theta: float, shots: int | None = None, rng: np.random.Generator | None = None
) -> float:
    """Tr[rho U rho U^dagger] for rho = ghz_diagonal(p), U = U_{J3,axis}(theta), via the circuit.

    With ``shots=None`` the exact ancilla expectation is returned; otherwise
    it is estimated from that many binomial samples.
    """
    state = prepare_two_copies(p)
    gates = []
    if theta != 0:
        gates += spin_rotation_gates(axis, theta)
    gates += swap_test_gates()
    value = ancilla_polarization(run(state, gates))
    return value if shots is None else sample_polarization(value, shots, rng)


def measure_bound_via_circuit(
    p: float, axis: str, theta: float, shots: int | None = None, rng: np.random.Generator | None = None
) -> float:
    """Finite-shift bound estimate 4 (purity - overlap) / theta^2 from two circuit runs."""
    if theta == 0:
        raise ThetaZero("theta must be nonzero")
    if shots is not None and rng is None:
        rng = np.random.default_rng()
    pur = swap_test_overlap(p, axis, 0.0, shots, rng)
    ov = swap_test_overlap(p, axis, theta, shots, rng)
    return 4 * (pur - ov) / theta**2
