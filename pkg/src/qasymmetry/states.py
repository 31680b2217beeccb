"""Density matrices, spin observables and the GHZ-diagonal family.

Qubit 0 is always the most significant bit of a computational-basis index,
so for three qubits A, B, C the basis state |abc> has index 4a + 2b + c.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DimensionMismatch, ParamOutOfRange
from .linalg import (
    SpectralDecomposition,
    as_matrix,
    check_hermitian,
    dagger,
    hermitian_eigendecomposition,
    kron,
)

STATE_ATOL = 1e-10

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}
AXES = ("x", "y", "z")

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


@dataclass(frozen=True, eq=False)
class HermitianObservable:
    """A Hermitian operator with a lazily computed spectral decomposition."""

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", check_hermitian(self.matrix))
        self.matrix.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def spectrum(self) -> SpectralDecomposition:
        return hermitian_eigendecomposition(self.matrix)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)


@dataclass(frozen=True, eq=False)
class DensityMatrix(HermitianObservable):
    """Unit-trace positive semidefinite operator.

    Construction validates Hermiticity, trace and positivity to 1e-10.
    """

    def __post_init__(self):
        super().__post_init__()
        tr = np.trace(self.matrix).real
        if abs(tr - 1) >= STATE_ATOL:
            raise ValueError(f"density matrix trace is {tr!r}, expected 1")
        lmin = self.spectrum.eigenvalues[0]
        if lmin < -STATE_ATOL:
            raise ValueError(f"density matrix has negative eigenvalue {lmin:.3e}")

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.spectrum.eigenvalues

    @cached_property
    def purity(self) -> float:
        return purity(self)

    def is_pure(self, tol: float = 1e-8) -> bool:
        return self.purity > 1 - tol


@dataclass(frozen=True, eq=False)
class AdditiveSpinHamiltonian(HermitianObservable):
    """Collective spin J = sum_i sigma_axis^(i) / 2 on ``n_qubits`` qubits."""

    n_qubits: int = field(default=1)
    axis: str = field(default="z")


def as_density(rho) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(as_matrix(rho))


def as_observable(h) -> HermitianObservable:
    return h if isinstance(h, HermitianObservable) else HermitianObservable(as_matrix(h))


def pure_state(psi) -> DensityMatrix:
    """Projector onto the normalized vector ``psi``."""
    v = np.asarray(psi, dtype=complex).ravel()
    v = v / np.linalg.norm(v)
    return DensityMatrix(np.outer(v, v.conj()))


def maximally_mixed(dim: int) -> DensityMatrix:
    return DensityMatrix(np.eye(dim, dtype=complex) / dim)


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParamOutOfRange(f"mixing parameter p must lie in [0, 1], got {p}")
    return p


def single_qubit_polarized(p: float) -> DensityMatrix:
    """(I + p sigma_z) / 2."""
    p = _check_p(p)
    return DensityMatrix(np.diag([(1 + p) / 2, (1 - p) / 2]).astype(complex))


def embed_single(op: np.ndarray, site: int, n_qubits: int) -> np.ndarray:
    """``op`` acting on qubit ``site``, identity elsewhere."""
    return kron(*[op if k == site else I2 for k in range(n_qubits)])


def cnot_matrix(control: int, target: int, n_qubits: int) -> np.ndarray:
    """Permutation matrix of a CNOT inside an ``n_qubits`` register."""
    d = 2**n_qubits
    idx = np.arange(d)
    cbit = (idx >> (n_qubits - 1 - control)) & 1
    image = idx ^ (cbit << (n_qubits - 1 - target))
    u = np.zeros((d, d), dtype=complex)
    u[image, idx] = 1
    return u


def ghz_preparation_unitary() -> np.ndarray:
    """CNOT(A->C) CNOT(A->B) (Had_A x I x I); maps |000> to the GHZ state."""
    return cnot_matrix(0, 2, 3) @ cnot_matrix(0, 1, 3) @ kron(HADAMARD, I2, I2)


def ghz_diagonal(p: float) -> DensityMatrix:
    """Three-qubit GHZ-diagonal state obtained from three polarized qubits.

    Each qubit starts in (I + p sigma_z)/2; a Hadamard on A and CNOTs from A
    to B and C then map the product basis onto the GHZ basis.
    """
    q = single_qubit_polarized(p).matrix
    # sqrt(2) * Hadamard has integer entries; dividing once keeps p = 0 exactly I/8
    g = cnot_matrix(0, 2, 3) @ cnot_matrix(0, 1, 3) @ kron(np.sqrt(2) * HADAMARD, I2, I2)
    g = np.round(g.real)
    rho = g @ kron(q, q, q) @ g.T / 2
    return DensityMatrix(rho)


def ghz_basis() -> np.ndarray:
    """Columns are the eight GHZ-type vectors G|abc>."""
    return ghz_preparation_unitary()


def collective_spin(n_qubits: int, axis: str) -> AdditiveSpinHamiltonian:
    if n_qubits < 1:
        raise DimensionMismatch(f"need at least one qubit, got {n_qubits}")
    try:
        sigma = PAULI[axis]
    except KeyError:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}") from None
    j = sum(embed_single(sigma / 2, i, n_qubits) for i in range(n_qubits))
    return AdditiveSpinHamiltonian(j, n_qubits=n_qubits, axis=axis)


def purity(rho) -> float:
    """Tr[rho^2]."""
    m = np.asarray(rho, dtype=complex)
    # Tr[rho rho] = sum |rho_ij|^2 for Hermitian rho
    return float(np.sum(np.abs(m) ** 2))
