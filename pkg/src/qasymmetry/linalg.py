"""Dense complex linear algebra used throughout the package.

All matrices are plain ``numpy.ndarray`` objects of complex dtype. Dimensions
never exceed 2**10, so everything is dense.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NonConvergent, NonHermitian

HERMITIAN_ATOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvectors stored as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def __iter__(self):
        # allows ``vals, vecs = decomposition``
        return iter((self.eigenvalues, self.eigenvectors))


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def hermiticity_error(a: np.ndarray) -> float:
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def check_hermitian(a, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Return ``a`` as a symmetrized complex array, or raise NonHermitian."""
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise NonHermitian(f"matrix is not square: {m.shape}")
    err = hermiticity_error(m)
    if err >= atol:
        raise NonHermitian(f"max|A - A^dagger| = {err:.3e} exceeds {atol:.0e}")
    return (m + m.conj().T) / 2


def hermitian_eigendecomposition(a) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    The input is symmetrized before LAPACK ``heevd`` is called. Ties keep the
    order LAPACK returns them in, which is deterministic for a given input.
    """
    m = check_hermitian(a)
    try:
        vals, vecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NonConvergent(str(exc)) from exc
    order = np.argsort(vals, kind="stable")
    return SpectralDecomposition(vals[order], vecs[:, order])


def kron(*mats) -> np.ndarray:
    """Kronecker product of one or more matrices, left to right."""
    if not mats:
        raise ValueError("kron needs at least one matrix")
    return reduce(np.kron, (as_matrix(m) for m in mats))


def partial_trace(a, subsystem_dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out every subsystem whose index is not in ``keep``.

    Subsystem 0 is the most significant factor of the tensor product. Kept
    subsystems appear in the output in ascending index order.
    """
    m = as_matrix(a)
    dims = [int(d) for d in subsystem_dims]
    if any(d < 1 for d in dims):
        raise DimensionMismatch(f"subsystem dims must be positive: {dims}")
    total = int(np.prod(dims))
    if m.shape != (total, total):
        raise DimensionMismatch(f"matrix shape {m.shape} does not match subsystem dims {dims}")
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in keep):
        raise DimensionMismatch(f"keep indices {keep} out of range for {n} subsystems")

    traced = [i for i in range(n) if i not in keep]
    t = m.reshape(dims + dims)
    # contract the highest axes first so lower indices stay valid
    for i in sorted(traced, reverse=True):
        nsub = t.ndim // 2
        t = np.trace(t, axis1=i, axis2=i + nsub)
    d_keep = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(d_keep, d_keep)


def unitary_from_hermitian(h, theta: float) -> np.ndarray:
    """Phase shift exp(-i h theta) built from the spectral decomposition of ``h``."""
    if isinstance(h, SpectralDecomposition):
        dec = h
    else:
        spectrum = getattr(h, "spectrum", None)
        dec = spectrum if spectrum is not None else hermitian_eigendecomposition(h)
    vals, vecs = dec
    return (vecs * np.exp(-1j * vals * theta)) @ vecs.conj().T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T
