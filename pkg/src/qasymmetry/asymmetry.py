"""Quantum Fisher information and its observable lower bound.

Conventions: the phase shift is U_H(theta) = exp(-i H theta) and the QFI is
normalized so that a pure state gives 4 (<H^2> - <H>^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DimensionMismatch, NotPure, ParamOutOfRange, ThetaZero, UnsupportedN
from .linalg import commutator, dagger, kron, unitary_from_hermitian
from .states import I2, PAULI, AXES, as_density, as_observable, collective_spin, purity

QFI_EIG_CUTOFF = 1e-12


@dataclass(frozen=True)
class ApproximationConfig:
    """Finite phase shift ``theta`` used in place of the zero-shift limit."""

    theta: float = math.pi / 6
    theta0: float = 0.0

    def __post_init__(self):
        if self.theta == self.theta0:
            raise ThetaZero(f"theta must differ from theta0 (both {self.theta})")
        if abs(self.theta) > math.pi:
            raise ParamOutOfRange(f"|theta| must not exceed pi, got {self.theta}")


@dataclass(frozen=True)
class AsymmetryReport:
    qfi: float
    bound: float
    bound_approx: float
    approx_error: float


def _pair(rho, h):
    rho = as_density(rho)
    h = as_observable(h)
    if rho.dim != h.dim:
        raise DimensionMismatch(f"state has dimension {rho.dim}, observable {h.dim}")
    return rho, h


def qfi(rho, h) -> float:
    """SLD quantum Fisher information of ``rho`` for phase shifts generated by ``h``.

    F = 2 sum_ij (l_i - l_j)^2 / (l_i + l_j) |<i|H|j>|^2 over the eigenpairs
    of rho; pairs with l_i + l_j < 1e-12 contribute nothing.
    """
    rho, h = _pair(rho, h)
    lam, vecs = rho.spectrum
    h_eig = dagger(vecs) @ h.matrix @ vecs
    num = (lam[:, None] - lam[None, :]) ** 2
    den = lam[:, None] + lam[None, :]
    mask = den >= QFI_EIG_CUTOFF
    weights = np.zeros_like(num)
    weights[mask] = num[mask] / den[mask]
    return float(2 * np.sum(weights * np.abs(h_eig) ** 2))


def variance(psi, h) -> float:
    """4 (<H^2> - <H>^2) for a pure state."""
    psi, h = _pair(psi, h)
    if not psi.is_pure():
        raise NotPure(f"state purity {psi.purity:.12f} is below 1 - 1e-8")
    rho, hm = psi.matrix, h.matrix
    mean = np.trace(rho @ hm).real
    mean_sq = np.trace(rho @ hm @ hm).real
    return float(max(4 * (mean_sq - mean**2), 0.0))


def bound(rho, h) -> float:
    """Observable lower bound -2 Tr[[rho, H]^2] on the QFI.

    [rho, H] is anti-Hermitian, so -Tr[C^2] is its squared Frobenius norm and
    the result is non-negative by construction.
    """
    rho, h = _pair(rho, h)
    c = commutator(rho.matrix, h.matrix)
    return float(2 * np.sum(np.abs(c) ** 2))


def overlap(rho, u: np.ndarray) -> float:
    """Tr[rho U rho U^dagger]."""
    m = np.asarray(rho, dtype=complex)
    return float(np.trace(m @ u @ m @ dagger(u)).real)


def fourth_order_coefficient(rho, h) -> float:
    """c4 = Tr[rho ad_H^4(rho)] / 24, the theta^4 term of the overlap expansion."""
    rho, h = _pair(rho, h)
    nested = rho.matrix
    for _ in range(4):
        nested = commutator(h.matrix, nested)
    return float(np.trace(rho.matrix @ nested).real / 24)


def bound_approx(rho, h, cfg: ApproximationConfig | None = None) -> tuple[float, float]:
    """Finite-shift estimate of the bound and its truncation error.

    Returns ``(value, error)`` with value = 4 (Tr[rho^2] - Tr[rho U rho U^+]) / theta^2
    and error = 4 |c4| theta^2. For a nonzero expansion point the purity is
    replaced by the overlap at theta0; no error estimate exists there and the
    error is NaN.
    """
    cfg = cfg or ApproximationConfig()
    rho, h = _pair(rho, h)
    shift = cfg.theta - cfg.theta0
    if shift == 0:
        raise ThetaZero("theta equals theta0")
    ref = purity(rho) if cfg.theta0 == 0 else overlap(rho, unitary_from_hermitian(h, cfg.theta0))
    shifted = overlap(rho, unitary_from_hermitian(h, cfg.theta))
    value = 4 * (ref - shifted) / shift**2
    if cfg.theta0 != 0:
        return value, math.nan
    error = 4 * abs(fourth_order_coefficient(rho, h)) * shift**2
    return value, error


def _spin_rotation(axis: str, sites, n_qubits: int, theta: float) -> np.ndarray:
    # exp(-i sigma theta / 2) = cos(theta/2) I - i sin(theta/2) sigma
    local = math.cos(theta / 2) * I2 - 1j * math.sin(theta / 2) * PAULI[axis]
    return kron(*[local if k in sites else I2 for k in range(n_qubits)])


def bound_closed_form(rho, axis: str, n_qubits: int) -> float:
    """Exact bound for J_{N,axis}, N <= 3, from purities and overlaps at shifts pi/2 and pi.

    Only overlaps Tr[rho U rho U^+] with products of single-qubit spin
    rotations enter, so every term is measurable with a swap test.
    """
    if n_qubits not in (1, 2, 3):
        raise UnsupportedN(f"closed forms exist for 1, 2 or 3 qubits, not {n_qubits}")
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")
    rho = as_density(rho)
    if rho.dim != 2**n_qubits:
        raise DimensionMismatch(f"state dimension {rho.dim} != 2**{n_qubits}")

    def ov(sites, theta):
        return overlap(rho, _spin_rotation(axis, sites, n_qubits, theta))

    p = rho.purity
    if n_qubits == 1:
        return p - ov((0,), math.pi)
    if n_qubits == 2:
        return 3 * p - 4 * ov((0, 1), math.pi / 2) + ov((0, 1), math.pi)
    pairs = list(combinations(range(3), 2))
    return (
        6 * p
        - 4 * sum(ov(s, math.pi / 2) for s in pairs)
        + sum(ov(s, math.pi) for s in pairs)
        + sum(ov((i,), math.pi) for i in range(3))
    )


def full_report(rho, h, cfg: ApproximationConfig | None = None) -> AsymmetryReport:
    rho, h = _pair(rho, h)
    value, error = bound_approx(rho, h, cfg)
    return AsymmetryReport(qfi=qfi(rho, h), bound=bound(rho, h), bound_approx=value, approx_error=error)


def spin_report(rho, axis: str, n_qubits: int, cfg: ApproximationConfig | None = None) -> AsymmetryReport:
    """``full_report`` for the collective spin J_{N,axis}."""
    return full_report(rho, collective_spin(n_qubits, axis), cfg)
