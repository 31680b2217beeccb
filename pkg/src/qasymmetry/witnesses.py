"""Entanglement witnesses built from the QFI, its bound, or the finite-shift estimate."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

import numpy as np
from scipy.optimize import bisect

from .asymmetry import ApproximationConfig, bound, bound_approx, qfi
from .errors import DimensionMismatch, InvalidK, NotMonotone
from .states import AXES, as_density, collective_spin

QuantityKind = Literal["qfi", "bound", "bound_approx"]
QUANTITY_KINDS = ("qfi", "bound", "bound_approx")


def witness_threshold(n_qubits: int, k: int) -> float:
    """n k^2 + (N - n k)^2 with n = floor(N / k).

    Any k-separable state of N qubits has a QFI at most this large, so a
    larger value certifies genuine (k+1)-partite entanglement.
    """
    if not 1 <= k <= n_qubits:
        raise InvalidK(f"k must satisfy 1 <= k <= {n_qubits}, got {k}")
    n = n_qubits // k
    return float(n * k**2 + (n_qubits - n * k) ** 2)


def averaged_threshold(n_qubits: int) -> float:
    return 2 * n_qubits / 3


@dataclass(frozen=True)
class AxisWitness:
    value: float
    threshold_k1: float
    threshold_k2: float | None
    entangled: bool
    genuinely_multipartite: bool
    by_k: dict[int, bool] = field(default_factory=dict)


@dataclass(frozen=True)
class AveragedWitness:
    value: float
    threshold: float
    entangled: bool


@dataclass(frozen=True)
class WitnessVerdict:
    per_axis: dict[str, AxisWitness]
    averaged: AveragedWitness
    quantity_kind: str
    n_qubits: int

    @property
    def entangled(self) -> bool:
        return self.averaged.entangled or any(w.entangled for w in self.per_axis.values())

    @property
    def genuinely_multipartite(self) -> bool:
        return any(w.genuinely_multipartite for w in self.per_axis.values())


def spin_quantity(rho, n_qubits: int, axis: str, kind: QuantityKind, cfg: ApproximationConfig | None = None) -> float:
    """Selected asymmetry quantity of ``rho`` for J_{N,axis}."""
    j = collective_spin(n_qubits, axis)
    if kind == "qfi":
        return qfi(rho, j)
    if kind == "bound":
        return bound(rho, j)
    if kind == "bound_approx":
        return bound_approx(rho, j, cfg)[0]
    raise ValueError(f"kind must be one of {QUANTITY_KINDS}, got {kind!r}")


def verdict_from_values(
    values: dict[str, float], n_qubits: int, kind: str, ks: Sequence[int] = ()
) -> WitnessVerdict:
    """Apply the strict witness inequalities to precomputed per-axis values."""
    t1 = witness_threshold(n_qubits, 1)
    t2 = witness_threshold(n_qubits, 2) if n_qubits >= 2 else None
    per_axis = {}
    for axis in AXES:
        v = values[axis]
        per_axis[axis] = AxisWitness(
            value=v,
            threshold_k1=t1,
            threshold_k2=t2,
            entangled=v > t1,
            genuinely_multipartite=t2 is not None and v > t2,
            by_k={k: v > witness_threshold(n_qubits, k) for k in ks},
        )
    mean = float(np.mean([values[a] for a in AXES]))
    t_avg = averaged_threshold(n_qubits)
    return WitnessVerdict(per_axis, AveragedWitness(mean, t_avg, mean > t_avg), kind, n_qubits)


def evaluate_witnesses(
    rho,
    n_qubits: int,
    cfg: ApproximationConfig | None = None,
    kind: QuantityKind = "bound",
    ks: Sequence[int] = (),
) -> WitnessVerdict:
    rho = as_density(rho)
    if rho.dim != 2**n_qubits:
        raise DimensionMismatch(f"state dimension {rho.dim} != 2**{n_qubits}")
    values = {a: spin_quantity(rho, n_qubits, a, kind, cfg) for a in AXES}
    return verdict_from_values(values, n_qubits, kind, ks)


def ghz_exact_margin(rho) -> float:
    """|rho_18| - sum of sqrt(rho_jj rho_kk) over the mirrored diagonal pairs.

    Positive exactly when the three-qubit GHZ-diagonal state is genuinely
    tripartite entangled. Indices follow the computational basis with qubit A
    most significant.
    """
    m = np.asarray(rho, dtype=complex)
    if m.shape != (8, 8):
        raise DimensionMismatch(f"expected an 8x8 matrix, got {m.shape}")
    d = m.diagonal().real.clip(min=0)
    return float(abs(m[0, 7]) - sum(math.sqrt(d[i] * d[7 - i]) for i in (1, 2, 3)))


def ghz_exact_condition(rho) -> bool:
    return ghz_exact_margin(rho) > 0


def solve_threshold(
    quantity: Callable[[float], float], target: float, xtol: float = 1e-6, lo: float = 0.0, hi: float = 1.0
) -> float | None:
    """Smallest p in [lo, hi] where a nondecreasing ``quantity`` reaches ``target``.

    Returns None when quantity(hi) <= target, i.e. the threshold is never
    crossed on the interval.
    """
    f_lo = quantity(lo) - target
    f_hi = quantity(hi) - target
    if f_hi <= 0:
        return None
    if f_lo >= 0:
        raise NotMonotone(f"quantity({lo}) = {f_lo + target} already exceeds target {target}")
    return bisect(lambda p: quantity(p) - target, lo, hi, xtol=xtol)
