"""Asymmetry quantifiers, entanglement witnesses and a swap-test simulator for few-qubit states."""
from .asymmetry import (
    ApproximationConfig,
    AsymmetryReport,
    bound,
    bound_approx,
    bound_closed_form,
    full_report,
    qfi,
    spin_report,
    variance,
)
from .errors import (
    DimensionMismatch,
    InvalidK,
    NonConvergent,
    NonHermitian,
    NotMonotone,
    NotPure,
    ParamOutOfRange,
    QAsymmetryError,
    TargetOutOfRange,
    ThetaZero,
    UnsupportedN,
)
from .interferometer import (
    CircuitState,
    GateOp,
    apply_gate,
    measure_bound_via_circuit,
    prepare_two_copies,
    swap_test,
    swap_test_overlap,
)
from .linalg import SpectralDecomposition, hermitian_eigendecomposition, kron, partial_trace, unitary_from_hermitian
from .states import (
    AdditiveSpinHamiltonian,
    DensityMatrix,
    HermitianObservable,
    collective_spin,
    ghz_diagonal,
    purity,
    single_qubit_polarized,
)
from .witnesses import (
    WitnessVerdict,
    evaluate_witnesses,
    ghz_exact_condition,
    solve_threshold,
    witness_threshold,
)

__version__ = "0.1.0"
