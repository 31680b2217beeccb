import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qasymmetry.asymmetry import (
    ApproximationConfig,
    bound,
    bound_approx,
    bound_closed_form,
    fourth_order_coefficient,
    full_report,
    qfi,
    variance,
)
from qasymmetry.errors import DimensionMismatch, NotPure, ParamOutOfRange, ThetaZero, UnsupportedN
from qasymmetry.linalg import kron, unitary_from_hermitian
from qasymmetry.states import SIGMA_Z, AXES, collective_spin, ghz_diagonal, purity

from conftest import random_density, random_hermitian, random_pure, random_unitary

seeds = st.integers(0, 2**32 - 1)
PI6 = ApproximationConfig(np.pi / 6)


def table1_qfi_z(p):
    return 2 * p**4 + 4 * p**3 + 3 * p**2


def table1_qfi_x(p):
    return 2 * p**2 * (p**2 + 2) / (p**2 + 1)


def table1_bound_z(p):
    return (3 * p**6 + 8 * p**5 + 14 * p**4 + 8 * p**3 + 3 * p**2) / 4


def spectral_bound(rho, h):
    lam, v = np.linalg.eigh(rho)
    hij = np.abs(v.conj().T @ h @ v) ** 2
    return 2 * np.sum((lam[:, None] - lam[None, :]) ** 2 * hij)


def trace_bound(rho, h):
    return 4 * np.trace(rho @ rho @ h @ h - rho @ h @ rho @ h).real


def stable_approx(rho, h, theta):
    """O^ap via the eigenbasis of H: 4 sum |rho_ab|^2 2 sin^2(d_ab theta/2) / theta^2."""
    e, v = np.linalg.eigh(h)
    r = np.abs(v.conj().T @ rho @ v) ** 2
    d = e[:, None] - e[None, :]
    return 4 * np.sum(r * 2 * np.sin(d * theta / 2) ** 2) / theta**2


class TestQfi:
    def test_incoherent_state(self, rng):
        h = np.diag(rng.normal(size=4))
        assert qfi(np.diag([0.1, 0.2, 0.3, 0.4]), h) == 0

    def test_pure_ghz(self):
        assert qfi(ghz_diagonal(1), collective_spin(3, "z")) == pytest.approx(9, abs=1e-12)

    def test_table1_x_axis(self):
        p = 0.6
        assert table1_qfi_x(p) == pytest.approx(1.249411764705882, abs=1e-12)
        assert qfi(ghz_diagonal(p), collective_spin(3, "x")) == pytest.approx(table1_qfi_x(p), abs=1e-12)

    def test_rank_deficient_state_is_finite(self, rng):
        rho = random_density(rng, 8, rank=2)
        h = random_hermitian(rng, 8)
        f = qfi(rho, h)
        assert np.isfinite(f) and bound(rho, h) <= f + 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            qfi(np.eye(2) / 2, np.eye(4))


class TestVariance:
    def test_eigenvector(self):
        assert variance(np.diag([1, 0]), SIGMA_Z / 2) == pytest.approx(0, abs=1e-15)

    def test_plus_state(self):
        plus = np.full((2, 2), 0.5)
        assert variance(plus, SIGMA_Z / 2) == pytest.approx(1.0)

    def test_ghz(self):
        assert variance(ghz_diagonal(1), collective_spin(3, "z")) == pytest.approx(9)

    def test_rejects_mixed(self):
        with pytest.raises(NotPure):
            variance(np.eye(2) / 2, SIGMA_Z)


class TestBound:
    def test_commuting(self, rng):
        assert bound(np.diag([0.5, 0.3, 0.2]), np.diag(rng.normal(size=3))) == 0

    @pytest.mark.parametrize("p", [0.0, 0.3, 0.75, 1.0])
    def test_table1_z(self, p):
        assert bound(ghz_diagonal(p), collective_spin(3, "z")) == pytest.approx(table1_bound_z(p), abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(seeds, st.sampled_from([2, 4, 8]))
    def test_agrees_with_trace_and_spectral_forms(self, seed, dim):
        rng = np.random.default_rng(seed)
        rho, h = random_density(rng, dim), random_hermitian(rng, dim)
        o = bound(rho, h)
        assert abs(o - trace_bound(rho, h)) < 1e-10
        assert abs(o - spectral_bound(rho, h)) < 1e-10

    @settings(max_examples=40, deadline=None)
    @given(seeds)
    def test_tensor_product_scaling(self, seed):
        rng = np.random.default_rng(seed)
        ra, rb, ha = random_density(rng, 2), random_density(rng, 3), random_hermitian(rng, 2)
        lhs = bound(kron(ra, rb), kron(ha, np.eye(3)))
        assert abs(lhs - bound(ra, ha) * purity(rb)) < 1e-10

    @pytest.mark.parametrize("theta", [1e-2, 1e-3])
    def test_hilbert_schmidt_limit(self, rng, theta):
        rho, h = random_density(rng, 4), random_hermitian(rng, 4)
        u = unitary_from_hermitian(h, theta)
        hs = 2 * np.sum(np.abs(u @ rho @ u.conj().T - rho) ** 2) / theta**2
        assert hs == pytest.approx(bound(rho, h), rel=10 * theta**2 * np.max(np.abs(h)) ** 2)


class TestBoundApprox:
    def test_commuting_state_gives_zero(self, rng):
        value, error = bound_approx(np.diag([0.7, 0.3]), SIGMA_Z / 2, ApproximationConfig(0.9))
        assert value == pytest.approx(0, abs=1e-15) and error == 0

    def test_error_band_ghz(self):
        rho, j = ghz_diagonal(0.9), collective_spin(3, "z")
        value, error = bound_approx(rho, j, PI6)
        o = bound(rho, j)
        assert value < o
        assert value - error <= o <= value + error

    def test_small_theta_converges(self, rng):
        for _ in range(10):
            rho, h = random_density(rng, 8), random_hermitian(rng, 8)
            value, _ = bound_approx(rho, h, ApproximationConfig(1e-3))
            assert abs(value - bound(rho, h)) < 1e-4

    def test_matches_stable_oracle(self, rng):
        rho, h = random_density(rng, 4), random_hermitian(rng, 4)
        for theta in (0.1, 0.5, np.pi / 6, np.pi):
            assert bound_approx(rho, h, ApproximationConfig(theta))[0] == pytest.approx(
                stable_approx(rho, h, theta), abs=1e-12
            )

    @pytest.mark.parametrize("dim", [2, 4, 8])
    def test_error_matches_finite_difference(self, dim):
        rng = np.random.default_rng(dim)
        rho, h = random_density(rng, dim), random_hermitian(rng, dim)
        step = 1e-3
        # O^ap is even in theta, with O^ap(0) = O
        second = 2 * (stable_approx(rho, h, step) - bound(rho, h)) / step**2
        theta = np.pi / 6
        _, error = bound_approx(rho, h, ApproximationConfig(theta))
        assert error == pytest.approx(0.5 * abs(second) * theta**2, rel=1e-4)
        assert second == pytest.approx(-8 * fourth_order_coefficient(rho, h), rel=1e-4)

    def test_nonzero_expansion_point(self, rng):
        rho, h = random_density(rng, 4), random_hermitian(rng, 4)
        value, error = bound_approx(rho, h, ApproximationConfig(0.5, theta0=0.3))
        assert np.isfinite(value) and np.isnan(error)

    def test_config_validation(self):
        with pytest.raises(ThetaZero):
            ApproximationConfig(0.0)
        with pytest.raises(ParamOutOfRange):
            ApproximationConfig(4.0)


class TestClosedForm:
    def test_incoherent_qubit(self):
        assert bound_closed_form(np.eye(2) / 2, "z", 1) == pytest.approx(0, abs=1e-15)

    def test_plus_state(self):
        assert bound_closed_form(np.full((2, 2), 0.5), "z", 1) == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("p", [0.2, 0.6, 0.9])
    def test_ghz_table1(self, p):
        assert bound_closed_form(ghz_diagonal(p), "z", 3) == pytest.approx(table1_bound_z(p), abs=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(seeds, st.sampled_from([1, 2, 3]), st.sampled_from(AXES))
    def test_equals_commutator_bound(self, seed, n, axis):
        rho = random_density(np.random.default_rng(seed), 2**n)
        assert abs(bound_closed_form(rho, axis, n) - bound(rho, collective_spin(n, axis))) < 1e-10

    def test_errors(self):
        with pytest.raises(UnsupportedN):
            bound_closed_form(np.eye(16) / 16, "z", 4)
        with pytest.raises(DimensionMismatch):
            bound_closed_form(np.eye(4) / 4, "z", 3)


class TestFullReport:
    def test_ghz_08(self):
        r = full_report(ghz_diagonal(0.8), collective_spin(3, "z"), PI6)
        assert r.qfi == pytest.approx(4.7872, abs=1e-12)
        assert r.bound == pytest.approx(table1_bound_z(0.8), abs=1e-12)
        assert r.bound_approx <= r.bound

    def test_maximally_mixed(self):
        r = full_report(ghz_diagonal(0), collective_spin(3, "x"), PI6)
        assert max(abs(r.qfi), abs(r.bound), abs(r.bound_approx), abs(r.approx_error)) < 1e-12

    def test_pure_coincidence(self, rng):
        psi, h = random_pure(rng, 4), random_hermitian(rng, 4)
        r = full_report(psi, h, PI6)
        v = variance(psi, h)
        assert abs(r.qfi - r.bound) < 1e-9 and abs(r.qfi - v) < 1e-9


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(seeds, st.sampled_from([2, 4, 8]), st.floats(0.05, np.pi))
    def test_ordering_chain(self, seed, dim, theta):
        rng = np.random.default_rng(seed)
        rho, h = random_density(rng, dim, rank=int(rng.integers(1, dim + 1))), random_hermitian(rng, dim)
        ap, _ = bound_approx(rho, h, ApproximationConfig(theta))
        o, f = bound(rho, h), qfi(rho, h)
        assert -1e-9 <= ap <= o + 1e-9 and o <= f + 1e-9

    @settings(max_examples=30, deadline=None)
    @given(seeds)
    def test_convexity(self, seed):
        rng = np.random.default_rng(seed)
        a, b, h = random_density(rng, 4), random_density(rng, 4), random_hermitian(rng, 4)
        for p in np.linspace(0, 1, 11):
            assert qfi(p * a + (1 - p) * b, h) <= p * qfi(a, h) + (1 - p) * qfi(b, h) + 1e-9

    @settings(max_examples=30, deadline=None)
    @given(seeds, st.sampled_from([2, 4, 8]))
    def test_unitary_covariance(self, seed, dim):
        rng = np.random.default_rng(seed)
        rho, h, u = random_density(rng, dim), random_hermitian(rng, dim), random_unitary(rng, dim)
        ud = u.conj().T
        assert abs(qfi(u @ rho @ ud, u @ h @ ud) - qfi(rho, h)) < 1e-9
        assert abs(bound(u @ rho @ ud, u @ h @ ud) - bound(rho, h)) < 1e-9

    def test_faithfulness_on_incoherent_states(self, rng):
        for dim in (2, 4, 8):
            h = random_hermitian(rng, dim)
            _, v = np.linalg.eigh(h)
            rho = v @ np.diag(rng.dirichlet(np.ones(dim))) @ v.conj().T
            assert bound(rho, h) < 1e-10 and qfi(rho, h) < 1e-10
