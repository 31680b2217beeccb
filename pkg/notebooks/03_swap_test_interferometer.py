# %% [markdown]
# # Measuring the bound without tomography
#
# Seven qubits: an ancilla in |+> and two copies of the GHZ-diagonal state.
# One copy is rotated by U_J(theta) = exp(-i J theta), the ancilla controls a
# SWAP of the copies and gets a final Hadamard. Its polarization equals the
# overlap Tr[rho U rho U^+]; at theta = 0 it is the purity.

# %%
import numpy as np

from qasymmetry import ApproximationConfig, bound_approx, collective_spin, ghz_diagonal
from qasymmetry.interferometer import measure_bound_via_circuit, prepare_two_copies, swap_test, swap_test_overlap

theta = np.pi / 6
p = 0.8

# %%
purity = swap_test_overlap(p, "z", 0.0)
overlap = swap_test_overlap(p, "z", theta)
estimate = 4 * (purity - overlap) / theta**2
analytic, err = bound_approx(ghz_diagonal(p), collective_spin(3, "z"), ApproximationConfig(theta))
print(f"purity {purity:.6f}  overlap {overlap:.6f}")
print(f"O_ap from circuit {estimate:.12f}, from the state {analytic:.12f}")

# %% [markdown]
# The copies really are the GHZ-diagonal state: tracing out the ancilla and
# the other copy gives it back.

# %%
state = prepare_two_copies(p)
print(np.max(np.abs(state.reduced([1, 2, 3]) - ghz_diagonal(p).matrix)))

# %% [markdown]
# The swap test works for any pair of states, not only rotated copies.

# %%
rng = np.random.default_rng(0)
a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
b = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
rho, sigma = a @ a.conj().T, b @ b.conj().T
rho, sigma = rho / np.trace(rho), sigma / np.trace(sigma)
print(swap_test(rho, sigma), np.trace(rho @ sigma).real)

# %% [markdown]
# With a finite number of ancilla measurements the estimate fluctuates.

# %%
for shots in (100, 1_000, 10_000, 100_000):
    samples = [measure_bound_via_circuit(p, "z", theta, shots=shots, rng=rng) for _ in range(20)]
    print(f"{shots:>7} shots: {np.mean(samples):.4f} +/- {np.std(samples):.4f}")
