# %% [markdown]
# # Witnessing entanglement with the asymmetry bound
#
# Any k-separable state of N qubits has F(J) <= n k^2 + (N - n k)^2 with
# n = floor(N/k). Since O <= F, a bound above that value is a witness too.
# For three qubits the thresholds are 3 (entangled) and 5 (genuinely
# tripartite); the axis average must exceed 2.

# %%
import numpy as np

from qasymmetry import evaluate_witnesses, ghz_diagonal, solve_threshold, witness_threshold
from qasymmetry.witnesses import ghz_exact_margin
from qasymmetry.witnesses import spin_quantity

print({k: witness_threshold(3, k) for k in (1, 2, 3)})

# %%
def curve(kind, axis):
    if axis == "mean":
        return lambda p: np.mean([spin_quantity(ghz_diagonal(p), 3, a, kind) for a in "xyz"])
    return lambda p: spin_quantity(ghz_diagonal(p), 3, axis, kind)


for kind in ("qfi", "bound"):
    for axis, target in [("z", 3), ("z", 5), ("x", 3), ("mean", 2)]:
        t = solve_threshold(curve(kind, axis), target)
        print(f"{kind:>5} {axis:>4} > {target}: p > {'never' if t is None else f'{t:.3f}'}")

# %% [markdown]
# The bound misses entanglement only between the two thresholds, e.g. for
# 0.674 < p < 0.751 on the z axis. The exact criterion for GHZ-diagonal
# states switches on at p = 2^(2/3) - 1.

# %%
print("exact boundary:", solve_threshold(lambda p: ghz_exact_margin(ghz_diagonal(p)), 0.0, xtol=1e-10))
print("2^(2/3) - 1   :", 2 ** (2 / 3) - 1)

# %%
v = evaluate_witnesses(ghz_diagonal(0.9), 3, kind="bound_approx")
for axis, w in v.per_axis.items():
    print(axis, round(w.value, 4), "entangled" if w.entangled else "-", "tripartite" if w.genuinely_multipartite else "")
print("mean", round(v.averaged.value, 4), v.averaged.entangled)
