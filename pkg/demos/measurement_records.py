"""
Sampling measurement records
============================

The operator route gives the probability that every measurement returns the
initial outcome.  Sampling individual records with the Born rule gives the same
number as a frequency, together with the times at which the system jumps.
"""
import numpy as np

from quasizeno import zeno
from quasizeno.hilbert import build_site_operators, spin1_basis
from quasizeno.models import ModelSpec, ObservableSpec, build_hamiltonian, build_observable

ops = build_site_operators(spin1_basis())
h = build_hamiltonian(ModelSpec("Spin1Transverse", lam=1.0), ops)
projset = zeno.projectors_from_observable(build_observable(ObservableSpec("AbsSz"), ops))
psi0 = ops.basis.state(-1)
dt, n = 0.05, 400

# %%
# One record.  Outcomes are indices into ``projset.eigenvalues``.
traj = zeno.sample_trajectory(h, projset, psi0, dt, n, seed=1)
jump = traj.first_jump()
print("first jump:", "none" if jump is None else f"step {jump}, t = {traj.times[jump]:.2f}")
print("log-probability of the record:", round(traj.log_survival[-1], 4))

# %%
# Many records, compared with ||(P U)^N psi0||^2.
ens = zeno.sample_ensemble(h, projset, psi0, dt, n, n_trajectories=20000, seed=7)
exact = zeno.survival_exact(h, projset.projectors[1], psi0, dt, n)
sigma = np.sqrt(exact * (1 - exact) / ens.n_trajectories)
print(f"no-jump frequency {ens.no_jump_fraction:.4f}, operator route {exact:.4f} "
      f"(binomial sigma {sigma:.4f})")
print("Zeno-locking metric per step:",
      round(zeno.zeno_locking_metric(h, psi0, projset.projectors[1], dt), 6))
