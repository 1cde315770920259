"""
A spin-1 that finds its own dark state
======================================

A single spin-1 is rotated by ``lam * S^X`` while ``|S^Z|`` is measured every
``dt``.  The pair ``{|-1>, |1>}`` shares the outcome ``|S^Z| = 1`` but the
Hamiltonian never links them directly, so the first-order Zeno Hamiltonian is
zero.  The second-order term still connects them through brief visits to
``|0>``, and that is enough to rotate ``|-1>`` into ``(|-1> - |1>)/sqrt(2)``.
"""
import numpy as np

from quasizeno import zeno
from quasizeno.errors import ZeroVector
from quasizeno.hilbert import build_site_operators, spin1_basis
from quasizeno.models import ModelSpec, ObservableSpec, build_hamiltonian, build_observable

ops = build_site_operators(spin1_basis())          # basis order |-1>, |0>, |1>
h = build_hamiltonian(ModelSpec("Spin1Transverse", lam=1.0), ops)
projset = zeno.projectors_from_observable(build_observable(ObservableSpec("AbsSz"), ops))
p = projset.projectors[1]                          # |S^Z| = 1
print("subspace dimensions:", projset.dims)

# %%
# The quasi-Zeno Hamiltonians on the |S^Z| = 1 subspace.
dt = 1e-2
stack = zeno.effective_hamiltonian(h, p, dt, order=2)
print("H_Z^(1) =\n", stack.hz[0].real.round(12))
print("H_Z^(2) =\n", stack.hz[1].real.round(12))

analysis = zeno.steady_state_analysis(stack)
print("eigenvalues of H_Z^(2) on the subspace:", analysis.eigenvalues.round(12))
print("steady state:", analysis.steady_states[:, 0].round(6))

# %%
# Evolve |-1>.  The |+> component decays as exp(-tau dt / 2) and the survival
# probability settles at one half.
psi0 = ops.basis.state(-1)
print("\n tau*dt   survival   |<-|psi>|^2 (normalised)")
minus = np.array([1, 0, -1]) / np.sqrt(2)
for x in (0, 1, 2, 5, 10, 20):
    tau = x / dt
    psi = zeno.effective_evolution(stack, tau) @ psi0
    norm2 = np.vdot(psi, psi).real
    overlap = abs(np.vdot(minus, psi)) ** 2 / norm2
    print(f"{x:7.1f}   {norm2:.6f}   {overlap:.6f}")

# %%
# The same number from the exact stroboscopic product (P U)^N.
n = int(20 / dt**2)
exact = zeno.exact_stroboscopic(h, p, dt, n) @ psi0
print("\nexact survival after", n, "measurements:", round(np.vdot(exact, exact).real, 6))

# %%
# Once in the dark state, a switch to |S^Z| = 0 is impossible: the matrix
# element P0 H P1 |-> vanishes.
try:
    zeno.subspace_switch(minus, p, projset.projectors[0], h)
except ZeroVector as exc:
    print("switch from the dark state:", exc)
