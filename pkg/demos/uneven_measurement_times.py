"""
Uneven gaps between measurements
================================

When the gaps ``dt_j`` vary, the second-order contribution is weighted by
``sum_j dt_j^2 / 2`` rather than ``N dt^2 / 2``.  For random gaps only the
first two moments of the gap distribution matter.
"""
import numpy as np

from quasizeno import zeno
from quasizeno.hilbert import build_site_operators, spin1_basis
from quasizeno.models import ModelSpec, ObservableSpec, build_hamiltonian, build_observable

ops = build_site_operators(spin1_basis())
h = build_hamiltonian(ModelSpec("Spin1Transverse", lam=1.0), ops)
p = zeno.projectors_from_observable(build_observable(ObservableSpec("AbsSz"), ops)).projectors[1]
psi0 = ops.basis.state(-1)
mean_dt, tau = 0.01, 100.0
rng = np.random.default_rng(3)


def survival(u):
    psi = u @ psi0
    return np.vdot(psi, psi).real


# %%
# Regular, uniformly jittered and exponentially distributed gaps with the same mean.
gaps = {
    "regular": np.full(int(tau / mean_dt), mean_dt),
    "uniform jitter": rng.uniform(0, 2 * mean_dt, size=int(tau / mean_dt)),
    "exponential": rng.exponential(mean_dt, size=int(tau / mean_dt)),
}
print("gaps            <dt^2>/<dt>^2   exact    product   closed form")
for name, steps in gaps.items():
    exact = survival(zeno.exact_piecewise(h, p, steps))
    product = survival(zeno.nonuniform_effective_evolution(h, p, steps))
    closed = survival(zeno.second_order_closed_form(h, p, steps))
    print(f"{name:15s} {np.mean(steps**2) / mean_dt**2:10.2f}   {exact:.5f}  {product:.5f}   {closed:.5f}")

# %%
# The averaged description needs only <dt> and <dt^2>.
for label, second in (("regular", mean_dt**2), ("exponential", 2 * mean_dt**2)):
    n_avg, weight = zeno.stochastic_timestep_summary(mean_dt, second, tau)
    print(f"{label:12s} <N> = {n_avg:.0f}, second-order weight = {weight:.3f}, "
          f"survival = {survival(zeno.averaged_closed_form(h, p, mean_dt, second, tau)):.5f}")
