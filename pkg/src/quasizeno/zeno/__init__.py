"""Measurement projectors, quasi-Zeno Hamiltonians and stroboscopic evolution."""
from .evolution import (
    ZenoLockingWarning,
    effective_evolution,
    evolve_density,
    exact_step,
    exact_stroboscopic,
    propagate,
    qzd_evolution,
    subspace_switch,
    survival_exact,
    survival_product,
    transition_probability,
    unitary_step,
    zeno_locking_metric,
)
from .generalized import (
    averaged_closed_form,
    exact_piecewise,
    nonuniform_effective_evolution,
    second_order_closed_form,
    stochastic_timestep_summary,
    time_dependent_effective_evolution,
)
from .hamiltonians import (
    MAX_ORDER,
    QuasiZenoStack,
    SteadyStateAnalysis,
    effective_hamiltonian,
    quasi_zeno_hamiltonian,
    steady_state_analysis,
    subspace_basis,
)
from .projectors import ProjectorSet, check_projector, projectors_from_observable
from .trajectories import (
    RNG_ALGORITHM,
    EnsembleResult,
    Trajectory,
    sample_ensemble,
    sample_trajectory,
)
