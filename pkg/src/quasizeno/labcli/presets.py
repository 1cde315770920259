"""Built-in experiments.  Site indices are 0-based."""
from __future__ import annotations

import copy

from ..errors import ConfigError
from .config import ExperimentConfig, config_from_dict

_PRESETS = {
    "three-level": (
        "Spin-1 in a transverse field lam*S^X with |S^Z| measured every dt. "
        "From |-1>, H_Z^(1) vanishes and H_Z^(2) drives the state to the dark "
        "state (|-1> - |1>)/sqrt(2) with survival probability 1/2.",
        {
            "model": {"kind": "Spin1Transverse", "lam": 1.0},
            "observable": {"kind": "AbsSz"},
            "initial_state": {"label": -1},
            "dt": 1e-2,
            "tau": 1000.0,
            "order": 2,
            "mode": "compare",
            "stride": 100,
            "n_trajectories": 1000,
        },
    ),
    "spin-chain-region": (
        "XX chain of 4 spins, total magnetisation of the central sites {1, 2} "
        "measured. First order keeps exchange inside/outside the region; second "
        "order adds correlated exchanges across both region boundaries.",
        {
            "model": {"kind": "XXChain", "J": 1.0, "sites": 4},
            "observable": {"kind": "RegionMagnetization", "weights": {"1": 1.0, "2": 1.0}},
            "initial_state": {"label": "uudd"},
            "dt": 1e-2,
            "tau": 100.0,
            "order": 2,
            "mode": "compare",
            "stride": 10,
        },
    ),
    "lattice-region": (
        "Bose-Hubbard chain of 5 sites with 2 atoms, U = 0.5 J, occupation of the "
        "central region {1, 2, 3} measured: correlated tunnelling over the region "
        "boundaries at second order.",
        {
            "model": {"kind": "BoseHubbard", "J": 1.0, "U": 0.5, "sites": 5,
                      "total_particles": 2},
            "observable": {"kind": "RegionOccupation",
                           "weights": {"1": 1.0, "2": 1.0, "3": 1.0}},
            "initial_state": {"label": [1, 1, 0, 0, 0]},
            "dt": 1e-2,
            "tau": 100.0,
            "order": 2,
            "mode": "compare",
            "stride": 10,
        },
    ),
    "lattice-difference": (
        "Bose-Hubbard chain of 5 sites with 2 atoms; the measured quantity is "
        "N_A - N_C with region A = {0, 1} (positive), B = {2} (unmeasured) and "
        "C = {3, 4} (negative). Tunnelling into or out of B happens in pairs, "
        "giving pair-process-like dynamics.",
        {
            "model": {"kind": "BoseHubbard", "J": 1.0, "U": 0.0, "sites": 5,
                      "total_particles": 2},
            "observable": {"kind": "RegionOccupationDifference",
                           "weights": {"0": 1.0, "1": 1.0, "3": -1.0, "4": -1.0}},
            "initial_state": {"label": [0, 0, 2, 0, 0]},
            "dt": 1e-2,
            "tau": 100.0,
            "order": 2,
            "mode": "compare",
            "stride": 10,
        },
    ),
    "fig4": (
        "4 sites, 2 atoms, dt*J = 1e-2, U = 0, measurement imposing the "
        "constraint N_2 + N_3 = 1 on the central sites (0-based sites 1 and 2), "
        "initial state |1,1,0,0>, run to tau*J = 200. Simulated on the full "
        "10-dimensional basis; the projector enforces the constraint.",
        {
            "model": {"kind": "BoseHubbard", "J": 1.0, "U": 0.0, "sites": 4,
                      "total_particles": 2},
            "observable": {"kind": "RegionOccupation", "weights": {"1": 1.0, "2": 1.0}},
            "initial_state": {"label": [1, 1, 0, 0]},
            "dt": 1e-2,
            "tau": 200.0,
            "order": 2,
            "mode": "compare",
            "stride": 10,
        },
    ),
}


def list_presets() -> list[tuple[str, str]]:
    return [(name, desc) for name, (desc, _) in _PRESETS.items()]


def preset_dict(name: str) -> dict:
    if name not in _PRESETS:
        raise ConfigError("preset", f"unknown preset {name!r}; choose from {', '.join(_PRESETS)}")
    data = copy.deepcopy(_PRESETS[name][1])
    data.setdefault("name", name)
    data.setdefault("output", name)
    return data


def preset_config(name: str, **overrides) -> ExperimentConfig:
    data = preset_dict(name)
    data.update({k: v for k, v in overrides.items() if v is not None})
    return config_from_dict(data)
