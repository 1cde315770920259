"""Hamiltonians and measured observables for the three model families.

* ``Spin1Transverse``: a single spin-1 in a transverse field, ``H = lam * S^X``.
* ``XXChain``: ``H = -J sum_<ij> S+_i S-_j`` over both bond directions, with
  optional uniform fields and a Z-Z coupling (off by default).
* ``BoseHubbard``: ``H = -J sum_<ij> b+_i b_j + U sum_i b+_i b+_i b_i b_i``.

Observables are linear functions of site occupations or magnetisations, plus
``|S^Z|`` for the single spin-1.  All of them are diagonal in the natural basis.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from . import hilbert
from .errors import Mismatch
from .hilbert import Basis, BasisKind, SiteOperatorSet

MODEL_KINDS = ("Spin1Transverse", "XXChain", "BoseHubbard")
OBSERVABLE_KINDS = ("RegionOccupation", "RegionOccupationDifference",
                    "RegionMagnetization", "AbsSz")

_MODEL_BASIS = {
    "Spin1Transverse": BasisKind.SPIN1_SINGLE,
    "XXChain": BasisKind.SPIN_HALF_CHAIN,
    "BoseHubbard": BasisKind.BOSON_FOCK,
}


def open_chain(sites: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(sites - 1)]


@dataclass
class ModelSpec:
    kind: str
    lam: float = 1.0
    J: float = 1.0
    U: float = 0.0
    sites: int = 1
    total_particles: int | None = None
    edges: list | None = None
    # XX chain extras, zero unless set explicitly
    field_x: float = 0.0
    field_y: float = 0.0
    field_z: float = 0.0
    jz: float = 0.0

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        for name in ("lam", "J", "U", "field_x", "field_y", "field_z", "jz"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite")
            setattr(self, name, value)
        if self.kind == "Spin1Transverse":
            self.sites = 1
        if self.edges is None:
            self.edges = open_chain(self.sites)
        self.edges = [tuple(int(x) for x in e) for e in self.edges]
        for i, j in self.edges:
            if not (0 <= i < self.sites and 0 <= j < self.sites) or i == j:
                raise ValueError(f"edge {(i, j)} does not join two distinct sites")
        if self.kind == "BoseHubbard" and self.total_particles is None:
            raise ValueError("BoseHubbard needs total_particles")

    def basis(self, constraint=None) -> Basis:
        if self.kind == "Spin1Transverse":
            return hilbert.spin1_basis()
        if self.kind == "XXChain":
            return hilbert.spin_chain_basis(self.sites)
        return hilbert.fock_basis(self.sites, self.total_particles, constraint)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["edges"] = [list(e) for e in self.edges]
        return d


@dataclass
class ObservableSpec:
    kind: str
    weights: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in OBSERVABLE_KINDS:
            raise ValueError(f"unknown observable kind {self.kind!r}")
        self.weights = {int(k): float(v) for k, v in self.weights.items()}
        if any(not np.isfinite(w) for w in self.weights.values()):
            raise ValueError("observable weights must be finite")
        if self.kind != "AbsSz" and not any(self.weights.values()):
            raise ValueError("observable needs at least one nonzero weight")

    @classmethod
    def region(cls, sites, kind="RegionOccupation"):
        return cls(kind, {i: 1.0 for i in sites})

    @classmethod
    def difference(cls, positive, negative):
        weights = {i: 1.0 for i in positive}
        weights.update({i: -1.0 for i in negative})
        return cls("RegionOccupationDifference", weights)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "weights": {str(k): v for k, v in self.weights.items()}}


def _check(spec_kind, needed: BasisKind, basis: Basis, sites=None):
    if basis.kind is not needed:
        raise Mismatch(f"{spec_kind} needs a {needed.value} basis, got {basis.kind.value}")
    if sites is not None and basis.sites != sites:
        raise Mismatch(f"{spec_kind} has {sites} sites but the basis has {basis.sites}")


def build_hamiltonian(spec: ModelSpec, ops: SiteOperatorSet) -> np.ndarray:
    _check(spec.kind, _MODEL_BASIS[spec.kind], ops.basis, spec.sites)
    dim = ops.basis.dim
    h = np.zeros((dim, dim), dtype=complex)

    if spec.kind == "Spin1Transverse":
        return spec.lam * ops.sx(0)

    if spec.kind == "XXChain":
        for i, j in spec.edges:
            h -= spec.J * (ops.raising[i] @ ops.lowering[j] + ops.raising[j] @ ops.lowering[i])
            if spec.jz:
                h += spec.jz * ops.sz[i] @ ops.sz[j]
        for i in range(spec.sites):
            h += spec.field_x * ops.sx(i) + spec.field_y * ops.sy(i) + spec.field_z * ops.sz[i]
        return h

    if spec.total_particles is not None and ops.basis.total_particles not in (None, spec.total_particles):
        raise Mismatch("particle number of the basis differs from the model")
    for i, j in spec.edges:
        h -= spec.J * (ops.hopping(i, j) + ops.hopping(j, i))
    if spec.U:
        # b+ b+ b b = n (n - 1), diagonal in the occupation basis
        occ = np.array(ops.basis.labels, dtype=float)
        h += np.diag(spec.U * np.sum(occ * (occ - 1.0), axis=1))
    return h


def build_observable(spec: ObservableSpec, ops: SiteOperatorSet) -> np.ndarray:
    basis = ops.basis
    if spec.kind == "AbsSz":
        _check(spec.kind, BasisKind.SPIN1_SINGLE, basis)
        return np.diag(np.abs(np.diag(ops.sz[0]))).astype(complex)

    if spec.kind == "RegionMagnetization":
        _check(spec.kind, BasisKind.SPIN_HALF_CHAIN, basis)
        site_ops = ops.sz
    else:
        _check(spec.kind, BasisKind.BOSON_FOCK, basis)
        site_ops = ops.number
    if max(spec.weights) >= basis.sites or min(spec.weights) < 0:
        raise Mismatch("observable weights reference sites outside the basis")
    diag = np.zeros(basis.dim)
    for i, w in spec.weights.items():
        diag += w * np.real(np.diag(site_ops[i]))
    return np.diag(diag).astype(complex)


def site_expectation_operators(ops: SiteOperatorSet) -> tuple[list[str], list[np.ndarray]]:
    """Column names and operators reported per time step for this basis."""
    kind = ops.basis.kind
    if kind is BasisKind.BOSON_FOCK:
        return [f"n_{i}" for i in range(ops.basis.sites)], list(ops.number)
    if kind is BasisKind.SPIN_HALF_CHAIN:
        return [f"sz_{i}" for i in range(ops.basis.sites)], list(ops.sz)
    if kind is BasisKind.SPIN1_SINGLE:
        names, mats = [], []
        for k, m in enumerate(ops.basis.labels):
            proj = np.zeros((3, 3), dtype=complex)
            proj[k, k] = 1.0
            names.append(f"pop_{m}")
            mats.append(proj)
        return names, mats
    raise Mismatch(f"no site observables for {kind.value}")
