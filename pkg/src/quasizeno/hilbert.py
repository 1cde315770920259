"""Basis enumeration and site-local operators for bosonic and spin systems.

Sites are indexed from 0.  Bosonic labels are occupation tuples, spin-1/2
chain labels are strings over ``"u"``/``"d"``, and the single spin-1 basis is
labelled by its S^Z value in the order (-1, 0, +1).
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable

import numpy as np

from .errors import EmptyBasis, TooLarge, Unsupported

SPIN_CHAIN_CAP = 12


class BasisKind(enum.Enum):
    BOSON_FOCK = "BosonFock"
    SPIN_HALF_CHAIN = "SpinHalfChain"
    SPIN1_SINGLE = "Spin1Single"
    GENERIC = "Generic"


@dataclass(frozen=True)
class Basis:
    kind: BasisKind
    labels: tuple
    sites: int
    total_particles: int | None = None
    max_occupation: int | None = None
    index_of: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {label: k for k, label in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise ValueError("basis labels must be unique")
        object.__setattr__(self, "index_of", index)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def state(self, label: Hashable) -> np.ndarray:
        """Unit vector for ``label``."""
        v = np.zeros(self.dim, dtype=complex)
        v[self.index_of[_normalize_label(self, label)]] = 1.0
        return v


def _normalize_label(basis: Basis, label):
    if basis.kind is BasisKind.BOSON_FOCK:
        return tuple(int(x) for x in label)
    if basis.kind is BasisKind.SPIN_HALF_CHAIN and not isinstance(label, str):
        return "".join(label)
    return label


def occupation_constraint(weights: dict[int, float], value: float) -> Callable[[tuple], bool]:
    """Predicate ``sum_i weights[i] * n_i == value`` for use with :func:`fock_basis`."""
    def predicate(label):
        return abs(sum(w * label[i] for i, w in weights.items()) - value) < 1e-9
    return predicate


def _compositions(total: int, sites: int):
    # lexicographically descending occupation vectors summing to total
    if sites == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, sites - 1):
            yield (first,) + rest


def fock_basis(sites: int, total_particles: int,
               constraint: Callable[[tuple], bool] | None = None) -> Basis:
    """Fixed particle-number Fock basis, optionally filtered by ``constraint``."""
    if sites < 1:
        raise ValueError("sites must be >= 1")
    if total_particles < 0:
        raise ValueError("total_particles must be >= 0")
    labels = [lab for lab in _compositions(total_particles, sites)
              if constraint is None or constraint(lab)]
    if not labels:
        raise EmptyBasis("constraint eliminates every occupation vector")
    return Basis(BasisKind.BOSON_FOCK, tuple(labels), sites,
                 total_particles=total_particles)


def truncated_fock_basis(sites: int, max_occupation: int) -> Basis:
    """All occupation vectors with ``0 <= n_i <= max_occupation`` (no number constraint)."""
    if sites < 1 or max_occupation < 0:
        raise ValueError("need sites >= 1 and max_occupation >= 0")
    labels = itertools.product(range(max_occupation, -1, -1), repeat=sites)
    return Basis(BasisKind.BOSON_FOCK, tuple(labels), sites,
                 max_occupation=max_occupation)


def spin_chain_basis(sites: int, cap: int = SPIN_CHAIN_CAP) -> Basis:
    if sites < 1:
        raise ValueError("sites must be >= 1")
    if sites > cap:
        raise TooLarge(f"{sites} spins exceeds the cap of {cap}")
    labels = ("".join(p) for p in itertools.product("ud", repeat=sites))
    return Basis(BasisKind.SPIN_HALF_CHAIN, tuple(labels), sites)


def spin1_basis() -> Basis:
    return Basis(BasisKind.SPIN1_SINGLE, (-1, 0, 1), 1)


def generic_basis(dim: int) -> Basis:
    return Basis(BasisKind.GENERIC, tuple(range(dim)), 1)


@dataclass(frozen=True)
class SiteOperatorSet:
    """Per-site operators as dense matrices on ``basis``.

    Bosonic sets always provide ``number`` and :meth:`hopping`.  The ladder
    operators ``annihilation``/``creation`` change the particle number, so they
    are only available on a truncated (number-unconstrained) Fock basis and are
    ``None`` otherwise.  Spin sets provide ``raising``, ``lowering`` and ``sz``.
    """
    basis: Basis
    number: tuple = ()
    annihilation: tuple | None = None
    creation: tuple | None = None
    raising: tuple = ()
    lowering: tuple = ()
    sz: tuple = ()

    @property
    def is_bosonic(self) -> bool:
        return self.basis.kind is BasisKind.BOSON_FOCK

    def hopping(self, i: int, j: int) -> np.ndarray:
        """b_i^dagger b_j; amplitudes leaving the basis are dropped."""
        if not self.is_bosonic:
            raise Unsupported("hopping is defined for bosonic bases only")
        return _hopping_matrix(self.basis, i, j)

    def sx(self, i: int = 0) -> np.ndarray:
        return 0.5 * (self.raising[i] + self.lowering[i])

    def sy(self, i: int = 0) -> np.ndarray:
        return -0.5j * (self.raising[i] - self.lowering[i])


def _hopping_matrix(basis: Basis, i: int, j: int) -> np.ndarray:
    m = np.zeros((basis.dim, basis.dim), dtype=complex)
    for col, label in enumerate(basis.labels):
        if i == j:
            m[col, col] = label[i]
            continue
        if label[j] == 0:
            continue
        target = list(label)
        amp = np.sqrt(target[j])
        target[j] -= 1
        amp *= np.sqrt(target[i] + 1)
        target[i] += 1
        row = basis.index_of.get(tuple(target))
        if row is not None:
            m[row, col] = amp
    return m


def _boson_ops(basis: Basis) -> SiteOperatorSet:
    dim = basis.dim
    number = []
    for i in range(basis.sites):
        number.append(np.diag([complex(lab[i]) for lab in basis.labels]))
    if basis.max_occupation is None:
        return SiteOperatorSet(basis, number=tuple(number))

    annihilation = []
    for i in range(basis.sites):
        b = np.zeros((dim, dim), dtype=complex)
        for col, label in enumerate(basis.labels):
            if label[i] == 0:
                continue
            target = list(label)
            target[i] -= 1
            b[basis.index_of[tuple(target)], col] = np.sqrt(label[i])
        annihilation.append(b)
    creation = tuple(np.conj(b).T for b in annihilation)
    return SiteOperatorSet(basis, number=tuple(number),
                           annihilation=tuple(annihilation), creation=creation)


def _spin_half_ops(basis: Basis) -> SiteOperatorSet:
    dim = basis.dim
    raising, sz = [], []
    for i in range(basis.sites):
        sp = np.zeros((dim, dim), dtype=complex)
        for col, label in enumerate(basis.labels):
            if label[i] == "d":
                target = label[:i] + "u" + label[i + 1:]
                sp[basis.index_of[target], col] = 1.0
        raising.append(sp)
        sz.append(np.diag([0.5 if lab[i] == "u" else -0.5 for lab in basis.labels])
                  .astype(complex))
    lowering = tuple(np.conj(s).T for s in raising)
    return SiteOperatorSet(basis, raising=tuple(raising), lowering=lowering, sz=tuple(sz))


def _spin1_ops(basis: Basis) -> SiteOperatorSet:
    # |m+1> <m| with amplitude sqrt(s(s+1) - m(m+1)) = sqrt(2) for s = 1
    sp = np.zeros((3, 3), dtype=complex)
    sp[1, 0] = np.sqrt(2.0)
    sp[2, 1] = np.sqrt(2.0)
    sz = np.diag([-1.0, 0.0, 1.0]).astype(complex)
    return SiteOperatorSet(basis, raising=(sp,), lowering=(np.conj(sp).T,), sz=(sz,))


def build_site_operators(basis: Basis) -> SiteOperatorSet:
    if basis.kind is BasisKind.BOSON_FOCK:
        return _boson_ops(basis)
    if basis.kind is BasisKind.SPIN_HALF_CHAIN:
        return _spin_half_ops(basis)
    if basis.kind is BasisKind.SPIN1_SINGLE:
        return _spin1_ops(basis)
    raise Unsupported(f"no site operators for basis kind {basis.kind.value}")


def embed(vector: np.ndarray, source: Basis, target: Basis) -> np.ndarray:
    """Map amplitudes from ``source`` into ``target`` by matching labels."""
    out = np.zeros(target.dim, dtype=complex)
    for k, label in enumerate(source.labels):
        out[target.index_of[label]] = vector[k]
    return out


def restriction(source: Basis, target: Basis) -> np.ndarray:
    """Isometry ``V`` (target.dim x source.dim) with ``V[:, k]`` the embedding of label k."""
    v = np.zeros((target.dim, source.dim))
    for k, label in enumerate(source.labels):
        v[target.index_of[label], k] = 1.0
    return v

