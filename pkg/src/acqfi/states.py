"""Probe states in the symmetric subspace after global random-phase dephasing.

Averaging U_phi^(tensor N) rho U_phi^dagger over phi ~ N(0, v) multiplies
each coherence between Dicke weights n and m by the characteristic-function
factor gamma_{n-m} = exp(-2 (n-m)^2 v).  The states kept here are the
resulting real symmetric matrices together with their elementwise
derivative in the estimated parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import toeplitz

from .errors import DickeDimensionError, NoiseModelUnsupportedError
from .phase import PhaseDistribution

MAX_DICKE_QUBITS = 512

_TRACE_TOL = 1e-14
_PSD_TOL = -1e-12


class BasisTag(Enum):
    DICKE = "dicke"
    GHZ_EFFECTIVE = "ghz_effective"


@dataclass(frozen=True)
class NoiseSpec:
    """Local added noise: Markovian dephasing at gamma_rate plus
    depolarizing probability lambda_depol per qubit."""

    gamma_rate: float = 0.0
    lambda_depol: float = 0.0

    def __post_init__(self):
        if self.gamma_rate < 0 or not math.isfinite(self.gamma_rate):
            raise ValueError("gamma_rate must be finite and >= 0")
        if not (0.0 <= self.lambda_depol <= 1.0):
            raise ValueError("lambda_depol must lie in [0, 1]")


@dataclass(frozen=True)
class SymmetricDensity:
    """Real symmetric density matrix with its parameter derivative.

    basis_tag DICKE: (N+1)x(N+1) in the Dicke weight basis.
    basis_tag GHZ_EFFECTIVE: the 2x2 coherence block spanned by
    |0...0> and |1...1>, diagonal fixed at (1/2, 1/2).
    """

    n_qubits: int
    entries: np.ndarray
    d_entries: np.ndarray
    basis_tag: BasisTag

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        d_entries = np.array(self.d_entries, dtype=float)
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be >= 1")
        dim = 2 if self.basis_tag is BasisTag.GHZ_EFFECTIVE else self.n_qubits + 1
        if entries.shape != (dim, dim) or d_entries.shape != (dim, dim):
            raise ValueError(f"matrices must be {dim}x{dim} for {self.basis_tag.value}")
        if not np.array_equal(entries, entries.T) or not np.array_equal(d_entries, d_entries.T):
            raise ValueError("entries and d_entries must be exactly symmetric")
        if abs(float(np.trace(entries)) - 1.0) > _TRACE_TOL:
            raise ValueError("trace must equal 1 within 1e-14")
        if float(np.linalg.eigvalsh(entries)[0]) < _PSD_TOL:
            raise ValueError("matrix is not positive semidefinite within tolerance")
        if self.basis_tag is BasisTag.GHZ_EFFECTIVE:
            if entries[0, 0] != 0.5 or entries[1, 1] != 0.5:
                raise ValueError("GHZ-effective block has diagonal (1/2, 1/2)")
        entries.setflags(write=False)
        d_entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "d_entries", d_entries)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def dephasing_factor(k: int, dist: PhaseDistribution) -> tuple[float, float]:
    """Coherence survival factor for a weight-k coherence and its derivative.

    Returns (gamma_k, dgamma_k/dtheta) with gamma_k = exp(-2 k^2 v).
    """
    if k != int(k):
        raise ValueError("k must be an integer")
    k2 = 2.0 * float(k) ** 2
    gamma = math.exp(-k2 * dist.variance)
    dgamma = -k2 * dist.dvariance_dtheta * gamma
    return gamma, dgamma


def qubit_state(dist: PhaseDistribution) -> SymmetricDensity:
    """Single qubit prepared in |+>, dephased by the phase law."""
    gamma, dgamma = dephasing_factor(1, dist)
    entries = np.array([[0.5, 0.5 * gamma], [0.5 * gamma, 0.5]])
    d_entries = np.array([[0.0, 0.5 * dgamma], [0.5 * dgamma, 0.0]])
    return SymmetricDensity(1, entries, d_entries, BasisTag.GHZ_EFFECTIVE)


def ghz_state(n_qubits: int, dist: PhaseDistribution) -> SymmetricDensity:
    """N-qubit GHZ probe reduced to its 2x2 coherence block.

    The weight-N coherence picks up gamma_N = exp(-2 N^2 v); at N = 1
    this is exactly the dephased qubit.
    """
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    gamma, dgamma = dephasing_factor(n_qubits, dist)
    entries = np.array([[0.5, 0.5 * gamma], [0.5 * gamma, 0.5]])
    d_entries = np.array([[0.0, 0.5 * dgamma], [0.5 * dgamma, 0.0]])
    return SymmetricDensity(n_qubits, entries, d_entries, BasisTag.GHZ_EFFECTIVE)


def dicke_superposition_state(n_qubits: int, dist: PhaseDistribution,
                              max_qubits: int = MAX_DICKE_QUBITS) -> SymmetricDensity:
    """Uniform superposition of all Dicke weights, dephased.

    The density matrix is Toeplitz: entries[n, m] = gamma_{n-m} / (N+1)
    with gamma_k = exp(-2 k^2 v).
    """
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    if n_qubits > max_qubits:
        raise DickeDimensionError(
            f"n_qubits = {n_qubits} exceeds the cap of {max_qubits}")
    norm = 1.0 / (n_qubits + 1)
    k = np.arange(n_qubits + 1, dtype=float)
    k2 = 2.0 * k * k
    gamma = np.exp(-k2 * dist.variance)
    dgamma = -k2 * dist.dvariance_dtheta * gamma
    entries = toeplitz(norm * gamma)
    d_entries = toeplitz(norm * dgamma)
    return SymmetricDensity(n_qubits, entries, d_entries, BasisTag.DICKE)


def apply_added_noise(state: SymmetricDensity, n_qubits: int, noise: NoiseSpec,
                      t: float) -> SymmetricDensity:
    """Attenuate the GHZ coherence by local dephasing and depolarizing noise.

    Each of the N qubits contributes exp(-gamma_rate t) from dephasing and
    (1 - lambda_depol) from depolarizing, so the off-diagonal element and
    its derivative scale by exp(-N gamma_rate t) (1 - lambda_depol)^N.
    Only GHZ-effective blocks are supported: for general Dicke matrices
    local noise does not reduce to a scalar factor.
    """
    if state.basis_tag is not BasisTag.GHZ_EFFECTIVE:
        raise NoiseModelUnsupportedError(
            "added local noise is modeled for GHZ-effective blocks only")
    if n_qubits != state.n_qubits:
        raise ValueError("n_qubits disagrees with the state")
    if t < 0:
        raise ValueError("t must be >= 0")
    factor = math.exp(-n_qubits * noise.gamma_rate * t) * (1.0 - noise.lambda_depol) ** n_qubits
    off = state.entries[0, 1] * factor
    d_off = state.d_entries[0, 1] * factor
    entries = np.array([[0.5, off], [off, 0.5]])
    d_entries = np.array([[0.0, d_off], [d_off, 0.0]])
    return SymmetricDensity(n_qubits, entries, d_entries, BasisTag.GHZ_EFFECTIVE)
