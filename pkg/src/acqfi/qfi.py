"""Quantum Fisher information of the dephased probe states.

Three routes are implemented so they can arbitrate each other: the
two-level closed form (dgamma)^2 / (1 - gamma^2), the SLD spectral sum
over an eigendecomposition, and a symmetric finite difference of the
Uhlmann fidelity.  A Fourier-basis classical Fisher information provides
the measurement that saturates the quantum value in the well-resolved
regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bounds import Method, QfiReport
from .errors import CoherenceOverflowError
from .signals import Theta
from .states import BasisTag, SymmetricDensity

_RECONSTRUCTION_TOL = 1e-12
_EIG_NEG_TOL = -1e-12
# eigenvalues below dim * eps * lambda_max are numerically indistinguishable
# from zero and are truncated before taking matrix square roots
_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class EigenSystem:
    """Validated eigendecomposition, eigenvalues nonincreasing."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def eigensystem(matrix: np.ndarray) -> EigenSystem:
    """Eigendecomposition of a real symmetric PSD matrix, validated."""
    w, v = np.linalg.eigh(matrix)
    w = w[::-1].copy()
    v = v[:, ::-1].copy()
    if w[-1] < _EIG_NEG_TOL:
        raise ValueError(f"matrix has eigenvalue {w[-1]} below tolerance")
    residual = np.max(np.abs((v * w) @ v.T - matrix))
    if residual > _RECONSTRUCTION_TOL:
        raise ValueError(f"eigendecomposition residual {residual} too large")
    return EigenSystem(w, v)


def two_level_qfi(gamma: float, dgamma: float,
                  parameter: Theta | None = None) -> QfiReport:
    """QFI of [[1/2, gamma/2], [gamma/2, 1/2]] with entrywise derivative.

    (dgamma)^2 / (1 - gamma^2); a fully coherent state (|gamma| = 1) only
    makes sense with dgamma = 0, where the information vanishes.
    """
    if abs(gamma) >= 1.0:
        if dgamma == 0.0:
            return QfiReport(0.0, Method.CLOSED_FORM, parameter)
        raise CoherenceOverflowError(f"|gamma| = {abs(gamma)} >= 1 with dgamma != 0")
    denom = (1.0 - gamma) * (1.0 + gamma)
    return QfiReport(dgamma * dgamma / denom, Method.CLOSED_FORM, parameter)


def sld_qfi(state: SymmetricDensity, eig_floor: float = 1e-12,
            parameter: Theta | None = None) -> QfiReport:
    """QFI via the symmetric logarithmic derivative in the eigenbasis.

    J = sum over eigenpairs with lambda_j + lambda_k > eig_floor of
    2 |<j| drho |k>|^2 / (lambda_j + lambda_k).  Diagnostics report how
    sensitive the sum is to a tenfold larger floor.
    """
    es = eigensystem(state.entries)
    overlap = es.eigenvectors.T @ state.d_entries @ es.eigenvectors
    denom = es.eigenvalues[:, None] + es.eigenvalues[None, :]

    def total(floor):
        mask = denom > floor
        return float(np.sum(2.0 * overlap[mask] ** 2 / denom[mask]))

    value = total(eig_floor)
    shifted = total(10.0 * eig_floor)
    sensitivity = abs(shifted - value) / max(abs(value), 1e-300)
    excluded = int(np.sum(denom <= eig_floor))
    return QfiReport(value, Method.SLD, parameter,
                     {"eig_floor": eig_floor, "excluded_pairs": excluded,
                      "floor_sensitivity": sensitivity})


def _sqrt_psd(matrix: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(matrix)
    if w[0] < -1e-9:
        raise ValueError(f"matrix has eigenvalue {w[0]}: not PSD within tolerance")
    # clamp rounding negatives only; a hard cutoff would discard sqrt-sized
    # mass (sqrt amplifies a 1e-14 eigenvalue to 1e-7) from near-pure states
    w = np.maximum(w, 0.0)
    return (v * np.sqrt(w)) @ v.T


def fidelity(state_a: SymmetricDensity, state_b: SymmetricDensity) -> float:
    """Uhlmann fidelity Tr sqrt(sqrt(a) b sqrt(a)) = ||sqrt(a) sqrt(b)||_1.

    Eigendecomposition-based square roots, then the trace norm of their
    product by SVD.  Forming sqrt(a) b sqrt(a) and rooting its spectrum
    would square the small singular values and lose half their digits;
    in the product form a near-null mode of one factor is weighted by the
    matching small amplitude of the other, so near-pure states keep
    absolute accuracy at the machine-epsilon scale.
    """
    if state_a.dim != state_b.dim:
        raise ValueError("states must share a basis of equal dimension")
    product = _sqrt_psd(state_a.entries) @ _sqrt_psd(state_b.entries)
    return float(np.linalg.svd(product, compute_uv=False).sum())


def _fidelity_deficit(state_a: SymmetricDensity, state_b: SymmetricDensity) -> float:
    """1 - F(a, b), stable for nearly identical states.

    For a pair of GHZ-effective blocks with coherences g_a, g_b the 2x2
    fidelity obeys

        1 - F^2 = [ (sqrt(1-g_a^2) - sqrt(1-g_b^2))^2 + (g_a - g_b)^2 ] / 4

    which is a sum of squares: evaluating it directly retains the ~10
    digits that the generic route loses to the subtraction 1 - F.
    """
    if (state_a.basis_tag is BasisTag.GHZ_EFFECTIVE
            and state_b.basis_tag is BasisTag.GHZ_EFFECTIVE):
        ga = 2.0 * state_a.entries[0, 1]
        gb = 2.0 * state_b.entries[0, 1]
        a = (1.0 - ga) * (1.0 + ga)
        b = (1.0 - gb) * (1.0 + gb)
        sqrt_sum = math.sqrt(a) + math.sqrt(b)
        if sqrt_sum == 0.0:
            diff_roots = 0.0
        else:
            diff_roots = (ga - gb) * -(ga + gb) / sqrt_sum  # (a - b)/(sqrt a + sqrt b)
        one_minus_f2 = 0.25 * (diff_roots * diff_roots + (ga - gb) ** 2)
        f = math.sqrt(max(1.0 - one_minus_f2, 0.0))
        return one_minus_f2 / (1.0 + f)
    return 1.0 - fidelity(state_a, state_b)


def fidelity_qfi(builder: Callable[[float], SymmetricDensity], theta: float,
                 delta: float | None = None,
                 parameter: Theta | None = None) -> QfiReport:
    """QFI from the fidelity drop between neighboring states.

    J(d) = 8 [1 - F(rho(theta - d/2), rho(theta + d/2))] / d^2, reported
    at d = delta/2 with a Richardson check against d = delta.  The default
    delta = 1e-4 * max(|theta|, 1) suits the stable 2x2 route; for larger
    matrices the generic fidelity limits accuracy and a delta around
    1e-2 * |theta| is usually better.  A residual above 1e-3 relative
    raises the step_warning diagnostic.
    """
    if delta is None:
        delta = 1e-4 * max(abs(theta), 1.0)
    if not (delta > 0):
        raise ValueError("delta must be > 0")

    def estimate(d):
        deficit = _fidelity_deficit(builder(theta - 0.5 * d), builder(theta + 0.5 * d))
        return 8.0 * deficit / (d * d)

    coarse = estimate(delta)
    fine = estimate(0.5 * delta)
    richardson = (4.0 * fine - coarse) / 3.0
    residual = abs(richardson - fine) / max(abs(richardson), 1e-300)
    value = max(fine, 0.0)  # rounding can leave a ~ -eps/delta^2 remnant
    return QfiReport(value, Method.FIDELITY_FD, parameter,
                     {"delta": delta, "value_at_delta": coarse,
                      "richardson": richardson, "richardson_residual": residual,
                      "step_warning": bool(residual > 1e-3)})


def fourier_cfi(n_qubits: int, builder: Callable[[float], SymmetricDensity],
                theta: float, p_floor: float = 1e-15,
                parameter: Theta | None = None) -> QfiReport:
    """Classical Fisher information of the Fourier-basis measurement.

    Projects onto |u_k> = (N+1)^(-1/2) sum_n exp(-2 pi i k n / (N+1)) |D_n>
    and accumulates (p_k')^2 / p_k over outcomes with p_k > p_floor.
    """
    state = builder(theta)
    if state.basis_tag is not BasisTag.DICKE:
        raise ValueError("Fourier measurement is defined on the Dicke weight basis")
    dim = state.dim
    if dim != n_qubits + 1:
        raise ValueError("n_qubits disagrees with the state")
    n = np.arange(dim)
    u = np.exp(-2j * math.pi * np.outer(n, n) / dim) / math.sqrt(dim)
    probs = np.einsum("nk,nm,mk->k", u.conj(), state.entries, u).real
    dprobs = np.einsum("nk,nm,mk->k", u.conj(), state.d_entries, u).real
    if float(probs.min()) < -1e-12:
        raise ValueError(f"negative outcome probability {probs.min()}")
    if abs(float(probs.sum()) - 1.0) > 1e-10:
        raise ValueError("outcome probabilities do not sum to 1")
    keep = probs > p_floor
    value = float(np.sum(dprobs[keep] ** 2 / probs[keep]))
    return QfiReport(value, Method.FOURIER_CFI, parameter,
                     {"p_floor": p_floor, "dropped_outcomes": int(np.sum(~keep))})
