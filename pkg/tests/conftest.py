"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own closed forms:
variance comes from the linearity of the phase in the amplitudes, the
dephasing factor from direct numerical integration of the Gaussian law,
fidelity from extended-precision arithmetic, and the noisy GHZ coherence
from brute-force Kraus composition on the full 2^N matrix.
"""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from scipy.integrate import quad

from acqfi import AmplitudeDraw

settings.register_profile(
    "default", max_examples=50, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile(
    "thorough", max_examples=300, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def rel_err(value, reference):
    """|value - reference| / |reference| with a guard for reference = 0."""
    if reference == 0.0:
        return abs(value)
    return abs(value - reference) / abs(reference)


# ---------------------------------------------------------------------------
# Variance oracle: the accumulated phase is linear in the amplitudes, so
# for i.i.d. zero-mean amplitudes of standard deviation sigma the variance
# is sigma^2 times the squared norm of the coefficient vector.  The
# coefficients are read off the phase function itself with unit draws.


def unit_draws(n_components):
    """Amplitude draws that isolate each linear coefficient of the phase."""
    if n_components == 1:
        return [AmplitudeDraw.single(1.0, 0.0), AmplitudeDraw.single(0.0, 1.0)]
    return [AmplitudeDraw.bi(1.0, 0.0, 0.0, 0.0), AmplitudeDraw.bi(0.0, 1.0, 0.0, 0.0),
            AmplitudeDraw.bi(0.0, 0.0, 1.0, 0.0), AmplitudeDraw.bi(0.0, 0.0, 0.0, 1.0)]


def variance_from_phase_fn(phase_fn, n_components, sigma):
    """sigma^2 * sum of squared linear coefficients of the phase map."""
    return sigma ** 2 * sum(float(phase_fn(d)) ** 2 for d in unit_draws(n_components))


# ---------------------------------------------------------------------------
# Dephasing-factor oracle: numerically integrate E[cos(2 k phi)] over the
# zero-mean normal law of variance v.


def char_function_oracle(k, variance):
    """E[exp(2 i k phi)] for phi ~ N(0, variance), by adaptive quadrature."""
    if variance == 0.0:
        return 1.0
    sd = math.sqrt(variance)
    density = lambda p: math.exp(-0.5 * (p / sd) ** 2) / (sd * math.sqrt(2.0 * math.pi))
    value, _ = quad(lambda p: math.cos(2.0 * k * p) * density(p),
                    -12.0 * sd, 12.0 * sd, limit=400)
    return value


# ---------------------------------------------------------------------------
# Extended-precision fidelity oracle (mpmath, 40 significant digits).


def mp_sqrt_psd(matrix):
    w, v = mp.eigsy(mp.matrix(matrix))
    d = mp.diag([mp.sqrt(x) if x > 0 else mp.mpf(0) for x in w])
    return v * d * v.T


def fidelity_oracle(a, b, dps=40):
    """Tr sqrt(sqrt(a) b sqrt(a)) at dps significant digits."""
    with mp.workdps(dps):
        ra = mp_sqrt_psd(np.asarray(a))
        m = ra * mp.matrix(np.asarray(b)) * ra
        w, _ = mp.eigsy(m)
        return float(sum(mp.sqrt(x) if x > 0 else mp.mpf(0) for x in w))


# ---------------------------------------------------------------------------
# Noisy-GHZ oracle: apply single-qubit dephasing and depolarizing Kraus
# maps to the full 2^N GHZ matrix and read off the extreme coherence.


def _apply_one_qubit_kraus(rho, kraus_ops, qubit, n_qubits):
    dim = 2 ** n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for op in kraus_ops:
        full = np.array([[1.0]], dtype=complex)
        for j in range(n_qubits):
            full = np.kron(full, op if j == qubit else np.eye(2))
        out += full @ rho @ full.conj().T
    return out


def kraus_ghz_coherence(n_qubits, gamma_rate, lambda_depol, t):
    """Coherence <0...0| rho |1...1> of a GHZ state after local noise.

    Dephasing for time t: K0 = sqrt(p) I, K1 = sqrt(1-p) Z with
    p = (1 + exp(-gamma_rate t)) / 2.  Depolarizing of strength lambda:
    K0 = sqrt(1 - 3 lambda/4) I and sqrt(lambda/4) (X, Y, Z).
    """
    dim = 2 ** n_qubits
    rho = np.zeros((dim, dim), dtype=complex)
    rho[0, 0] = rho[-1, -1] = 0.5
    rho[0, -1] = rho[-1, 0] = 0.5

    eye = np.eye(2, dtype=complex)
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)

    p = 0.5 * (1.0 + math.exp(-gamma_rate * t))
    dephase = [math.sqrt(p) * eye, math.sqrt(1.0 - p) * sz]
    lam = lambda_depol
    depol = [math.sqrt(1.0 - 0.75 * lam) * eye, math.sqrt(0.25 * lam) * sx,
             math.sqrt(0.25 * lam) * sy, math.sqrt(0.25 * lam) * sz]

    for qubit in range(n_qubits):
        rho = _apply_one_qubit_kraus(rho, dephase, qubit, n_qubits)
        rho = _apply_one_qubit_kraus(rho, depol, qubit, n_qubits)
    coherence = rho[0, -1]
    assert abs(coherence.imag) < 1e-15
    return float(coherence.real)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
