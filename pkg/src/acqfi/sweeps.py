"""Probe-size sweeps: QFI versus N for each state family and noise level.

These produce the figure-style data rows consumed by the CLI and the
acceptance checks: for each (N, sigma) the Dicke-superposition QFI via
the SLD route with a fidelity cross-check, the GHZ QFI via the two-level
closed form with an SLD cross-check, and the protocol's precision bound.
"""

from __future__ import annotations

import math

from .bounds import QfiReport, bound_separation, bound_single_freq
from .errors import AcqfiError
from .phase import PhaseDistribution, phase_distribution
from .qfi import fidelity_qfi, sld_qfi, two_level_qfi
from .signals import Protocol, SignalSpec, Theta
from .states import dephasing_factor, dicke_superposition_state, ghz_state

DEFAULT_SIGMAS = (0.25, 0.5, 1.0, 2.0)
DEFAULT_N_MAX = 100

# Finite-difference step for the fidelity cross-check, relative to the
# estimated frequency.  Larger than the 2x2 default: the generic fidelity
# route on (N+1)-dimensional states carries an absolute noise floor, and
# the truncation error at this step stays below the cross-check tolerance.
FIDELITY_DELTA_REL = 5e-3


def _dist_builder(protocol: Protocol, sigma: float, t: float, **fixed):
    """Return (theta0, builder) mapping theta to the phase law."""
    if protocol is Protocol.FREE:
        theta0 = fixed["omega"]

        def build(theta: float) -> PhaseDistribution:
            return phase_distribution(SignalSpec.single(theta, sigma), protocol, t)
    elif protocol is Protocol.SEPARATION_CONTROLLED:
        theta0 = fixed["omega_r"]
        omega_s = fixed["omega_s"]

        def build(theta: float) -> PhaseDistribution:
            return phase_distribution(SignalSpec.from_centroid(omega_s, theta, sigma),
                                      protocol, t, approx=True)
    else:
        theta0 = fixed["omega_s"]
        omega_r = fixed["omega_r"]

        def build(theta: float) -> PhaseDistribution:
            return phase_distribution(SignalSpec.from_centroid(theta, omega_r, sigma),
                                      protocol, t, approx=True)
    return theta0, build


def _rows_for_sweep(protocol: Protocol, t: float, sigmas, n_max: int,
                    bound: QfiReport, theta_name: Theta, **fixed):
    theta_scale = max(abs(_dist_builder(protocol, 1.0, t, **fixed)[0]), 1.0)
    delta = FIDELITY_DELTA_REL * theta_scale
    rows = []
    for sigma in sigmas:
        theta0, build = _dist_builder(protocol, sigma, t, **fixed)

        def dicke_builder(theta: float, n: int = 0):
            return dicke_superposition_state(n, build(theta))

        def ghz_builder(theta: float, n: int = 0):
            return ghz_state(n, build(theta))

        dist = build(theta0)
        for n in range(1, n_max + 1):
            status = "ok"
            try:
                dicke = dicke_superposition_state(n, dist)
                value = sld_qfi(dicke, parameter=theta_name).value
                cross = fidelity_qfi(lambda th: dicke_builder(th, n), theta0,
                                     delta=delta, parameter=theta_name).value
            except AcqfiError as err:
                value, cross, status = math.nan, math.nan, type(err).__name__
            rows.append({"N": n, "sigma": sigma, "state": "dicke_superposition",
                         "qfi_method": "sld", "qfi_value": value,
                         "qfi_crosscheck": cross, "bound_value": bound.value,
                         "status": status})
            status = "ok"
            try:
                gamma, dgamma = dephasing_factor(n, dist)
                value = two_level_qfi(gamma, dgamma, parameter=theta_name).value
                cross = sld_qfi(ghz_state(n, dist), parameter=theta_name).value
            except AcqfiError as err:
                value, cross, status = math.nan, math.nan, type(err).__name__
            rows.append({"N": n, "sigma": sigma, "state": "ghz",
                         "qfi_method": "two_level", "qfi_value": value,
                         "qfi_crosscheck": cross, "bound_value": bound.value,
                         "status": status})
    rows.sort(key=lambda r: (r["state"], r["sigma"], r["N"]))
    return rows


def single_freq_sweep(omega: float = 1.0, t: float = 0.7,
                      sigmas=DEFAULT_SIGMAS, n_max: int = DEFAULT_N_MAX):
    """QFI versus N for the single-tone free protocol."""
    bound = bound_single_freq(omega, t)
    return _rows_for_sweep(Protocol.FREE, t, sigmas, n_max, bound,
                           Theta.OMEGA, omega=omega)


def separation_sweep(omega_r: float = 0.7, t: float = 0.7, omega_s: float | None = None,
                     sigmas=DEFAULT_SIGMAS, n_max: int = DEFAULT_N_MAX):
    """QFI versus N for the controlled separation protocol.

    The small-detuning phase law depends on omega_s only through the
    signal construction, so omega_s defaults to a valid 10 * omega_r.
    """
    if omega_s is None:
        omega_s = 10.0 * omega_r
    bound = bound_separation(omega_r, t)
    return _rows_for_sweep(Protocol.SEPARATION_CONTROLLED, t, sigmas, n_max, bound,
                           Theta.OMEGA_R, omega_r=omega_r, omega_s=omega_s)
