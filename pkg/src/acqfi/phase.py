"""Accumulated phase of a spin probe and its shot-to-shot distribution.

A z-coupled tone A cos(omega t) + B sin(omega t) imprints the phase

    phi = (A/omega) sin(omega t) + (B/omega) (1 - cos(omega t))

on each qubit over free evolution.  With (A, B) zero-mean normal of
standard deviation sigma, phi is zero-mean normal; everything the probe
can learn about a frequency parameter theta is encoded in the variance
v(theta) of that law and its derivative dv/dtheta.

Pulsed evolution uses the convention A sin(omega t) + B cos(omega t) for
the driven Hamiltonian, matching the toggling-frame derivation of the
closed-form pulsed phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegenerateDetuningError, ResonantDivergenceError
from .signals import AmplitudeDraw, ControlSpec, Protocol, SignalKind, SignalSpec, Theta

# Variance is declared degenerate ("zero information") when the
# dimensionless detector 1 - cos(x) falls at or below this value; the
# detector range is [0, 2], so this flags |x - 2*pi*k| < ~4.5e-5.
ZERO_INFO_TOL = 1e-9

# Pulse trains are rejected as resonant when |cos(omega*tau/2)| falls
# below this, i.e. omega*tau/2 within ~1e-12 of an odd multiple of pi/2.
_RESONANCE_TOL = 1e-12

_PI4 = math.pi ** 4


def one_minus_cos(x):
    """1 - cos(x) evaluated as 2 sin^2(x/2), free of cancellation."""
    s = np.sin(0.5 * x)
    return 2.0 * (s * s)


def freq_bracket(x):
    """x sin(x) - 2 (1 - cos(x)).

    The dimensionless sensitivity kernel of the single-tone variance:
    d/domega [(1 - cos(omega t)) / omega^2] = freq_bracket(omega t) / omega^3.
    Shared between variance derivatives and the closed-form bounds so the
    two evaluation routes agree to rounding even where the kernel is a
    small difference (~ -x^4/12 as x -> 0).
    """
    return x * np.sin(x) - 2.0 * one_minus_cos(x)


def one_minus_cos_product(xs, xr):
    """1 - cos(xr) cos(xs) without cancellation."""
    return one_minus_cos(xs) + one_minus_cos(xr) * np.cos(xs)


def centroid_bracket(xs, xr):
    """cos(xr) xs sin(xs) - 2 (1 - cos(xr) cos(xs)).

    Sensitivity kernel of the two-tone centroid variance in the
    small-separation form; reduces to freq_bracket(xs) at xr = 0.
    """
    return np.cos(xr) * xs * np.sin(xs) - 2.0 * one_minus_cos_product(xs, xr)


def _require_kind(spec: SignalSpec, kind: SignalKind):
    if spec.kind is not kind:
        raise ValueError(f"signal kind {spec.kind.value} not valid here, need {kind.value}")


def _require_components(draw: AmplitudeDraw, n: int):
    if draw.n_components != n:
        raise ValueError(f"draw has {draw.n_components} tone(s), signal has {n}")


# ---------------------------------------------------------------------------
# Accumulated phase for one amplitude draw


def phase_exact_single(spec: SignalSpec, draw: AmplitudeDraw, t: float):
    """Free-evolution phase of a single tone."""
    _require_kind(spec, SignalKind.SINGLE_FREQ)
    _require_components(draw, 1)
    if t < 0:
        raise ValueError("t must be >= 0")
    w = spec.omega
    x = w * t
    return (draw.a[0] * np.sin(x) + draw.b[0] * one_minus_cos(x)) / w


def phase_exact_bi_free(spec: SignalSpec, draw: AmplitudeDraw, t: float):
    """Free-evolution phase of two tones (sum of single-tone phases)."""
    _require_kind(spec, SignalKind.BI_FREQ)
    _require_components(draw, 2)
    if t < 0:
        raise ValueError("t must be >= 0")
    total = 0.0
    for a, b, w in zip(draw.a, draw.b, spec.frequencies):
        x = w * t
        total = total + (a * np.sin(x) + b * one_minus_cos(x)) / w
    return total


def phase_pulse_exact(spec: SignalSpec, control: ControlSpec, draw: AmplitudeDraw):
    """Phase after a pi-pulse train detuned from a single tone.

    Exact closed form for instantaneous pulses at spacing tau:

        phi = [A sin(delta t) + B (1 - cos(delta t))] tan(omega tau / 2) / omega

    with delta = control_freq - omega and t = pulse_count * tau.
    """
    _require_kind(spec, SignalKind.SINGLE_FREQ)
    _require_components(draw, 1)
    w = spec.omega
    half = 0.5 * w * control.tau
    if abs(math.cos(half)) < _RESONANCE_TOL:
        raise ResonantDivergenceError(
            f"omega*tau/2 = {half!r} sits on the tan singularity (delta ~ 0)")
    delta = control.control_freq - w
    dt = delta * control.total_time
    return (draw.a[0] * np.sin(dt) + draw.b[0] * one_minus_cos(dt)) * math.tan(half) / w


def phase_pulse_effective(spec: SignalSpec, control: ControlSpec, draw: AmplitudeDraw):
    """Leading 2/pi effective-Hamiltonian phase of the detuned pulse train.

        phi = (2/pi) [A sin(delta t) + B (1 - cos(delta t))] / delta

    Approximates phase_pulse_exact with relative error proportional to
    delta/omega.
    """
    _require_kind(spec, SignalKind.SINGLE_FREQ)
    _require_components(draw, 1)
    delta = control.control_freq - spec.omega
    if delta == 0.0:
        raise ResonantDivergenceError("effective phase needs a nonzero detuning")
    dt = delta * control.total_time
    return (2.0 / math.pi) * (draw.a[0] * np.sin(dt) + draw.b[0] * one_minus_cos(dt)) / delta


@lru_cache(maxsize=8)
def _gl_nodes(n: int):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


def pulse_phase_quadrature(spec: SignalSpec, control: ControlSpec, draw: AmplitudeDraw,
                           nodes_per_interval: int = 64):
    """Sign-toggled quadrature oracle for phase_pulse_exact.

    Integrates h(t) [A sin(omega t) + B cos(omega t)] with h flipping sign
    at every pulse, by composite Gauss-Legendre quadrature on each
    inter-pulse interval.  Scalar draws only.
    """
    _require_kind(spec, SignalKind.SINGLE_FREQ)
    _require_components(draw, 1)
    w = spec.omega
    tau = control.tau
    nodes, weights = _gl_nodes(nodes_per_interval)
    # interval n covers [n tau, (n+1) tau] with toggling sign (-1)^n
    starts = tau * np.arange(control.pulse_count)
    times = starts[:, None] + 0.5 * tau * (nodes[None, :] + 1.0)
    integrand = draw.a[0] * np.sin(w * times) + draw.b[0] * np.cos(w * times)
    signs = np.where(np.arange(control.pulse_count) % 2 == 0, 1.0, -1.0)
    return 0.5 * tau * float(signs @ (integrand @ weights))


def detuned_bi_phase(a1, b1, a2, b2, delta_s: float, delta_r: float, t: float):
    """Two-tone pulsed phase in the 2/pi effective-Hamiltonian picture.

    The train maps the tones to slow rotations at delta_s + delta_r and
    delta_s - delta_r:

        phi = (2/pi) [ (A1 sin(x+) + B1 (1 - cos(x+))) / (delta_s + delta_r)
                     + (A2 sin(x-) + B2 (1 - cos(x-))) / (delta_s - delta_r) ]

    with x+- = (delta_s +- delta_r) t.
    """
    plus = delta_s + delta_r
    minus = delta_s - delta_r
    scale = max(abs(delta_s), abs(delta_r))
    if min(abs(plus), abs(minus)) <= 1e-12 * scale:
        raise DegenerateDetuningError("delta_s = +/- delta_r, detuning denominator vanishes")
    xp = plus * t
    xm = minus * t
    return (2.0 / math.pi) * ((a1 * np.sin(xp) + b1 * one_minus_cos(xp)) / plus
                              + (a2 * np.sin(xm) + b2 * one_minus_cos(xm)) / minus)


def phase_pulse_bi(spec: SignalSpec, control: ControlSpec, draw: AmplitudeDraw,
                   first_order: bool = False):
    """Two-tone pulsed phase for a separation-protocol train.

    With delta_s * t = 2*pi*n the zeroth-order terms cancel; setting
    first_order=True returns the leading surviving term
    (A2 - A1) t sin(omega_r t) / pi^2 instead of the full expression.
    """
    _require_kind(spec, SignalKind.BI_FREQ)
    _require_components(draw, 2)
    if control.delta_s is None:
        raise ValueError("control was not built for a two-tone signal")
    if not math.isclose(control.delta_r, -spec.omega_r, rel_tol=1e-9, abs_tol=0.0):
        raise ValueError("control.delta_r must equal -omega_r of the signal")
    if first_order:
        return (draw.a[1] - draw.a[0]) * control.total_time \
            * np.sin(spec.omega_r * control.total_time) / math.pi ** 2
    return detuned_bi_phase(draw.a[0], draw.b[0], draw.a[1], draw.b[1],
                            control.delta_s, control.delta_r, control.total_time)


# ---------------------------------------------------------------------------
# Phase distribution (zero-mean normal: variance and its theta-derivative)


@dataclass(frozen=True)
class PhaseDistribution:
    """Zero-mean normal law of the accumulated phase.

    zero_information marks parameter points where the variance is
    (numerically) identically zero, e.g. omega*t on a multiple of 2*pi;
    Fisher-information formulas are undefined there.
    """

    variance: float
    dvariance_dtheta: float
    theta_name: Theta
    zero_information: bool = False

    def __post_init__(self):
        if self.variance < 0 or not math.isfinite(self.variance):
            raise ValueError(f"variance must be finite and >= 0, got {self.variance}")


def _free_distribution(spec: SignalSpec, t: float) -> PhaseDistribution:
    w = spec.omega
    x = w * t
    omc = one_minus_cos(x)
    sig2 = spec.sigma ** 2
    v = 2.0 * sig2 * omc / w ** 2
    dv = 2.0 * sig2 * freq_bracket(x) / w ** 3
    zero = bool(omc <= ZERO_INFO_TOL) or spec.sigma == 0.0
    return PhaseDistribution(v, dv, Theta.OMEGA, zero)


def _centroid_distribution(spec: SignalSpec, t: float, approx: bool) -> PhaseDistribution:
    sig2 = spec.sigma ** 2
    if approx:
        xs = spec.omega_s * t
        xr = spec.omega_r * t
        omcp = one_minus_cos_product(xs, xr)
        v = 4.0 * sig2 * omcp / spec.omega_s ** 2
        dv = 4.0 * sig2 * centroid_bracket(xs, xr) / spec.omega_s ** 3
        zero = bool(omcp <= ZERO_INFO_TOL) or spec.sigma == 0.0
        return PhaseDistribution(v, dv, Theta.OMEGA_S, zero)
    v = 0.0
    dv = 0.0
    detector = 0.0
    scale = 0.0
    for w in spec.frequencies:
        x = w * t
        v += 2.0 * sig2 * one_minus_cos(x) / w ** 2
        dv += 2.0 * sig2 * freq_bracket(x) / w ** 3
        detector += one_minus_cos(x) / w ** 2
        scale += 1.0 / w ** 2
    zero = bool(detector <= ZERO_INFO_TOL * scale) or spec.sigma == 0.0
    return PhaseDistribution(v, dv, Theta.OMEGA_S, zero)


def _separation_distribution(spec: SignalSpec, t: float, approx: bool) -> PhaseDistribution:
    sig2 = spec.sigma ** 2
    x = spec.omega_r * t
    s = math.sin(0.5 * x)
    c = math.cos(0.5 * x)
    zero = bool(one_minus_cos(x) <= ZERO_INFO_TOL) or spec.sigma == 0.0
    if approx:
        # small-detuning limit of the controlled two-tone variance
        v = 8.0 * sig2 * t * t * (s * s) / _PI4
        dv = 8.0 * sig2 * t ** 3 * s * c / _PI4
        return PhaseDistribution(v, dv, Theta.OMEGA_R, zero)
    # full expression at winding 1: delta_s = 2*pi/t, delta_r = -omega_r
    wr = spec.omega_r
    cc = 32.0 * sig2 * t * t
    p = (wr * t) ** 2 + 4.0 * math.pi ** 2
    ss = s * s
    d = math.pi * (wr * t) ** 2 - 4.0 * math.pi ** 3
    dp = 2.0 * math.pi * wr * t * t
    pp = 2.0 * wr * t * t
    sp = t * s * c
    v = cc * p * ss / d ** 2
    dv = cc * (pp * ss + p * sp) / d ** 2 - 2.0 * cc * p * ss * dp / d ** 3
    return PhaseDistribution(v, dv, Theta.OMEGA_R, zero)


_PROTOCOL_THETA = {
    Protocol.FREE: Theta.OMEGA,
    Protocol.CENTROID_FREE: Theta.OMEGA_S,
    Protocol.SEPARATION_CONTROLLED: Theta.OMEGA_R,
}


def phase_distribution(spec: SignalSpec, protocol: Protocol, t: float,
                       theta: Theta | None = None, approx: bool = False) -> PhaseDistribution:
    """Phase law for the given protocol, differentiated in its parameter.

    FREE estimates omega of a single tone; CENTROID_FREE estimates the
    two-tone centroid omega_s under free evolution; SEPARATION_CONTROLLED
    estimates omega_r under a winding-1 pulse train.  approx=True selects
    the small-separation (respectively small-detuning) closed form used by
    the matching precision bounds; it has no effect on FREE.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    expected = _PROTOCOL_THETA[protocol]
    if theta is not None and theta is not expected:
        raise ValueError(f"protocol {protocol.value} estimates {expected.value}, not {theta.value}")
    if protocol is Protocol.FREE:
        _require_kind(spec, SignalKind.SINGLE_FREQ)
        return _free_distribution(spec, t)
    _require_kind(spec, SignalKind.BI_FREQ)
    if protocol is Protocol.CENTROID_FREE:
        return _centroid_distribution(spec, t, approx)
    return _separation_distribution(spec, t, approx)


def separation_uncontrolled_distribution(spec: SignalSpec, t: float) -> PhaseDistribution:
    """Cross-check law: estimate omega_r with no pulse train.

    Free two-tone evolution at a known centroid leaves the separation
    imprinted through sin(omega_r t); in the small-separation form the
    variance is 2 sigma^2 sin^2(omega_r t) / omega_s^2 and the resulting
    Fisher information 2 t^2 cot^2(omega_r t) shares the 2/omega_r^2
    small-separation limit of the controlled protocol.
    """
    _require_kind(spec, SignalKind.BI_FREQ)
    if t < 0:
        raise ValueError("t must be >= 0")
    sig2 = spec.sigma ** 2
    x = spec.omega_r * t
    omc2 = one_minus_cos(2.0 * x)  # = 2 sin^2(x)
    v = sig2 * omc2 / spec.omega_s ** 2
    dv = 2.0 * sig2 * t * math.sin(2.0 * x) / spec.omega_s ** 2
    zero = bool(omc2 <= ZERO_INFO_TOL) or spec.sigma == 0.0
    return PhaseDistribution(v, dv, Theta.OMEGA_R, zero)


def variance_fd_check(spec: SignalSpec, protocol: Protocol, t: float,
                      approx: bool = False, rel_step: float = 1e-5):
    """Central finite difference of the variance in the estimated parameter.

    Returns (analytic, finite_difference) for dvariance/dtheta; the step
    is rel_step * |theta|, falling back to 1e-8 at theta = 0.
    """
    dist = phase_distribution(spec, protocol, t, approx=approx)

    if protocol is Protocol.FREE:
        theta0 = spec.omega
        rebuild = lambda th: SignalSpec.single(th, spec.sigma)
    elif protocol is Protocol.CENTROID_FREE:
        theta0 = spec.omega_s
        rebuild = lambda th: SignalSpec.from_centroid(th, spec.omega_r, spec.sigma)
    else:
        theta0 = spec.omega_r
        rebuild = lambda th: SignalSpec.from_centroid(spec.omega_s, th, spec.sigma)

    h = rel_step * abs(theta0)
    if h == 0.0:
        h = 1e-8
    above = phase_distribution(rebuild(theta0 + h), protocol, t, approx=approx)
    below = phase_distribution(rebuild(theta0 - h), protocol, t, approx=approx)
    fd = (above.variance - below.variance) / (2.0 * h)
    return dist.dvariance_dtheta, fd
