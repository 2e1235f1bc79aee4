"""Precision bounds from the Gaussian phase law.

Global dephasing by a random phase phi ~ N(0, v(theta)) caps the quantum
Fisher information of any probe at the classical Fisher information of
the phase law itself,

    F(theta) = (dv/dtheta)^2 / (2 v^2),

so the environment-state Fisher information is the protocol's precision
bound.  The closed forms below evaluate that same quantity directly from
the protocol parameters; they share their trigonometric kernels with
phase_distribution so the two routes agree to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import ZeroInformationError
from .phase import (PhaseDistribution, centroid_bracket, freq_bracket, one_minus_cos,
                    one_minus_cos_product)
from .signals import Theta

# omega_r * t below this gets a divergence diagnostic on the separation
# bound: the bound itself grows like 2/omega_r^2 as the tones merge.
_SMALL_SEPARATION = 0.05


class Method(Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"
    SLD = "sld"
    FIDELITY_FD = "fidelity_fd"
    MONTE_CARLO = "monte_carlo"
    FOURIER_CFI = "fourier_cfi"


@dataclass(frozen=True)
class QfiReport:
    """A Fisher-information value plus how it was obtained."""

    value: float
    method: Method
    parameter: Theta | None = None
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (self.value >= 0.0):
            raise ValueError(f"Fisher information must be >= 0, got {self.value}")


def gaussian_fisher(dist: PhaseDistribution) -> QfiReport:
    """Fisher information of a zero-mean normal law, (v')^2 / (2 v^2)."""
    if dist.zero_information or dist.variance <= 0.0:
        raise ZeroInformationError("degenerate phase law: Fisher information undefined")
    ratio = dist.dvariance_dtheta / dist.variance
    return QfiReport(0.5 * ratio * ratio, Method.CLOSED_FORM, dist.theta_name)


@lru_cache(maxsize=8)
def _gl_nodes(n: int):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


def quadrature_fisher(dist: PhaseDistribution, nodes: int = 2000,
                      window_sigmas: float = 10.0) -> QfiReport:
    """Numerical oracle for gaussian_fisher.

    Integrates p(phi) (d log p / dtheta)^2 by Gauss-Legendre quadrature
    over phi in [-window_sigmas, window_sigmas] standard deviations.
    """
    if dist.zero_information or dist.variance <= 0.0:
        raise ZeroInformationError("degenerate phase law: Fisher information undefined")
    v = dist.variance
    dv = dist.dvariance_dtheta
    half_width = window_sigmas * math.sqrt(v)
    x, w = _gl_nodes(nodes)
    phi = half_width * x
    density = np.exp(-phi * phi / (2.0 * v)) / math.sqrt(2.0 * math.pi * v)
    score = (dv / (2.0 * v)) * (phi * phi / v - 1.0)
    value = half_width * float(w @ (density * score * score))
    return QfiReport(value, Method.QUADRATURE, dist.theta_name,
                     {"nodes": nodes, "window_sigmas": window_sigmas})


def single_freq_asymptote(omega: float, t: float) -> float:
    """Small-(omega t) limit of the single-tone bound."""
    return omega ** 2 * t ** 4 / 72.0


def centroid_asymptote(omega_s: float, t: float) -> float:
    """Small-(omega_s t), small-separation limit of the centroid bound."""
    return omega_s ** 2 * t ** 4 / 72.0


def separation_asymptote(omega_r: float) -> float:
    """Small-(omega_r t) limit of the controlled-separation bound."""
    return 2.0 / omega_r ** 2


def bound_single_freq(omega: float, t: float, sigma: float = 1.0) -> QfiReport:
    """Precision bound on omega for a single tone under free evolution.

    Equals gaussian_fisher of the FREE phase law; independent of sigma
    (kept in the signature to mirror the protocol parameters).
    """
    if not (omega > 0) or t < 0:
        raise ValueError("need omega > 0 and t >= 0")
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    x = omega * t
    omc = one_minus_cos(x)
    if omc <= 1e-9:
        raise ZeroInformationError("omega*t on a multiple of 2*pi: variance identically zero")
    s_half = abs(math.sin(0.5 * x))
    bracket = freq_bracket(x)
    value = 2.0 * math.sqrt(2.0) * s_half ** 5 * bracket ** 2 / (omega ** 2 * omc ** 4.5)
    return QfiReport(float(value), Method.CLOSED_FORM, Theta.OMEGA)


def bound_centroid(omega_s: float, omega_r: float, t: float, sigma: float = 1.0) -> QfiReport:
    """Precision bound on the centroid omega_s of two free-running tones.

    Small-separation form; equals gaussian_fisher of the CENTROID_FREE
    phase law with approx=True.  Independent of sigma.  omega_r = 0 is
    allowed and reduces to the single-tone bound exactly.
    """
    if not (omega_s > omega_r >= 0) or t < 0:
        raise ValueError("need omega_s > omega_r >= 0 and t >= 0")
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    xs = omega_s * t
    xr = omega_r * t
    omcp = one_minus_cos_product(xs, xr)
    if omcp <= 1e-9:
        raise ZeroInformationError(
            "cos(omega_r t) cos(omega_s t) = 1: variance identically zero")
    bracket = centroid_bracket(xs, xr)
    value = bracket ** 2 / (2.0 * omega_s ** 2 * omcp ** 2)
    return QfiReport(float(value), Method.CLOSED_FORM, Theta.OMEGA_S)


def bound_separation(omega_r: float, t: float) -> QfiReport:
    """Precision bound on omega_r under the winding-1 pulse train.

    t^2 / (2 tan^2(omega_r t / 2)) on 0 < omega_r t < 2*pi; equals
    gaussian_fisher of the SEPARATION_CONTROLLED law with approx=True.
    As omega_r t -> 0 the bound diverges like 2/omega_r^2; such points
    return a value plus a small_separation_divergence diagnostic.
    """
    if not (omega_r > 0) or not (t > 0):
        raise ValueError("need omega_r > 0 and t > 0")
    x = omega_r * t
    if not (x < 2.0 * math.pi):
        raise ValueError("need omega_r * t < 2*pi")
    s = math.sin(0.5 * x)
    c = math.cos(0.5 * x)
    ratio = t * c / s
    diagnostics = {}
    if x <= _SMALL_SEPARATION:
        diagnostics["small_separation_divergence"] = True
    return QfiReport(0.5 * ratio * ratio, Method.CLOSED_FORM, Theta.OMEGA_R, diagnostics)
