"""Optimal-control QFI for coherent (deterministic) AC fields.

For a known-amplitude field the optimal-control bound is the square of
the time-integrated spread between the largest and smallest eigenvalues
of the generator dH/dtheta.  For N qubits coupled to one tone of
amplitude B the spreads are

    single tone, estimate omega:        2 N B t
    two tones,  estimate omega_r:       4 N B t |sin(omega_r t)|
    two tones,  estimate omega_s:       4 N B t |cos(omega_r t)|

and the closed-form time integrals square to the bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

import numpy as np

from .bounds import Method, QfiReport
from .signals import Theta


class CoherentKind(Enum):
    SINGLE_FREQ = "single_freq"
    CENTROID = "centroid"
    SEPARATION = "separation"


_KIND_THETA = {
    CoherentKind.SINGLE_FREQ: Theta.OMEGA,
    CoherentKind.CENTROID: Theta.OMEGA_S,
    CoherentKind.SEPARATION: Theta.OMEGA_R,
}


@dataclass(frozen=True)
class CoherentFieldSpec:
    """Deterministic field of amplitude b_field probed for total_time.

    omega_s/omega_r describe the two-tone case; the single-tone closed
    forms do not depend on omega itself, only on b_field and total_time.
    """

    b_field: float
    total_time: float
    n_qubits: int = 1
    omega: float | None = None
    omega_s: float | None = None
    omega_r: float | None = None

    def __post_init__(self):
        if not (self.b_field > 0) or not math.isfinite(self.b_field):
            raise ValueError("b_field must be finite and > 0")
        if self.omega is not None and not (self.omega > 0):
            raise ValueError("omega must be > 0")
        if not (self.total_time > 0) or not math.isfinite(self.total_time):
            raise ValueError("total_time must be finite and > 0")
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be >= 1")
        if (self.omega_s is None) != (self.omega_r is None):
            raise ValueError("two-tone fields need both omega_s and omega_r")
        if self.omega_r is not None and not (self.omega_s > self.omega_r > 0):
            raise ValueError("need omega_s > omega_r > 0")


def analytic_spread(kind: CoherentKind, spec: CoherentFieldSpec, t: float) -> float:
    """Eigenvalue spread of dH/dtheta at time t, in closed form."""
    base = 2.0 * spec.n_qubits * spec.b_field * t
    if kind is CoherentKind.SINGLE_FREQ:
        return base
    if spec.omega_r is None:
        raise ValueError("two-tone spreads need omega_s and omega_r")
    if kind is CoherentKind.SEPARATION:
        return 2.0 * base * abs(math.sin(spec.omega_r * t))
    return 2.0 * base * abs(math.cos(spec.omega_r * t))


def spread_from_hamiltonian(kind: CoherentKind, spec: CoherentFieldSpec, t: float) -> float:
    """Eigenvalue spread of dH/dtheta at time t, from the 2x2 matrix.

    Builds the single-qubit generator derivative numerically and scales
    by N; arbitrates the trig identities behind analytic_spread.
    """
    b = spec.b_field
    if kind is CoherentKind.SINGLE_FREQ:
        # H = -B [cos(wt) sx + sin(wt) sz] (single tone, rotating quadrature);
        # dH/dw = B t [sin(wt) sx - cos(wt) sz]; the spread is w-independent
        w = 1.0 if spec.omega is None else spec.omega
        matrix = b * t * np.array([[-math.cos(w * t), math.sin(w * t)],
                                   [math.sin(w * t), math.cos(w * t)]])
    else:
        if spec.omega_r is None:
            raise ValueError("two-tone spreads need omega_s and omega_r")
        w1 = spec.omega_s + spec.omega_r
        w2 = spec.omega_s - spec.omega_r
        if kind is CoherentKind.SEPARATION:
            sx = b * t * (math.sin(w1 * t) - math.sin(w2 * t))
            sz = b * t * (math.cos(w2 * t) - math.cos(w1 * t))
        else:
            sx = b * t * (math.sin(w1 * t) + math.sin(w2 * t))
            sz = -b * t * (math.cos(w1 * t) + math.cos(w2 * t))
        matrix = np.array([[sz, sx], [sx, -sz]])
    eigs = np.linalg.eigvalsh(matrix)
    return spec.n_qubits * float(eigs[-1] - eigs[0])


@lru_cache(maxsize=8)
def _gl_nodes(n: int):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


def spread_integral_qfi(spread: Callable[[float], float], total_time: float,
                        nodes: int = 800,
                        parameter: Theta | None = None) -> QfiReport:
    """Optimal-control bound [integral of the spread over [0, T]]^2.

    Gauss-Legendre quadrature; the spread must be nonnegative on the
    window (negative samples are a domain error).
    """
    if not (total_time > 0):
        raise ValueError("total_time must be > 0")
    x, w = _gl_nodes(nodes)
    times = 0.5 * total_time * (x + 1.0)
    values = np.array([spread(float(ti)) for ti in times])
    if float(values.min()) < 0.0:
        raise ValueError("spread must be nonnegative on [0, T]")
    integral = 0.5 * total_time * float(w @ values)
    return QfiReport(integral * integral, Method.QUADRATURE, parameter, {"nodes": nodes})


def coherent_bound(kind: CoherentKind, spec: CoherentFieldSpec) -> QfiReport:
    """Closed-form optimal-control bound for the coherent field.

    single tone:  (N B T^2)^2
    separation:   [4 N B (sin x - x cos x) / omega_r^2]^2,  x = omega_r T
    centroid:     [4 N B (cos x + x sin x - 1) / omega_r^2]^2

    The separation form integrates |sin| and is valid for x < pi; the
    centroid form integrates |cos|, whose sign flips at x = pi/2, so its
    validity stops there (tighter than the shared x < pi divergence
    guard on the two-tone forms).
    """
    n = spec.n_qubits
    b = spec.b_field
    T = spec.total_time
    theta = _KIND_THETA[kind]
    if kind is CoherentKind.SINGLE_FREQ:
        base = n * b * T * T
        return QfiReport(base * base, Method.CLOSED_FORM, theta)
    if spec.omega_r is None:
        raise ValueError("two-tone bounds need omega_s and omega_r")
    x = spec.omega_r * T
    limit = math.pi if kind is CoherentKind.SEPARATION else 0.5 * math.pi
    if not (x < limit):
        raise ValueError(
            f"omega_r * T = {x:.6g} >= {limit:.6g}: eigenvalue-spread sign ambiguity")
    if kind is CoherentKind.SEPARATION:
        base = 4.0 * n * b * (math.sin(x) - x * math.cos(x)) / spec.omega_r ** 2
    else:
        base = 4.0 * n * b * (math.cos(x) + x * math.sin(x) - 1.0) / spec.omega_r ** 2
    return QfiReport(base * base, Method.CLOSED_FORM, theta)


def single_freq_coherent_asymptote(spec: CoherentFieldSpec) -> float:
    return (spec.n_qubits * spec.b_field) ** 2 * spec.total_time ** 4


def centroid_coherent_asymptote(spec: CoherentFieldSpec) -> float:
    return 4.0 * (spec.n_qubits * spec.b_field) ** 2 * spec.total_time ** 4


def separation_coherent_asymptote(spec: CoherentFieldSpec) -> float:
    return (16.0 / 9.0) * (spec.n_qubits * spec.b_field) ** 2 \
        * spec.total_time ** 6 * spec.omega_r ** 2
