"""Signal, amplitude-draw, and pulse-train specifications.

The target field is a sum of one or two fixed-frequency tones whose
quadrature amplitudes are redrawn from a zero-mean normal law with
standard deviation sigma on every shot.  A train of instantaneous pi
pulses clocked near a tone frequency converts the fast oscillation into
a slowly accumulating, controllable phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class SignalKind(Enum):
    SINGLE_FREQ = "single_freq"
    BI_FREQ = "bi_freq"


class Protocol(Enum):
    FREE = "free"
    CENTROID_FREE = "centroid_free"
    SEPARATION_CONTROLLED = "separation_controlled"


class Theta(Enum):
    """Which frequency parameter is being estimated."""

    OMEGA = "omega"
    OMEGA_S = "omega_s"
    OMEGA_R = "omega_r"


@dataclass(frozen=True)
class SignalSpec:
    """One- or two-tone stochastic signal.

    For the two-tone case the centroid and separation (omega_s, omega_r)
    are stored as primary so that omega1 = omega_s + omega_r and
    omega2 = omega_s - omega_r hold exactly in floating point.
    """

    kind: SignalKind
    sigma: float
    omega: float | None = None
    omega_s: float | None = None
    omega_r: float | None = None

    def __post_init__(self):
        if self.sigma < 0 or not math.isfinite(self.sigma):
            raise ValueError(f"sigma must be finite and >= 0, got {self.sigma}")
        if self.kind is SignalKind.SINGLE_FREQ:
            if self.omega is None or not (self.omega > 0):
                raise ValueError("single-tone signal needs omega > 0")
            if self.omega_s is not None or self.omega_r is not None:
                raise ValueError("omega_s/omega_r are two-tone fields")
        else:
            if self.omega is not None:
                raise ValueError("omega is a single-tone field")
            if self.omega_s is None or self.omega_r is None:
                raise ValueError("two-tone signal needs omega_s and omega_r")
            if not (self.omega_r > 0):
                raise ValueError("omega_r must be > 0 (omega1 > omega2)")
            if not (self.omega_s > self.omega_r):
                raise ValueError("omega_s must exceed omega_r so both tones are > 0")

    @classmethod
    def single(cls, omega: float, sigma: float) -> "SignalSpec":
        return cls(SignalKind.SINGLE_FREQ, float(sigma), omega=float(omega))

    @classmethod
    def from_centroid(cls, omega_s: float, omega_r: float, sigma: float) -> "SignalSpec":
        return cls(SignalKind.BI_FREQ, float(sigma),
                   omega_s=float(omega_s), omega_r=float(omega_r))

    @classmethod
    def bi(cls, omega1: float, omega2: float, sigma: float) -> "SignalSpec":
        """Build from the two tone frequencies, omega1 > omega2 > 0.

        Centroid/separation are the stored representation, so the
        round-tripped omega1/omega2 may differ from the inputs by 1 ulp.
        """
        if not (omega1 > omega2):
            raise ValueError("need omega1 > omega2")
        return cls.from_centroid(0.5 * (omega1 + omega2), 0.5 * (omega1 - omega2), sigma)

    @property
    def n_components(self) -> int:
        return 1 if self.kind is SignalKind.SINGLE_FREQ else 2

    @property
    def omega1(self) -> float:
        if self.kind is not SignalKind.BI_FREQ:
            raise ValueError("omega1 is defined for two-tone signals only")
        return self.omega_s + self.omega_r

    @property
    def omega2(self) -> float:
        if self.kind is not SignalKind.BI_FREQ:
            raise ValueError("omega2 is defined for two-tone signals only")
        return self.omega_s - self.omega_r

    @property
    def frequencies(self) -> tuple[float, ...]:
        if self.kind is SignalKind.SINGLE_FREQ:
            return (self.omega,)
        return (self.omega1, self.omega2)


@dataclass(frozen=True)
class AmplitudeDraw:
    """One realization of the quadrature amplitudes, (A_i, B_i) per tone.

    Values may be floats or equally shaped numpy arrays (a batch of draws).
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("a and b need one entry per tone")
        if len(self.a) not in (1, 2):
            raise ValueError("supported signals have one or two tones")

    @classmethod
    def single(cls, a, b) -> "AmplitudeDraw":
        return cls((a,), (b,))

    @classmethod
    def bi(cls, a1, b1, a2, b2) -> "AmplitudeDraw":
        return cls((a1, a2), (b1, b2))

    @property
    def n_components(self) -> int:
        return len(self.a)


# delta_s * t must sit on 2*pi*n for the separation protocol; this is the
# accepted relative deviation of the winding number from an integer.
_WINDING_TOL = 1e-9


@dataclass(frozen=True)
class ControlSpec:
    """A pi-pulse train: pulse_count pulses spaced tau = pi / control_freq.

    For a single tone the train is detuned by delta = control_freq - omega.
    For two tones the train is clocked against the centroid with detunings
    delta_s (from omega_s) and delta_r = -omega_r, and the total time must
    satisfy delta_s * t = 2*pi*n for a nonzero integer winding n.
    """

    control_freq: float
    pulse_count: int
    delta: float | None = None
    delta_s: float | None = None
    delta_r: float | None = None

    def __post_init__(self):
        if not (self.control_freq > 0) or not math.isfinite(self.control_freq):
            raise ValueError("control_freq must be finite and > 0")
        if self.pulse_count != int(self.pulse_count) or self.pulse_count < 1:
            raise ValueError("pulse_count must be a positive integer")
        if (self.delta_s is None) != (self.delta_r is None):
            raise ValueError("two-tone control needs both delta_s and delta_r")
        if self.delta_s is not None:
            winding = self.delta_s * self.total_time / (2.0 * math.pi)
            nearest = round(winding)
            if nearest == 0 or abs(winding - nearest) > _WINDING_TOL * max(1.0, abs(nearest)):
                raise ValueError(
                    f"delta_s * t = 2*pi*{winding:.12g} is not a nonzero multiple of 2*pi")

    @property
    def tau(self) -> float:
        return math.pi / self.control_freq

    @property
    def total_time(self) -> float:
        return self.pulse_count * self.tau

    @property
    def winding(self) -> int:
        if self.delta_s is None:
            raise ValueError("winding is defined for two-tone control only")
        return round(self.delta_s * self.total_time / (2.0 * math.pi))

    @classmethod
    def single_freq(cls, omega: float, delta: float, pulse_count: int) -> "ControlSpec":
        """Train detuned by delta from a single tone at omega."""
        return cls(control_freq=float(omega) + float(delta),
                   pulse_count=int(pulse_count), delta=float(delta))

    @classmethod
    def bi_freq(cls, spec: SignalSpec, pulse_count: int, winding: int = 1) -> "ControlSpec":
        """Train for the separation protocol.

        Solves delta_s = 2*n*omega_s / (pulse_count - 2*n) so that
        delta_s * t = 2*pi*n holds exactly for the integer winding n.
        """
        if spec.kind is not SignalKind.BI_FREQ:
            raise ValueError("two-tone control needs a two-tone signal")
        n = int(winding)
        if n == 0:
            raise ValueError("winding must be a nonzero integer")
        if pulse_count - 2 * n <= 0:
            raise ValueError("need pulse_count > 2*winding")
        delta_s = 2.0 * n * spec.omega_s / (pulse_count - 2 * n)
        return cls(control_freq=spec.omega_s + delta_s, pulse_count=int(pulse_count),
                   delta_s=delta_s, delta_r=-spec.omega_r)
