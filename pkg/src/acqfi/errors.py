"""Typed exceptions shared across the library."""


class AcqfiError(Exception):
    """Base class for library-specific errors."""


class ZeroInformationError(AcqfiError):
    """The phase distribution is degenerate (zero variance), so the
    Gaussian Fisher information is undefined at this parameter point."""


class ResonantDivergenceError(AcqfiError):
    """The pulse train is resonant with the signal tone: tan(omega*tau/2)
    diverges and the closed-form pulsed phase is meaningless."""


class DegenerateDetuningError(AcqfiError):
    """delta_s = +/- delta_r makes a detuning denominator vanish in the
    two-tone pulsed phase."""


class CoherenceOverflowError(AcqfiError):
    """|gamma| >= 1 with a nonzero derivative: the two-level QFI formula
    1/(1 - gamma^2) breaks down."""


class DickeDimensionError(AcqfiError):
    """Requested symmetric-subspace dimension exceeds the configured cap."""


class NoiseModelUnsupportedError(AcqfiError):
    """Local noise factors are only derived for the effective GHZ coherence
    block, not for general Dicke-basis density matrices."""
