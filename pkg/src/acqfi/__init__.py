"""Quantum-limited frequency estimation of stochastic AC signals.

Precision bounds and probe-state quantum Fisher information for the
frequency content (single tone, centroid, separation) of AC fields with
shot-to-shot Gaussian amplitude noise, plus the coherent-field analogues
and a reproducible Monte-Carlo cross-check layer.
"""

from .bounds import (
    Method,
    QfiReport,
    bound_centroid,
    bound_separation,
    bound_single_freq,
    centroid_asymptote,
    gaussian_fisher,
    quadrature_fisher,
    separation_asymptote,
    single_freq_asymptote,
)
from .coherent import (
    CoherentFieldSpec,
    CoherentKind,
    analytic_spread,
    centroid_coherent_asymptote,
    coherent_bound,
    separation_coherent_asymptote,
    single_freq_coherent_asymptote,
    spread_from_hamiltonian,
    spread_integral_qfi,
)
from .errors import (
    AcqfiError,
    CoherenceOverflowError,
    DegenerateDetuningError,
    DickeDimensionError,
    NoiseModelUnsupportedError,
    ResonantDivergenceError,
    ZeroInformationError,
)
from .montecarlo import (
    CharEstimate,
    McConfig,
    averaged_ghz_smallN,
    empirical_char,
    empirical_variance,
    sample_phases,
)
from .phase import (
    PhaseDistribution,
    centroid_bracket,
    detuned_bi_phase,
    freq_bracket,
    one_minus_cos,
    one_minus_cos_product,
    phase_distribution,
    phase_exact_bi_free,
    phase_exact_single,
    phase_pulse_bi,
    phase_pulse_effective,
    phase_pulse_exact,
    pulse_phase_quadrature,
    separation_uncontrolled_distribution,
    variance_fd_check,
)
from .qfi import (
    EigenSystem,
    eigensystem,
    fidelity,
    fidelity_qfi,
    fourier_cfi,
    sld_qfi,
    two_level_qfi,
)
from .signals import (
    AmplitudeDraw,
    ControlSpec,
    Protocol,
    SignalKind,
    SignalSpec,
    Theta,
)
from .states import (
    MAX_DICKE_QUBITS,
    BasisTag,
    NoiseSpec,
    SymmetricDensity,
    apply_added_noise,
    dephasing_factor,
    dicke_superposition_state,
    ghz_state,
    qubit_state,
)
from .sweeps import DEFAULT_SIGMAS, separation_sweep, single_freq_sweep

__version__ = "0.1.0"

__all__ = [
    "AcqfiError",
    "AmplitudeDraw",
    "BasisTag",
    "CharEstimate",
    "CoherenceOverflowError",
    "CoherentFieldSpec",
    "CoherentKind",
    "ControlSpec",
    "DEFAULT_SIGMAS",
    "DegenerateDetuningError",
    "DickeDimensionError",
    "EigenSystem",
    "MAX_DICKE_QUBITS",
    "McConfig",
    "Method",
    "NoiseModelUnsupportedError",
    "NoiseSpec",
    "PhaseDistribution",
    "Protocol",
    "QfiReport",
    "ResonantDivergenceError",
    "SignalKind",
    "SignalSpec",
    "SymmetricDensity",
    "Theta",
    "ZeroInformationError",
    "analytic_spread",
    "apply_added_noise",
    "averaged_ghz_smallN",
    "bound_centroid",
    "bound_separation",
    "bound_single_freq",
    "centroid_asymptote",
    "centroid_bracket",
    "centroid_coherent_asymptote",
    "coherent_bound",
    "dephasing_factor",
    "detuned_bi_phase",
    "dicke_superposition_state",
    "eigensystem",
    "empirical_char",
    "empirical_variance",
    "fidelity",
    "fidelity_qfi",
    "fourier_cfi",
    "freq_bracket",
    "gaussian_fisher",
    "ghz_state",
    "one_minus_cos",
    "one_minus_cos_product",
    "phase_distribution",
    "phase_exact_bi_free",
    "phase_exact_single",
    "phase_pulse_bi",
    "phase_pulse_effective",
    "phase_pulse_exact",
    "pulse_phase_quadrature",
    "quadrature_fisher",
    "qubit_state",
    "sample_phases",
    "separation_asymptote",
    "separation_sweep",
    "separation_uncontrolled_distribution",
    "single_freq_asymptote",
    "single_freq_coherent_asymptote",
    "single_freq_sweep",
    "sld_qfi",
    "spread_from_hamiltonian",
    "spread_integral_qfi",
    "two_level_qfi",
    "variance_fd_check",
]
