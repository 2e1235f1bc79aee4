"""Monte Carlo oracles for the phase law and the GHZ coherence.

Amplitudes are drawn batch by batch from independent child streams of a
single seed; estimators accumulate per-batch partial sums and combine
them in fixed batch order, so a given (seed, sample_count, batch_size)
always reproduces the same bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .phase import detuned_bi_phase, phase_exact_bi_free, phase_exact_single
from .signals import AmplitudeDraw, Protocol, SignalKind, SignalSpec
from .states import BasisTag, SymmetricDensity


@dataclass(frozen=True)
class McConfig:
    """Sampling plan: sample_count draws, in batches, from a fixed seed."""

    seed: int
    sample_count: int = 1_000_000
    batch_size: int = 131_072

    def __post_init__(self):
        if self.sample_count < 1:
            raise ValueError("sample_count must be >= 1")
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if self.seed != int(self.seed):
            raise ValueError("seed must be an integer")


@dataclass(frozen=True)
class CharEstimate:
    """Empirical E[exp(2 i k phi)] with jackknife standard errors."""

    k: int
    real: float
    imag: float
    se_real: float
    se_imag: float
    sample_count: int


def _batch_sizes(cfg: McConfig):
    remaining = cfg.sample_count
    index = 0
    while remaining > 0:
        size = min(cfg.batch_size, remaining)
        yield index, size
        remaining -= size
        index += 1


def _batch_rng(cfg: McConfig, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(
        np.random.SeedSequence(entropy=cfg.seed, spawn_key=(index,))))


def sample_phases(spec: SignalSpec, protocol: Protocol, t: float, cfg: McConfig):
    """Yield batches of accumulated phases under the given protocol.

    Amplitudes go through the same phase expressions used analytically:
    free single-tone or two-tone evolution, or the winding-1 pulse train
    (delta_s = 2 pi / t, delta_r = -omega_r) for the separation protocol.
    """
    if protocol is Protocol.FREE and spec.kind is not SignalKind.SINGLE_FREQ:
        raise ValueError("FREE protocol needs a single-tone signal")
    if protocol is not Protocol.FREE and spec.kind is not SignalKind.BI_FREQ:
        raise ValueError(f"{protocol.value} protocol needs a two-tone signal")
    if protocol is Protocol.SEPARATION_CONTROLLED and not (t > 0):
        raise ValueError("the pulse train needs t > 0")
    sigma = spec.sigma
    for index, size in _batch_sizes(cfg):
        rng = _batch_rng(cfg, index)
        if protocol is Protocol.FREE:
            a = rng.normal(0.0, sigma, size)
            b = rng.normal(0.0, sigma, size)
            yield phase_exact_single(spec, AmplitudeDraw.single(a, b), t)
        elif protocol is Protocol.CENTROID_FREE:
            a1 = rng.normal(0.0, sigma, size)
            b1 = rng.normal(0.0, sigma, size)
            a2 = rng.normal(0.0, sigma, size)
            b2 = rng.normal(0.0, sigma, size)
            yield phase_exact_bi_free(spec, AmplitudeDraw.bi(a1, b1, a2, b2), t)
        else:
            a1 = rng.normal(0.0, sigma, size)
            b1 = rng.normal(0.0, sigma, size)
            a2 = rng.normal(0.0, sigma, size)
            b2 = rng.normal(0.0, sigma, size)
            yield detuned_bi_phase(a1, b1, a2, b2,
                                   2.0 * math.pi / t, -spec.omega_r, t)


def empirical_variance(spec: SignalSpec, protocol: Protocol, t: float,
                       cfg: McConfig) -> tuple[float, float]:
    """Sample variance of the phase and its normal-theory standard error.

    Returns (variance, se) with se = variance * sqrt(2 / (n - 1)).
    """
    total = 0
    s1 = 0.0
    s2 = 0.0
    for batch in sample_phases(spec, protocol, t, cfg):
        total += batch.size
        s1 += float(batch.sum())
        s2 += float((batch * batch).sum())
    if total < 2:
        raise ValueError("variance needs at least two samples")
    var = (s2 - s1 * s1 / total) / (total - 1)
    return var, var * math.sqrt(2.0 / (total - 1))


def _jackknife_se(batch_sums: list[float], batch_counts: list[int]) -> float:
    total = sum(batch_counts)
    grand = sum(batch_sums)
    n_batches = len(batch_sums)
    if n_batches < 2:
        return float("nan")
    leave_out = np.array([(grand - s) / (total - c)
                          for s, c in zip(batch_sums, batch_counts)])
    center = leave_out.mean()
    return math.sqrt((n_batches - 1) / n_batches * float(np.sum((leave_out - center) ** 2)))


def empirical_char(spec: SignalSpec, protocol: Protocol, t: float, k: int,
                   cfg: McConfig) -> CharEstimate:
    """Empirical characteristic function E[exp(2 i k phi)].

    The real part estimates the dephasing factor gamma_k; the imaginary
    part vanishes for the zero-mean law and is reported as a consistency
    probe.  Standard errors are delete-one-batch jackknife.
    """
    if k != int(k):
        raise ValueError("k must be an integer")
    cos_sums: list[float] = []
    sin_sums: list[float] = []
    counts: list[int] = []
    for batch in sample_phases(spec, protocol, t, cfg):
        arg = 2.0 * k * batch
        cos_sums.append(float(np.cos(arg).sum()))
        sin_sums.append(float(np.sin(arg).sum()))
        counts.append(batch.size)
    total = sum(counts)
    return CharEstimate(k=int(k),
                        real=sum(cos_sums) / total,
                        imag=sum(sin_sums) / total,
                        se_real=_jackknife_se(cos_sums, counts),
                        se_imag=_jackknife_se(sin_sums, counts),
                        sample_count=total)


def averaged_ghz_smallN(n_qubits: int, spec: SignalSpec, protocol: Protocol,
                        t: float, cfg: McConfig) -> SymmetricDensity:
    """Brute-force dephased GHZ state for small N.

    Conjugates the full 2^N GHZ matrix by exp(-i phi sum sigma_z) for each
    sampled phi, averages, and extracts the (|0...0>, |1...1>) block as a
    GHZ-effective state.  Use moderate variances: the sampled coherence
    must stay inside the PSD tolerance of SymmetricDensity.
    """
    if not (1 <= n_qubits <= 6):
        raise ValueError("brute-force averaging is limited to 1 <= n_qubits <= 6")
    dim = 2 ** n_qubits
    index = np.arange(dim)
    weights = np.array([bin(x).count("1") for x in index])
    z = (n_qubits - 2 * weights).astype(float)  # eigenvalue of sum sigma_z
    ghz = np.zeros((dim, dim))
    ghz[0, 0] = ghz[-1, -1] = 0.5
    ghz[0, -1] = ghz[-1, 0] = 0.5

    accum = np.zeros((dim, dim), dtype=complex)
    total = 0
    for batch in sample_phases(spec, protocol, t, cfg):
        u = np.exp(-1j * np.outer(batch, z))  # row s: diagonal of U(phi_s)
        accum += u.T @ u.conj()
        total += batch.size
    mean_factor = accum / total
    averaged = ghz * mean_factor

    coherence = averaged[0, -1]
    if abs(coherence.imag) > 10.0 / math.sqrt(total):
        raise ValueError(f"imaginary coherence {coherence.imag} exceeds sampling noise")
    off = float(coherence.real)
    entries = np.array([[0.5, off], [off, 0.5]])
    d_entries = np.zeros((2, 2))  # sampled states carry no parameter derivative
    return SymmetricDensity(n_qubits, entries, d_entries, BasisTag.GHZ_EFFECTIVE)
