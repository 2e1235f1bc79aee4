"""Seeded Monte-Carlo oracles: determinism and statistical agreement.

These tests use 10^5 samples for speed; the full 10^6-sample consistency
sweep lives in the acceptance suite.
"""

import math

import numpy as np
import pytest

from acqfi import (
    McConfig,
    Protocol,
    SignalSpec,
    averaged_ghz_smallN,
    dephasing_factor,
    empirical_char,
    empirical_variance,
    phase_distribution,
    qubit_state,
    sample_phases,
)

from .conftest import rel_err

N_FAST = 100_000

GRID = [
    (SignalSpec.single(1.0, 1.0), Protocol.FREE, 0.7),
    (SignalSpec.from_centroid(1.0, 0.1, 1.0), Protocol.CENTROID_FREE, 0.7),
    (SignalSpec.from_centroid(7.0, 0.7, 1.0), Protocol.SEPARATION_CONTROLLED, 0.7),
]


class TestMcConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            McConfig(seed=1, sample_count=0)
        with pytest.raises(ValueError):
            McConfig(seed=1, batch_size=0)
        with pytest.raises(ValueError):
            McConfig(seed=1.5)

    def test_defaults(self):
        cfg = McConfig(seed=7)
        assert cfg.sample_count == 1_000_000
        assert cfg.batch_size == 131_072


class TestSamplePhases:
    def test_zero_sigma_gives_zero_phases(self):
        cfg = McConfig(seed=3, sample_count=1000)
        spec = SignalSpec.single(1.0, 0.0)
        for batch in sample_phases(spec, Protocol.FREE, 0.7, cfg):
            assert np.all(batch == 0.0)

    def test_protocol_signal_mismatch(self):
        cfg = McConfig(seed=3, sample_count=10)
        bi = SignalSpec.from_centroid(1.0, 0.1, 1.0)
        single = SignalSpec.single(1.0, 1.0)
        with pytest.raises(ValueError):
            list(sample_phases(bi, Protocol.FREE, 0.7, cfg))
        with pytest.raises(ValueError):
            list(sample_phases(single, Protocol.CENTROID_FREE, 0.7, cfg))

    def test_batching_covers_sample_count(self):
        cfg = McConfig(seed=3, sample_count=1000, batch_size=300)
        sizes = [batch.size for batch in
                 sample_phases(SignalSpec.single(1.0, 1.0), Protocol.FREE, 0.7, cfg)]
        assert sizes == [300, 300, 300, 100]

    @pytest.mark.parametrize("spec,protocol,t", GRID)
    def test_mean_is_zero(self, spec, protocol, t):
        cfg = McConfig(seed=11, sample_count=N_FAST)
        total, count = 0.0, 0
        s2 = 0.0
        for batch in sample_phases(spec, protocol, t, cfg):
            total += float(batch.sum())
            s2 += float((batch * batch).sum())
            count += batch.size
        mean = total / count
        se = math.sqrt(s2 / count / count)
        assert abs(mean) < 4.0 * se


class TestEmpiricalEstimates:
    @pytest.mark.parametrize("spec,protocol,t", GRID)
    def test_variance_matches_analytic(self, spec, protocol, t):
        cfg = McConfig(seed=5, sample_count=N_FAST)
        var, se = empirical_variance(spec, protocol, t, cfg)
        analytic = phase_distribution(spec, protocol, t).variance
        assert abs(var - analytic) < 4.0 * se

    @pytest.mark.parametrize("spec,protocol,t", GRID)
    def test_char_matches_dephasing_factor(self, spec, protocol, t):
        cfg = McConfig(seed=6, sample_count=N_FAST)
        dist = phase_distribution(spec, protocol, t)
        for k in (1, 3):
            est = empirical_char(spec, protocol, t, k, cfg)
            gamma, _ = dephasing_factor(k, dist)
            assert abs(est.real - gamma) < 4.0 * est.se_real
            assert abs(est.imag) < 4.0 * est.se_imag

    def test_char_at_k_zero_is_exactly_one(self):
        cfg = McConfig(seed=6, sample_count=1000)
        est = empirical_char(SignalSpec.single(1.0, 1.0), Protocol.FREE, 0.7, 0, cfg)
        assert est.real == 1.0
        assert est.imag == 0.0

    def test_determinism_bit_for_bit(self):
        cfg = McConfig(seed=123, sample_count=N_FAST)
        spec, protocol, t = GRID[0]
        first = empirical_variance(spec, protocol, t, cfg)
        second = empirical_variance(spec, protocol, t, cfg)
        assert first == second
        c1 = empirical_char(spec, protocol, t, 2, cfg)
        c2 = empirical_char(spec, protocol, t, 2, cfg)
        assert c1 == c2

    def test_seed_changes_stream(self):
        spec, protocol, t = GRID[0]
        a = empirical_variance(spec, protocol, t, McConfig(seed=1, sample_count=1000))
        b = empirical_variance(spec, protocol, t, McConfig(seed=2, sample_count=1000))
        assert a != b

    def test_variance_needs_two_samples(self):
        with pytest.raises(ValueError):
            empirical_variance(SignalSpec.single(1.0, 1.0), Protocol.FREE, 0.7,
                               McConfig(seed=1, sample_count=1))

    def test_char_rejects_fractional_k(self):
        with pytest.raises(ValueError):
            empirical_char(SignalSpec.single(1.0, 1.0), Protocol.FREE, 0.7, 1.5,
                           McConfig(seed=1, sample_count=10))


class TestAveragedGhz:
    def test_matches_qubit_coherence(self):
        spec = SignalSpec.single(1.0, 0.5)
        t = 0.7
        cfg = McConfig(seed=9, sample_count=N_FAST)
        sampled = averaged_ghz_smallN(1, spec, Protocol.FREE, t, cfg)
        analytic = qubit_state(phase_distribution(spec, Protocol.FREE, t))
        # MC error on E[cos 2phi] at 1e5 samples
        assert abs(sampled.entries[0, 1] - analytic.entries[0, 1]) < 0.01

    def test_coherence_ratio_oracle(self):
        spec = SignalSpec.single(1.0, 0.5)
        t = 0.7
        cfg = McConfig(seed=9, sample_count=N_FAST)
        dist = phase_distribution(spec, Protocol.FREE, t)
        one = averaged_ghz_smallN(1, spec, Protocol.FREE, t, cfg)
        four = averaged_ghz_smallN(4, spec, Protocol.FREE, t, cfg)
        ratio = four.entries[0, 1] / one.entries[0, 1]
        expected = math.exp(-2.0 * (16.0 - 1.0) * dist.variance)
        assert rel_err(ratio, expected) < 0.2  # deep suppression, noisy ratio

    def test_rejects_large_n(self):
        with pytest.raises(ValueError):
            averaged_ghz_smallN(7, SignalSpec.single(1.0, 1.0), Protocol.FREE, 0.7,
                                McConfig(seed=1, sample_count=100))

    def test_rejects_empty_sampling_plan(self):
        with pytest.raises(ValueError):
            McConfig(seed=1, sample_count=0)
