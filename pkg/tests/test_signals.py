"""Signal, draw, and control-spec construction and validation."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acqfi import AmplitudeDraw, ControlSpec, SignalKind, SignalSpec

positive = st.floats(min_value=1e-6, max_value=1e6,
                     allow_nan=False, allow_infinity=False)


class TestSignalSpec:
    def test_single_roundtrip(self):
        spec = SignalSpec.single(2.5, 0.7)
        assert spec.kind is SignalKind.SINGLE_FREQ
        assert spec.omega == 2.5
        assert spec.sigma == 0.7
        assert spec.n_components == 1
        assert spec.frequencies == (2.5,)

    @given(omega_s=positive, ratio=st.floats(min_value=1e-6, max_value=0.999))
    def test_centroid_separation_exact(self, omega_s, ratio):
        omega_r = omega_s * ratio
        spec = SignalSpec.from_centroid(omega_s, omega_r, 1.0)
        assert spec.omega1 == omega_s + omega_r
        assert spec.omega2 == omega_s - omega_r
        assert spec.frequencies == (spec.omega1, spec.omega2)
        assert spec.n_components == 2

    @given(omega2=positive, gap=positive)
    def test_bi_orders_tones(self, omega2, gap):
        spec = SignalSpec.bi(omega2 + gap, omega2, 1.0)
        assert spec.omega1 > spec.omega2 > 0

    def test_bi_rejects_unordered(self):
        with pytest.raises(ValueError):
            SignalSpec.bi(1.0, 2.0, 1.0)

    @pytest.mark.parametrize("bad", [-1.0, float("nan"), float("inf")])
    def test_rejects_bad_sigma(self, bad):
        with pytest.raises(ValueError):
            SignalSpec.single(1.0, bad)

    def test_rejects_nonpositive_omega(self):
        with pytest.raises(ValueError):
            SignalSpec.single(0.0, 1.0)
        with pytest.raises(ValueError):
            SignalSpec.single(-2.0, 1.0)

    def test_rejects_mixed_fields(self):
        with pytest.raises(ValueError):
            SignalSpec(SignalKind.SINGLE_FREQ, 1.0, omega=1.0, omega_s=2.0)
        with pytest.raises(ValueError):
            SignalSpec(SignalKind.BI_FREQ, 1.0, omega=1.0, omega_s=2.0, omega_r=0.5)

    def test_rejects_degenerate_tones(self):
        with pytest.raises(ValueError):
            SignalSpec.from_centroid(1.0, 0.0, 1.0)  # omega_r = 0
        with pytest.raises(ValueError):
            SignalSpec.from_centroid(1.0, 1.0, 1.0)  # omega2 = 0

    def test_single_has_no_two_tone_fields(self):
        spec = SignalSpec.single(1.0, 1.0)
        with pytest.raises(ValueError):
            spec.omega1
        with pytest.raises(ValueError):
            spec.omega2


class TestAmplitudeDraw:
    def test_single_and_bi(self):
        assert AmplitudeDraw.single(1.0, 2.0).n_components == 1
        assert AmplitudeDraw.bi(1.0, 2.0, 3.0, 4.0).n_components == 2

    def test_rejects_mismatched_lengths(self):
        with pytest.raises(ValueError):
            AmplitudeDraw((1.0,), (1.0, 2.0))
        with pytest.raises(ValueError):
            AmplitudeDraw((1.0, 2.0, 3.0), (1.0, 2.0, 3.0))


class TestControlSpec:
    @given(omega=positive, ratio=st.floats(min_value=1e-4, max_value=0.3),
           pulses=st.integers(min_value=1, max_value=200))
    def test_tau_times_control_freq_is_pi(self, omega, ratio, pulses):
        control = ControlSpec.single_freq(omega, ratio * omega, pulses)
        assert control.tau * control.control_freq == pytest.approx(math.pi, rel=1e-15)
        assert control.total_time == pulses * control.tau

    def test_single_freq_detuning(self):
        control = ControlSpec.single_freq(1.0, 0.1, 5)
        assert control.control_freq == pytest.approx(1.1)
        assert control.delta == 0.1

    @given(pulses=st.integers(min_value=3, max_value=300),
           winding=st.integers(min_value=1, max_value=5))
    def test_bi_freq_winding_exact(self, pulses, winding):
        if pulses - 2 * winding <= 0:
            return
        spec = SignalSpec.from_centroid(3.0, 0.4, 1.0)
        control = ControlSpec.bi_freq(spec, pulses, winding)
        assert control.winding == winding
        assert control.delta_s * control.total_time == pytest.approx(
            2.0 * math.pi * winding, rel=1e-12)
        assert control.delta_r == -spec.omega_r

    def test_bi_freq_rejects_zero_winding(self):
        spec = SignalSpec.from_centroid(3.0, 0.4, 1.0)
        with pytest.raises(ValueError):
            ControlSpec.bi_freq(spec, 10, 0)

    def test_bi_freq_rejects_short_trains(self):
        spec = SignalSpec.from_centroid(3.0, 0.4, 1.0)
        with pytest.raises(ValueError):
            ControlSpec.bi_freq(spec, 2, 1)

    def test_bi_freq_needs_two_tones(self):
        with pytest.raises(ValueError):
            ControlSpec.bi_freq(SignalSpec.single(1.0, 1.0), 10, 1)

    def test_rejects_off_grid_winding(self):
        # delta_s * t = 0.7 * 10 * pi / 1.0 is nowhere near a 2*pi multiple
        with pytest.raises(ValueError):
            ControlSpec(control_freq=1.0, pulse_count=10, delta_s=0.7, delta_r=-0.1)

    def test_rejects_bad_pulse_count(self):
        with pytest.raises(ValueError):
            ControlSpec(control_freq=1.0, pulse_count=0)
        with pytest.raises(ValueError):
            ControlSpec(control_freq=0.0, pulse_count=1)

    def test_rejects_half_specified_two_tone(self):
        with pytest.raises(ValueError):
            ControlSpec(control_freq=1.0, pulse_count=4, delta_s=1.0)
