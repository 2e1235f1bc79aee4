"""Environment-state Fisher bounds: closed forms, identities, quadrature."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from acqfi import (
    Method,
    Protocol,
    QfiReport,
    SignalSpec,
    Theta,
    ZeroInformationError,
    bound_centroid,
    bound_separation,
    bound_single_freq,
    centroid_asymptote,
    gaussian_fisher,
    phase_distribution,
    quadrature_fisher,
    separation_asymptote,
    single_freq_asymptote,
)
from acqfi.phase import PhaseDistribution

from .conftest import rel_err


def _dist(v, dv, theta=Theta.OMEGA):
    return PhaseDistribution(variance=v, dvariance_dtheta=dv, theta_name=theta)


class TestQfiReport:
    def test_rejects_negative_value(self):
        with pytest.raises(ValueError):
            QfiReport(-1e-9, Method.CLOSED_FORM)

    def test_diagnostics_default(self):
        assert QfiReport(1.0, Method.SLD).diagnostics == {}


class TestGaussianFisher:
    @given(v=st.floats(min_value=1e-8, max_value=1e3),
           dv=st.floats(min_value=-1e3, max_value=1e3))
    def test_formula(self, v, dv):
        report = gaussian_fisher(_dist(v, dv))
        assert report.value == pytest.approx(dv * dv / (2.0 * v * v), rel=1e-14)
        assert report.method is Method.CLOSED_FORM

    def test_rejects_degenerate(self):
        with pytest.raises(ZeroInformationError):
            gaussian_fisher(_dist(0.0, 0.0))
        with pytest.raises(ZeroInformationError):
            gaussian_fisher(PhaseDistribution(1.0, 1.0, Theta.OMEGA,
                                              zero_information=True))


class TestQuadratureFisher:
    @pytest.mark.parametrize("v,dv", [(0.1, 0.3), (2.0, -1.5), (1e-4, 1e-3)])
    def test_matches_closed_form(self, v, dv):
        dist = _dist(v, dv)
        quad = quadrature_fisher(dist)
        closed = gaussian_fisher(dist)
        assert rel_err(quad.value, closed.value) < 1e-6
        assert quad.method is Method.QUADRATURE
        assert "nodes" in quad.diagnostics


class TestClosedFormBounds:
    @given(omega=st.floats(min_value=0.1, max_value=20.0),
           t=st.floats(min_value=0.05, max_value=3.0))
    def test_single_freq_is_gaussian_fisher(self, omega, t):
        dist = phase_distribution(SignalSpec.single(omega, 1.0), Protocol.FREE, t)
        if dist.zero_information:
            return
        bound = bound_single_freq(omega, t)
        assert rel_err(bound.value, gaussian_fisher(dist).value) < 1e-12
        assert bound.parameter is Theta.OMEGA

    @given(omega_s=st.floats(min_value=0.1, max_value=20.0),
           ratio=st.floats(min_value=1e-4, max_value=0.9),
           t=st.floats(min_value=0.05, max_value=3.0))
    def test_centroid_is_gaussian_fisher(self, omega_s, ratio, t):
        omega_r = ratio * omega_s
        spec = SignalSpec.from_centroid(omega_s, omega_r, 1.0)
        dist = phase_distribution(spec, Protocol.CENTROID_FREE, t, approx=True)
        if dist.zero_information:
            return
        bound = bound_centroid(omega_s, omega_r, t)
        assert rel_err(bound.value, gaussian_fisher(dist).value) < 1e-12
        assert bound.parameter is Theta.OMEGA_S

    @given(omega_r=st.floats(min_value=0.01, max_value=5.0),
           t=st.floats(min_value=0.05, max_value=1.2))
    def test_separation_is_gaussian_fisher(self, omega_r, t):
        if not (omega_r * t < 2.0 * math.pi):
            return
        spec = SignalSpec.from_centroid(10.0 * omega_r, omega_r, 1.0)
        dist = phase_distribution(spec, Protocol.SEPARATION_CONTROLLED, t,
                                  approx=True)
        if dist.zero_information:
            return
        bound = bound_separation(omega_r, t)
        assert rel_err(bound.value, gaussian_fisher(dist).value) < 1e-12
        assert bound.parameter is Theta.OMEGA_R

    @pytest.mark.parametrize("sigma", [0.1, 1.0, 10.0])
    def test_sigma_cancels(self, sigma):
        # bounds are log-derivative quantities: sigma^2 scales v and v'
        # identically, so the bound functions take sigma only vestigially
        ref = bound_single_freq(1.0, 0.7).value
        assert bound_single_freq(1.0, 0.7, sigma=sigma).value == ref
        spec = SignalSpec.from_centroid(2.0, 0.3, sigma)
        dist = phase_distribution(spec, Protocol.SEPARATION_CONTROLLED, 0.7,
                                  approx=True)
        assert rel_err(gaussian_fisher(dist).value,
                       bound_separation(0.3, 0.7).value) < 1e-12

    def test_centroid_reduces_to_single_at_zero_separation(self):
        single = bound_single_freq(1.0, 0.05).value
        reduced = bound_centroid(1.0, 0.0, 0.05).value
        assert rel_err(reduced, single) < 1e-12

    def test_small_x_asymptotes(self):
        t = 1e-3
        assert rel_err(bound_single_freq(20.0, t).value,
                       single_freq_asymptote(20.0, t)) < 0.01
        assert rel_err(bound_centroid(20.0, 20.0 * 1e-4, t).value,
                       centroid_asymptote(20.0, t)) < 0.01
        assert rel_err(bound_separation(20.0, t).value,
                       separation_asymptote(20.0)) < 0.01

    def test_separation_small_x_within_point3_percent(self):
        # omega_r t <= 0.1 keeps the bound within 0.3% of 2 / omega_r^2
        for x in (0.02, 0.05, 0.1):
            t = 0.7
            omega_r = x / t
            assert rel_err(bound_separation(omega_r, t).value,
                           2.0 / omega_r ** 2) < 0.003

    def test_separation_divergence_diagnostic(self):
        assert "small_separation_divergence" in bound_separation(0.01, 1.0).diagnostics
        assert "small_separation_divergence" not in bound_separation(1.0, 1.0).diagnostics

    def test_separation_vanishes_at_pi(self):
        assert bound_separation(math.pi, 1.0).value == pytest.approx(0.0, abs=1e-30)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bound_single_freq(0.0, 1.0)
        with pytest.raises(ValueError):
            bound_single_freq(1.0, -1.0)
        with pytest.raises(ValueError):
            bound_centroid(1.0, 2.0, 1.0)  # omega_r > omega_s
        with pytest.raises(ValueError):
            bound_separation(1.0, 7.0)  # omega_r * t >= 2 pi
        with pytest.raises(ValueError):
            bound_separation(-1.0, 1.0)

    def test_zero_information_points(self):
        with pytest.raises(ZeroInformationError):
            bound_single_freq(1.0, 2.0 * math.pi)
        with pytest.raises(ZeroInformationError):
            bound_centroid(1.0, 0.0, 2.0 * math.pi)

    def test_exact_branch_approaches_bound_at_small_x(self):
        # the bounds pair with the small-separation variance branches; the
        # exact branches agree with them only in the x -> 0 limit
        t = 0.7
        gaps = []
        for omega_r in (1.0, 0.1, 0.01):
            spec = SignalSpec.from_centroid(10.0, omega_r, 1.0)
            exact = gaussian_fisher(phase_distribution(
                spec, Protocol.SEPARATION_CONTROLLED, t)).value
            gaps.append(rel_err(exact, bound_separation(omega_r, t).value))
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 1e-3


class TestAsymptotes:
    def test_formulas(self):
        assert single_freq_asymptote(2.0, 3.0) == pytest.approx(4.0 * 81.0 / 72.0)
        assert centroid_asymptote(2.0, 3.0) == pytest.approx(4.0 * 81.0 / 72.0)
        assert separation_asymptote(2.0) == pytest.approx(0.5)
