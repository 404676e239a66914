import math

import numpy as np
import pytest

from vortexpack import specfun
from vortexpack.errors import ParameterMismatchError
from vortexpack.packet import (MomentumPoint, PacketParams, average,
                               default_spec, log_psi_momentum,
                               measure_log_weight, overlap, phase_winding)


class TestPacketParams:
    def test_derived_quantities(self):
        p = PacketParams(3, 0.1, 1.0, 2.0)
        assert p.sigma_abs == pytest.approx(0.2)
        assert p.pbar_abs == pytest.approx(2.0)
        assert p.ebar == pytest.approx(math.sqrt(8.0))
        assert p.ubar == pytest.approx(2.0 / math.sqrt(8.0))
        assert p.bessel_argument == pytest.approx(200.0)
        assert p.paraxiality == pytest.approx(0.03)

    def test_validation(self):
        with pytest.raises(ValueError):
            PacketParams(0, -0.1)
        with pytest.raises(ValueError):
            PacketParams(0, 0.1, m=0.0)

    def test_boost_composes(self):
        p = PacketParams(2, 0.1, 0.5)
        q = p.boosted(0.7).boosted(-0.7)
        assert q.pbar_z == pytest.approx(0.5, abs=1e-13)
        # rest frame boosted by eta: pbar = sinh(eta)
        assert PacketParams(0, 0.1).boosted(1.0).pbar_z == pytest.approx(
            math.sinh(1.0))


class TestWaveFunction:
    def test_phase_is_vortex(self):
        p = PacketParams(4, 0.2)
        q = MomentumPoint(0.3, 0.5, 0.1)
        assert log_psi_momentum(p, q).phase == pytest.approx(2.0)

    def test_phase_winding(self):
        for ell in (0, 7, -3):
            p = PacketParams(ell, 0.2, 0.5)
            assert phase_winding(p, 0.3, 0.5) == ell

    def test_measure_normalized_to_one(self):
        # the analytically normalized measure integrates to 1 even where the
        # raw Gaussian scale is exp(-800)
        for ell, sig, pb in [(0, 0.05, 0.0), (5, 0.1, 1.0), (20, 0.2, 5.0)]:
            p = PacketParams(ell, sig, pb)
            assert overlap(p, p) == pytest.approx(1.0, abs=1e-9)

    def test_measure_weight_peak_location(self):
        # the transverse weight peaks at p_perp = sigma sqrt(|ell|)
        p = PacketParams(9, 0.1)
        peak = 0.1 * 3.0
        w_peak = measure_log_weight(p, MomentumPoint(peak, 0.0, 0.0))
        for off in (0.8 * peak, 1.2 * peak):
            assert measure_log_weight(p, MomentumPoint(off, 0.0, 0.0)) < w_peak


class TestAverage:
    def test_energy_matches_bessel_ratio(self):
        p = PacketParams(5, 0.1, 1.0)
        ratio = specfun.bessel_k_ratio(6.0, p.bessel_argument)
        e = average(p, lambda pp, pz: np.sqrt(pp**2 + pz**2 + 1.0))
        assert e == pytest.approx(p.ebar * ratio, rel=1e-9)

    def test_odd_azimuthal_average_is_zero(self):
        p = PacketParams(3, 0.1, 1.0)
        px = average(p, lambda pp, phi, pz: pp * np.cos(phi), azimuthal=True)
        assert abs(px) <= 1e-9

    def test_boost_covariance(self):
        p = PacketParams(2, 0.1, 0.5)
        eta = 0.8
        e0 = average(p, lambda pp, pz: np.sqrt(pp**2 + pz**2 + 1.0))
        z0 = average(p, lambda pp, pz: pz + 0.0 * pp)
        pb = p.boosted(eta)
        e1 = average(pb, lambda pp, pz: np.sqrt(pp**2 + pz**2 + 1.0))
        ch, sh = math.cosh(eta), math.sinh(eta)
        assert e1 == pytest.approx(e0 * ch + z0 * sh, rel=1e-9)


class TestOverlap:
    def test_orthogonal_oam(self):
        a = PacketParams(1, 0.1, 1.0)
        b = PacketParams(4, 0.1, 1.0)
        assert overlap(a, b) == 0.0

    def test_parameter_mismatch(self):
        with pytest.raises(ParameterMismatchError):
            overlap(PacketParams(1, 0.1), PacketParams(1, 0.2))


class TestDefaultSpec:
    def test_window_tail_is_negligible(self):
        # psi itself (not just |psi|^2) is below exp(-60) on every edge
        from vortexpack.packet import _invariant_exponent
        for ell, sig, pb in [(0, 0.3, 1.0), (3, 0.3, 5.0), (20, 0.05, 0.0)]:
            p = PacketParams(ell, sig, pb)
            (lo, hi), (zlo, zhi) = default_spec(p).domain
            peak = p.sigma_abs * math.sqrt(abs(ell))
            assert _invariant_exponent(p, hi, p.pbar_abs) <= -60.0
            assert _invariant_exponent(p, peak, zlo) <= -60.0
            assert _invariant_exponent(p, peak, zhi) <= -60.0
            assert lo >= 0.0
