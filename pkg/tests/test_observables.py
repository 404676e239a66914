import math

import mpmath
import pytest

from vortexpack import observables as obs
from vortexpack import packet as pk

mpmath.mp.dps = 40


class TestMeanFourMomentum:
    def test_exact_is_bessel_ratio(self):
        p = pk.PacketParams(2, 0.2, 1.0)
        z = mpmath.mpf(2) / mpmath.mpf("0.04")
        ref = float(mpmath.besselk(4, z) / mpmath.besselk(3, z))
        v = obs.mean_four_momentum_exact(p)
        assert v.t == pytest.approx(p.ebar * ref, rel=1e-12)
        assert v.z == pytest.approx(p.pbar_abs * ref, rel=1e-12)
        assert (v.x, v.y) == (0.0, 0.0)

    def test_quadrature_agrees(self):
        p = pk.PacketParams(5, 0.1, 1.0)
        exact = obs.mean_four_momentum_exact(p)
        quad, err = obs.mean_four_momentum_quadrature(p)
        assert quad.t == pytest.approx(exact.t, rel=1e-8)
        assert quad.z == pytest.approx(exact.z, rel=1e-8)
        assert err > 0.0

    def test_expansion_form(self):
        p = pk.PacketParams(4, 0.1, 0.5)
        v = obs.mean_four_momentum_expansion(p)
        factor = 1.0 + (0.75 + 2.0) * 0.01
        assert v.t == pytest.approx(p.ebar * factor, rel=1e-14)

    def test_paraxiality_warning(self):
        with pytest.warns(obs.ParaxialityWarning):
            obs.mean_four_momentum_expansion(pk.PacketParams(40, 0.2))


class TestInvariantMass:
    def test_exceeds_rest_mass(self):
        exact, expansion = obs.invariant_mass(pk.PacketParams(3, 0.1))
        assert exact > 1.0
        assert expansion == pytest.approx(math.sqrt(1.0 + 4.5 * 0.01))
        assert exact == pytest.approx(expansion, rel=1e-3)

    def test_frame_independent(self):
        a, _ = obs.invariant_mass(pk.PacketParams(3, 0.1, 0.0))
        b, _ = obs.invariant_mass(pk.PacketParams(3, 0.1, 5.0))
        assert a == b


class TestMassExcess:
    def test_leading_order(self):
        me = obs.mass_excess(pk.PacketParams(4, 0.05))
        assert me.leading_order == pytest.approx(2.0 * 0.0025)
        assert me.delta_m_over_m == pytest.approx(me.leading_order, rel=1e-2)

    def test_headline_beam(self):
        # |l| = 1000 focused to 1 nm: 7.46e-5, below the 1e-3 bound
        sigma = 3.8616e-4
        me = obs.mass_excess(pk.PacketParams(1000, sigma))
        assert me.delta_m_over_m == pytest.approx(7.46e-5, rel=0.01)
        assert me.delta_m_over_m < 1e-3

    def test_positive(self):
        with pytest.raises(ValueError):
            obs.MassExcess(-1e-3, 0.0, 1, 0.1)


class TestMeanPperp:
    def test_exact_against_mpmath(self):
        p = pk.PacketParams(3, 0.1)
        z = mpmath.mpf(2) / mpmath.mpf("0.01")
        ref = float(mpmath.gamma(4.5) / mpmath.gamma(4)
                    * mpmath.besselk(4.5, z) / mpmath.besselk(4, z)) * 0.1
        rep = obs.mean_pperp(p, with_quadrature=False)
        assert rep.exact == pytest.approx(ref, rel=1e-12)

    def test_quadrature_route(self):
        rep = obs.mean_pperp(pk.PacketParams(3, 0.1, 1.0))
        assert rep.quadrature == pytest.approx(rep.exact, rel=1e-8)

    def test_gaussian_limit(self):
        # l = 0: <p_perp> = sigma Gamma(3/2)/Gamma(1) = sigma sqrt(pi)/2
        rep = obs.mean_pperp(pk.PacketParams(0, 0.01), with_quadrature=False)
        assert rep.exact / 0.01 == pytest.approx(0.5 * math.sqrt(math.pi),
                                                 rel=1e-4)


class TestPperpScan:
    def test_scan_and_slope(self):
        rows = obs.pperp_scan(0.01, 100)
        assert rows[0]["ell"] == 0
        assert rows[-1]["sqrt_ell"] == pytest.approx(10.0)
        slope = obs.pperp_scan_slope(rows)
        assert slope == pytest.approx(1.0, abs=0.02)

    def test_scan_monotone(self):
        rows = obs.pperp_scan(0.02, 30)
        vals = [r["pperp_over_sigma_exact"] for r in rows]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_nonparaxial_scan_warns(self):
        with pytest.warns(obs.ParaxialityWarning):
            obs.pperp_scan(0.2, 20)


class TestParaxiality:
    def test_opening_angle(self):
        p = pk.PacketParams(9, 0.01, 1.0)
        eps, theta0 = obs.paraxiality(p)
        assert eps == pytest.approx(9.0 * 1e-4, rel=0.1)
        assert theta0 == pytest.approx(math.atan2(0.03, 1.0), rel=0.1)

    def test_rest_frame_angle(self):
        _, theta0 = obs.paraxiality(pk.PacketParams(1, 0.1, 0.0))
        assert theta0 == pytest.approx(0.5 * math.pi)
