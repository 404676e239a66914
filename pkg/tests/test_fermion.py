import math

import numpy as np
import pytest

from vortexpack import fermion as fm
from vortexpack import packet as pk
from vortexpack.errors import DomainError


class TestSpinor:
    def test_helicity_eigenstates(self):
        sigma3 = np.diag([1.0, -1.0])
        for lam in (fm.HELICITY_UP, fm.HELICITY_DOWN):
            w = fm.make_spinor(lam)
            assert np.allclose(sigma3 @ w, 2.0 * lam.lam * w)
            assert np.vdot(w, w).real == pytest.approx(1.0)

    def test_invalid_helicity(self):
        with pytest.raises(ValueError):
            fm.Helicity(0.3)

    def test_zeta(self):
        assert tuple(fm.HELICITY_DOWN.zeta) == (0.0, 0.0, -1.0)


class TestBispinor:
    def test_longitudinal_momentum_closed_form(self):
        q = pk.MomentumPoint(0.0, 0.0, 2.0)
        u = fm.make_bispinor(q, fm.HELICITY_UP, 1.0)
        eps = math.sqrt(5.0)
        expected = [math.sqrt(eps + 1.0), 0.0, math.sqrt(eps - 1.0), 0.0]
        assert np.allclose(u, expected)

    def test_normalization_random(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            q = pk.MomentumPoint(rng.uniform(0.1, 2.0),
                                 rng.uniform(0.0, 2.0 * math.pi),
                                 rng.uniform(-2.0, 2.0))
            u = fm.make_bispinor(q, fm.HELICITY_DOWN, 1.0)
            assert np.vdot(u, u).real == pytest.approx(2.0 * q.energy(1.0),
                                                       abs=1e-12)

    def test_vector_current(self):
        q = pk.MomentumPoint(0.7, 1.1, -0.4)
        u = fm.make_bispinor(q, fm.HELICITY_UP, 1.0)
        cur = fm.bispinor_current(u, u)
        p = np.array([0.7 * math.cos(1.1), 0.7 * math.sin(1.1), -0.4])
        assert np.allclose(cur, 2.0 * p, atol=1e-12)

    def test_degenerate_momentum(self):
        with pytest.raises(DomainError):
            fm.make_bispinor(pk.MomentumPoint(0.0, 0.0, 0.0),
                             fm.HELICITY_UP, 1.0)


class TestSpinorIdentity:
    def test_residual_small(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            q = pk.MomentumPoint(rng.uniform(0.3, 1.5),
                                 rng.uniform(0.0, 2.0 * math.pi),
                                 rng.uniform(-1.5, 1.5))
            assert fm.spinor_identity_check(q, fm.HELICITY_UP, 1.0,
                                            1e-4) <= 1e-6

    def test_second_order(self):
        q = pk.MomentumPoint(1.0, 0.3, 0.5)
        r2 = fm.spinor_identity_check(q, fm.HELICITY_DOWN, 1.0, 2e-3)
        r1 = fm.spinor_identity_check(q, fm.HELICITY_DOWN, 1.0, 1e-3)
        assert r2 / r1 == pytest.approx(4.0, rel=0.2)


class TestMagneticMoment:
    def test_quadrature_vs_expansion(self):
        p = pk.PacketParams(5, 0.05, 1.0)
        quad, expn = fm.magnetic_moment(p, fm.HELICITY_UP)
        assert quad.orbital[2] == pytest.approx(expn.orbital[2], rel=1e-4)
        assert quad.spin[2] == pytest.approx(expn.spin[2], rel=1e-4)
        assert quad.total[2] == pytest.approx(
            quad.orbital[2] + quad.spin[2], rel=1e-14)

    def test_leading_order_limit(self):
        # mu_b -> z-hat ell/(2 ebar) as sigma -> 0; the residual correction
        # at sigma = 0.01 is (sigma^2/2)(|l| + 1/2 + m^2/ebar^2) = 2e-4
        p = pk.PacketParams(3, 0.01, 1.0)
        quad, _ = fm.magnetic_moment(p, fm.HELICITY_UP)
        assert quad.orbital[2] == pytest.approx(3.0 / (2.0 * p.ebar), rel=5e-4)

    def test_helicity_flip(self):
        p = pk.PacketParams(2, 0.1, 1.0)
        up, _ = fm.magnetic_moment(p, fm.HELICITY_UP)
        down, _ = fm.magnetic_moment(p, fm.HELICITY_DOWN)
        assert down.spin[2] == pytest.approx(-up.spin[2], rel=1e-12)
        assert down.orbital[2] == pytest.approx(up.orbital[2], rel=1e-12)

    def test_invariant_ell_term_survives_at_high_energy(self):
        # the |l| part of the spin-moment bracket does not vanish as
        # ebar >> m, unlike the m/ebar terms
        p = pk.PacketParams(50, 0.05, 50.0)
        r = p.m / p.ebar
        q = p.m / (p.ebar + p.m)
        bracket_ell = abs(p.ell) * (1.0 + r - q)
        assert bracket_ell == pytest.approx(50.0, rel=0.05)


class TestSpinOrbitDelta:
    def test_rest_frame(self):
        d = fm.spin_orbit_delta(pk.PacketParams(3, 0.1, 0.0))
        assert d.exact == 0.0 and d.rest_frame

    def test_linear_in_ell(self):
        d1 = fm.spin_orbit_delta(pk.PacketParams(2, 0.1, 1.0))
        d3 = fm.spin_orbit_delta(pk.PacketParams(6, 0.1, 1.0))
        assert d3.paraxial / d1.paraxial == pytest.approx(3.0, abs=1e-12)

    def test_branches_agree_at_large_ell(self):
        # exact uses <p_perp>^2 ~ sigma^2 (ell + 3/4), the paraxial form uses
        # ell sigma^2, so the branches converge like 3/(4 ell)
        d = fm.spin_orbit_delta(pk.PacketParams(20, 0.02, 1.0))
        assert d.exact == pytest.approx(d.paraxial, rel=0.06)


class TestDipoleAndVelocity:
    def test_dipole_zero_at_t0(self):
        dv = fm.dipole_and_velocity(pk.PacketParams(3, 0.1, 1.0),
                                    fm.HELICITY_UP, 0.0)
        assert max(abs(c) for c in dv.dipole) <= 1e-9
        assert max(abs(c) for c in dv.phase_gradient_term) <= 1e-9
        assert max(abs(c) for c in dv.spin_term) <= 1e-9

    def test_dipole_drifts_with_time(self):
        p = pk.PacketParams(3, 0.1, 1.0)
        dv = fm.dipole_and_velocity(p, fm.HELICITY_UP, 2.0)
        assert dv.dipole[2] == pytest.approx(2.0 * dv.mean_velocity[2],
                                             rel=1e-12)

    def test_mean_velocity_close_to_ubar(self):
        p = pk.PacketParams(2, 0.05, 1.0)
        dv = fm.dipole_and_velocity(p, fm.HELICITY_UP, 0.0)
        assert abs(dv.mean_velocity[0]) <= 1e-9
        assert abs(dv.mean_velocity[1]) <= 1e-9
        assert dv.mean_velocity[2] == pytest.approx(p.ubar, rel=2e-3)


class TestTotalJz:
    @pytest.mark.parametrize("ell,lam,expected", [
        (0, fm.HELICITY_UP, 0.5),
        (3, fm.HELICITY_DOWN, 2.5),
        (-2, fm.HELICITY_UP, -1.5),
    ])
    def test_values(self, ell, lam, expected):
        assert fm.total_jz(ell, lam) == expected
