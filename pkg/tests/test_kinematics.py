import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vortexpack.errors import DomainError
from vortexpack.kinematics import (ELECTRON_MASS_KEV, LAMBDA_C_NM, Boost,
                                   FourVector, boost_z, minkowski_dot,
                                   minkowski_square, on_shell,
                                   pbar_from_kinetic_kev,
                                   sigma_ratio_from_waist_nm)


class TestFourVector:
    def test_arithmetic(self):
        a = FourVector(1.0, 2.0, 3.0, 4.0)
        b = FourVector(0.5, -1.0, 0.0, 2.0)
        assert (a + b).as_tuple() == (1.5, 1.0, 3.0, 6.0)
        assert (a - b).as_tuple() == (0.5, 3.0, 3.0, 2.0)
        assert (2.0 * a).as_tuple() == (2.0, 4.0, 6.0, 8.0)

    def test_metric(self):
        v = FourVector(5.0, 1.0, 2.0, 3.0)
        assert minkowski_square(v) == pytest.approx(25.0 - 14.0)
        assert minkowski_dot(v, FourVector(1.0, 0.0, 0.0, 1.0)) == 2.0


class TestBoost:
    def test_composition_is_additive(self):
        b = Boost(0.7).compose(Boost(-0.2))
        assert b.rapidity == pytest.approx(0.5)
        assert Boost(0.3).inverse().rapidity == -0.3

    def test_beta_gamma(self):
        b = Boost(1.0)
        assert b.beta == pytest.approx(math.tanh(1.0))
        assert b.gamma == pytest.approx(math.cosh(1.0))

    @settings(max_examples=50, deadline=None)
    @given(eta=st.floats(-5.0, 5.0), pz=st.floats(-10.0, 10.0),
           m=st.floats(0.1, 10.0))
    def test_boost_preserves_mass_shell(self, eta, pz, m):
        p = on_shell(pz, m)
        q = boost_z(p, Boost(eta))
        assert minkowski_square(q) == pytest.approx(m * m, rel=1e-9)

    def test_round_trip(self):
        v = FourVector(1.0, 0.5, -0.25, 2.0)
        w = boost_z(boost_z(v, Boost(2.0)), Boost(-2.0))
        for a, b in zip(v.as_tuple(), w.as_tuple()):
            assert a == pytest.approx(b, rel=1e-12, abs=1e-12)

    def test_transverse_untouched(self):
        v = boost_z(FourVector(1.0, 3.0, 4.0, 0.0), Boost(1.3))
        assert (v.x, v.y) == (3.0, 4.0)


class TestUnits:
    def test_on_shell(self):
        p = on_shell(3.0, 4.0)
        assert p.t == pytest.approx(5.0)
        with pytest.raises(DomainError):
            on_shell(1.0, 0.0)

    def test_sigma_from_waist(self):
        assert sigma_ratio_from_waist_nm(LAMBDA_C_NM) == pytest.approx(1.0)
        assert sigma_ratio_from_waist_nm(1.0) == pytest.approx(3.8616e-4)
        with pytest.raises(DomainError):
            sigma_ratio_from_waist_nm(0.0)

    def test_pbar_from_kinetic(self):
        assert pbar_from_kinetic_kev(0.0) == 0.0
        # 300 keV microscope beam: gamma = 1 + T/m
        gamma = 1.0 + 300.0 / ELECTRON_MASS_KEV
        assert pbar_from_kinetic_kev(300.0) == pytest.approx(
            math.sqrt(gamma**2 - 1.0))
        with pytest.raises(DomainError):
            pbar_from_kinetic_kev(-1.0)
