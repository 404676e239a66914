import math

import pytest

from vortexpack.logdomain import LogComplex, LogReal


class TestLogReal:
    def test_round_trip(self):
        for x in (3.5, -0.125, 1e-280, -2e250):
            assert LogReal.from_float(x).to_float() == pytest.approx(x, rel=1e-13)

    def test_zero(self):
        z = LogReal.zero()
        assert z.is_zero and z.to_float() == 0.0
        assert LogReal.from_float(0.0).is_zero

    def test_mul_div(self):
        a = LogReal.from_float(-3.0)
        b = LogReal.from_float(0.5)
        assert (a * b).to_float() == pytest.approx(-1.5)
        assert (a / b).to_float() == pytest.approx(-6.0)
        assert (a * LogReal.zero()).is_zero

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            LogReal.from_float(1.0) / LogReal.zero()

    def test_extreme_magnitude(self):
        # representable far outside float range; the ratio tolerance is set
        # by float spacing at |log| ~ 2e7, not by the representation itself
        a = LogReal(-2e7, 1)
        b = LogReal(-2e7 + math.log(3.0), 1)
        assert (b / a).to_float() == pytest.approx(3.0, rel=1e-8)

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            LogReal(0.0, 2)


class TestLogComplex:
    def test_round_trip(self):
        for z in (1 + 2j, -3.5j, -1.0 + 0j, 0.25 - 0.125j):
            back = LogComplex.from_complex(z).to_complex()
            assert back == pytest.approx(z, rel=1e-15)

    def test_phase_wrapped(self):
        lc = LogComplex(0.0, 7.5 * math.pi)
        assert -math.pi < lc.phase <= math.pi
        assert lc.phase == pytest.approx(-0.5 * math.pi)

    def test_zero(self):
        assert LogComplex.zero().is_zero
        assert LogComplex.from_complex(0.0).to_complex() == 0.0

    def test_mul_div(self):
        a = LogComplex.from_complex(2.0j)
        b = LogComplex.from_complex(1.0 + 1.0j)
        assert (a * b).to_complex() == pytest.approx(2j * (1 + 1j))
        assert (a / b).to_complex() == pytest.approx(2j / (1 + 1j))

    def test_abs_ratio(self):
        a = LogComplex(-1e6, 0.3)
        b = LogComplex(-1e6 + math.log(2.0), -0.7)
        assert b.abs_ratio(a) == pytest.approx(2.0, rel=1e-9)
