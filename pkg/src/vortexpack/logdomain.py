"""Log-domain scalar types.

Magnitudes in this package routinely involve factors like exp(-2*m^2/sigma^2)
with m^2/sigma^2 ~ 1e7, or sigma^(|l|+1)*sqrt(|l|!) with |l| ~ 1000.  Neither
fits in a double, so every normalization constant and field amplitude is
carried as (log-magnitude, sign) or (log-magnitude, phase) and only ratios are
ever exponentiated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["LogReal", "LogComplex"]

_TWO_PI = 2.0 * math.pi


def _wrap_phase(phi: float) -> float:
    """Reduce a phase to the principal interval (-pi, pi]."""
    phi = math.fmod(phi, _TWO_PI)
    if phi <= -math.pi:
        phi += _TWO_PI
    elif phi > math.pi:
        phi -= _TWO_PI
    return phi


@dataclass(frozen=True)
class LogReal:
    """A real number stored as sign * exp(log_abs).

    sign == 0 encodes an exact zero; log_abs is ignored in that case.
    """

    log_abs: float
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if self.sign != 0 and math.isnan(self.log_abs):
            raise ValueError("log_abs must not be NaN for a nonzero value")

    @classmethod
    def zero(cls) -> "LogReal":
        return cls(-math.inf, 0)

    @classmethod
    def from_float(cls, x: float) -> "LogReal":
        if x == 0.0:
            return cls.zero()
        return cls(math.log(abs(x)), 1 if x > 0 else -1)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        """Exponentiate; may overflow to inf for extreme log_abs."""
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)

    def __mul__(self, other: "LogReal") -> "LogReal":
        if self.sign == 0 or other.sign == 0:
            return LogReal.zero()
        return LogReal(self.log_abs + other.log_abs, self.sign * other.sign)

    def __truediv__(self, other: "LogReal") -> "LogReal":
        if other.sign == 0:
            raise ZeroDivisionError("division by a LogReal zero")
        if self.sign == 0:
            return LogReal.zero()
        return LogReal(self.log_abs - other.log_abs, self.sign * other.sign)


@dataclass(frozen=True)
class LogComplex:
    """A complex number stored as exp(log_abs) * exp(1j * phase).

    The phase is normalized to (-pi, pi].  log_abs == -inf encodes zero.
    """

    log_abs: float
    phase: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "phase", _wrap_phase(self.phase))

    @classmethod
    def zero(cls) -> "LogComplex":
        return cls(-math.inf, 0.0)

    @classmethod
    def from_complex(cls, z: complex) -> "LogComplex":
        z = complex(z)
        if z == 0:
            return cls.zero()
        return cls(math.log(abs(z)), math.atan2(z.imag, z.real))

    @property
    def is_zero(self) -> bool:
        return self.log_abs == -math.inf

    def to_complex(self) -> complex:
        """Exponentiate; may overflow for extreme log_abs."""
        if self.is_zero:
            return 0.0 + 0.0j
        r = math.exp(self.log_abs)
        return complex(r * math.cos(self.phase), r * math.sin(self.phase))

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        if self.is_zero or other.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_abs + other.log_abs, self.phase + other.phase)

    def __truediv__(self, other: "LogComplex") -> "LogComplex":
        if other.is_zero:
            raise ZeroDivisionError("division by a LogComplex zero")
        if self.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_abs - other.log_abs, self.phase - other.phase)

    def abs_ratio(self, other: "LogComplex") -> float:
        """|self| / |other| without leaving the log domain prematurely."""
        return math.exp(self.log_abs - other.log_abs)
