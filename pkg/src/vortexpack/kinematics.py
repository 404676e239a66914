"""Minkowski four-vectors, longitudinal boosts, and unit conversion.

Metric signature (+,-,-,-).  Natural units with the particle mass as the
internal scale: m = 1 corresponds to the electron mass, and physical beam
parameters (waist in nm, kinetic energy in keV) convert through the reduced
Compton wavelength.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "FourVector",
    "Boost",
    "minkowski_square",
    "minkowski_dot",
    "boost_z",
    "on_shell",
    "LAMBDA_C_NM",
    "ELECTRON_MASS_KEV",
    "sigma_ratio_from_waist_nm",
    "pbar_from_kinetic_kev",
]

# reduced Compton wavelength of the electron, hbar/(m c), in nm
LAMBDA_C_NM = 3.8616e-4
ELECTRON_MASS_KEV = 510.99895


@dataclass(frozen=True)
class FourVector:
    """Contravariant four-vector (t, x, y, z)."""

    t: float
    x: float
    y: float
    z: float

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.t + other.t, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.t - other.t, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __mul__(self, s: float) -> "FourVector":
        return FourVector(self.t * s, self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def as_tuple(self):
        return (self.t, self.x, self.y, self.z)


@dataclass(frozen=True)
class Boost:
    """Longitudinal boost along +z, parametrized by rapidity.

    Rapidity composes additively, so inverse and composition are exact;
    velocity would lose precision through 1 - beta^2 at high energy.
    """

    rapidity: float

    def inverse(self) -> "Boost":
        return Boost(-self.rapidity)

    def compose(self, other: "Boost") -> "Boost":
        return Boost(self.rapidity + other.rapidity)

    @property
    def beta(self) -> float:
        return math.tanh(self.rapidity)

    @property
    def gamma(self) -> float:
        return math.cosh(self.rapidity)


def minkowski_dot(a: FourVector, b: FourVector) -> float:
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z


def minkowski_square(v: FourVector) -> float:
    """v.v with metric diag(1,-1,-1,-1)."""
    return minkowski_dot(v, v)


def boost_z(v: FourVector, b: Boost) -> FourVector:
    """Active longitudinal boost: (t, z) mix by cosh/sinh of the rapidity."""
    ch = math.cosh(b.rapidity)
    sh = math.sinh(b.rapidity)
    return FourVector(v.t * ch + v.z * sh, v.x, v.y, v.z * ch + v.t * sh)


def on_shell(pz: float, m: float) -> FourVector:
    """Four-momentum (sqrt(pz^2 + m^2), 0, 0, pz) of mass m > 0."""
    if m <= 0.0:
        raise DomainError(f"mass must be positive, got {m}")
    return FourVector(math.hypot(pz, m), 0.0, 0.0, pz)


def sigma_ratio_from_waist_nm(sigma_perp_nm: float) -> float:
    """Invariant momentum width over mass, sigma/m = lambda_c / sigma_perp."""
    if sigma_perp_nm <= 0.0:
        raise DomainError("beam waist must be positive")
    return LAMBDA_C_NM / sigma_perp_nm


def pbar_from_kinetic_kev(kinetic_kev: float) -> float:
    """Mean longitudinal momentum in units of m from kinetic energy in keV."""
    if kinetic_kev < 0.0:
        raise DomainError("kinetic energy must be non-negative")
    gamma = 1.0 + kinetic_kev / ELECTRON_MASS_KEV
    return math.sqrt(gamma * gamma - 1.0)
