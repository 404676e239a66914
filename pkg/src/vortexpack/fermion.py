"""Dirac bispinor layer for the vortex packet.

Helicity states quantized along the mean momentum, the bispinor derivative
identity that reduces the magnetic-moment triple integral to single packet
averages, and the resulting observables: orbital and spin magnetic moments,
the spin-orbit parameter Delta, and the electric dipole moment with the
mean velocity.  Every expansion has a quadrature counterpart over the packet
measure, mirroring the scalar observables module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import packet as pk
from .errors import DomainError
from .quadrature import QuadratureSpec

__all__ = [
    "Helicity",
    "HELICITY_UP",
    "HELICITY_DOWN",
    "MagneticMoment",
    "SpinOrbitDelta",
    "DipoleVelocity",
    "make_spinor",
    "make_bispinor",
    "bispinor_current",
    "spinor_identity_check",
    "magnetic_moment",
    "spin_orbit_delta",
    "dipole_and_velocity",
    "total_jz",
]

_SIGMA = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)

# Dirac representation
_GAMMA0 = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)
_GAMMA = np.array([
    np.block([[np.zeros((2, 2)), s], [-s, np.zeros((2, 2))]])
    for s in _SIGMA
])


@dataclass(frozen=True)
class Helicity:
    """Spin projection +-1/2 onto the mean-momentum axis z."""

    lam: float

    def __post_init__(self):
        if self.lam not in (0.5, -0.5):
            raise ValueError("helicity must be +0.5 or -0.5")

    @property
    def zeta(self) -> np.ndarray:
        """The polarization vector 2 lambda z-hat."""
        return np.array([0.0, 0.0, 2.0 * self.lam])


HELICITY_UP = Helicity(0.5)
HELICITY_DOWN = Helicity(-0.5)


@dataclass(frozen=True)
class MagneticMoment:
    """Orbital and spin magnetic moments (units 1/m, i.e. Bohr magnetons)."""

    orbital: tuple
    spin: tuple

    @property
    def total(self) -> tuple:
        return tuple(o + s for o, s in zip(self.orbital, self.spin))


@dataclass(frozen=True)
class SpinOrbitDelta:
    """The spin-orbit parameter (1 - m/ebar) sin^2(theta0), both branches."""

    exact: float
    paraxial: float
    rest_frame: bool


@dataclass(frozen=True)
class DipoleVelocity:
    """Electric dipole moment and mean velocity, with the two terms that
    vanish by azimuthal symmetry reported as computed."""

    dipole: tuple
    mean_velocity: tuple
    phase_gradient_term: tuple
    spin_term: tuple


def make_spinor(helicity: Helicity) -> np.ndarray:
    """Eigenspinor of sigma_3 with eigenvalue 2 lambda."""
    if helicity.lam > 0:
        return np.array([1.0, 0.0], dtype=complex)
    return np.array([0.0, 1.0], dtype=complex)


def _momentum_vector(q: pk.MomentumPoint) -> np.ndarray:
    return np.array([q.p_perp * math.cos(q.phi_p),
                     q.p_perp * math.sin(q.phi_p), q.p_z])


def make_bispinor(q: pk.MomentumPoint, helicity: Helicity,
                  m: float) -> np.ndarray:
    """u(p) = (sqrt(eps+m) w, sqrt(eps-m) (p.sigma) w / |p|); |u|^2 = 2 eps.

    The spinor w is the fixed helicity state along the mean-momentum axis,
    independent of the integration variable p.
    """
    p = _momentum_vector(q)
    pnorm = float(np.linalg.norm(p))
    if pnorm == 0.0:
        raise DomainError("bispinor undefined at |p| = 0")
    eps = q.energy(m)
    w = make_spinor(helicity)
    p_sigma = np.tensordot(p / pnorm, _SIGMA, axes=1)
    return np.concatenate([math.sqrt(eps + m) * w,
                           math.sqrt(eps - m) * (p_sigma @ w)])


def bispinor_current(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """ubar gamma^i v for i = 1, 2, 3; equals 2 p for v = u = u(p)."""
    ubar = u.conj() @ _GAMMA0
    return np.array([ubar @ g @ v for g in _GAMMA])


def spinor_identity_check(q: pk.MomentumPoint, helicity: Helicity, m: float,
                          h: float = 1e-4) -> float:
    """Max residual of the helicity-state derivative identity over j, k.

    LHS: ubar g_j du/dp_k - (dubar/dp_k) g_j u by central differences.
    RHS: 2i ((p_k/eps)(1/(eps+m)) [zeta x p]_j + [zeta x e_j]_k).
    Central differences make the residual O(h^2).
    """
    p = _momentum_vector(q)
    eps = q.energy(m)
    zeta = helicity.zeta

    def u_at(pv):
        perp = math.hypot(pv[0], pv[1])
        return make_bispinor(
            pk.MomentumPoint(perp, math.atan2(pv[1], pv[0]), pv[2]),
            helicity, m)

    u0 = u_at(p)
    ubar0 = u0.conj() @ _GAMMA0
    zxp = np.cross(zeta, p)
    worst = 0.0
    for k in range(3):
        dp = np.zeros(3)
        dp[k] = h
        up, um = u_at(p + dp), u_at(p - dp)
        du = (up - um) / (2.0 * h)
        dubar = (up.conj() - um.conj()) @ _GAMMA0 / (2.0 * h)
        for j in range(3):
            lhs = ubar0 @ _GAMMA[j] @ du - dubar @ _GAMMA[j] @ u0
            e_j = np.zeros(3)
            e_j[j] = 1.0
            rhs = 2.0j * ((p[k] / eps) * zxp[j] / (eps + m)
                          + np.cross(zeta, e_j)[k])
            worst = max(worst, abs(lhs - rhs))
    return worst


def _mu_b_expansion_z(params: pk.PacketParams) -> float:
    s2 = params.sigma ** 2
    gam = params.ebar / params.m
    return params.ell / (2.0 * params.ebar) * (
        1.0 - 0.5 * s2 * (abs(params.ell) + 0.5 + 1.0 / gam**2))


def _mu_s_expansion_z(params: pk.PacketParams, helicity: Helicity) -> float:
    s2 = params.sigma ** 2
    r = params.m / params.ebar  # m/ebar
    q = params.m / (params.ebar + params.m)
    bracket = (0.5 + 1.5 * r + 0.5 * r**2 - 1.5 * r**3
               - q * (1.5 - 2.0 * r**2 - 1.5 * r**3)
               + abs(params.ell) * (1.0 + r - q))
    return (2.0 * helicity.lam) / (2.0 * params.ebar) \
        * (1.0 - 0.5 * s2 * bracket)


def magnetic_moment(params: pk.PacketParams, helicity: Helicity,
                    spec: QuadratureSpec = None):
    """(quadrature, expansion) pair of MagneticMoment values.

    Quadrature: mu_b = z-hat ell <1/(2 eps)>; mu_s z-component is
    <(1/(2 eps)^2)(zeta_z (eps + m) + p_z^2 zeta_z/(eps + m))> (the
    transverse pieces of p (p.zeta) average to zero over phi).  Expansions
    carry the sigma^2/m^2 corrections, including the non-invariant
    m^2/ebar^2 term of the orbital part.
    """
    m = params.m
    m2 = m * m
    zeta_z = 2.0 * helicity.lam

    def inv_two_eps(pp, zz):
        return 0.5 / np.sqrt(pp**2 + zz**2 + m2)

    def spin_z(pp, zz):
        eps = np.sqrt(pp**2 + zz**2 + m2)
        return zeta_z * (eps + m + zz**2 / (eps + m)) / (2.0 * eps) ** 2

    mu_b_z = params.ell * pk.average(params, inv_two_eps, spec)
    mu_s_z = pk.average(params, spin_z, spec)
    quad = MagneticMoment((0.0, 0.0, mu_b_z), (0.0, 0.0, mu_s_z))
    exp = MagneticMoment((0.0, 0.0, _mu_b_expansion_z(params)),
                         (0.0, 0.0, _mu_s_expansion_z(params, helicity)))
    return quad, exp


def spin_orbit_delta(params: pk.PacketParams,
                     helicity: Helicity = HELICITY_UP) -> SpinOrbitDelta:
    """Delta = (1 - m/ebar) sin^2(theta0), and its paraxial form.

    Independent of the helicity sign (it multiplies zeta in the moment); at
    pbar = 0 the opening angle degenerates and the exact form vanishes with
    the rest-frame flag set.
    """
    from .observables import paraxiality

    r = params.m / params.ebar
    q = params.m / (params.ebar + params.m)
    parax = params.paraxiality * (r - q)
    if params.pbar_abs == 0.0:
        return SpinOrbitDelta(0.0, parax, True)
    _, theta0 = paraxiality(params)
    exact = (1.0 - r) * math.sin(theta0) ** 2
    return SpinOrbitDelta(exact, parax, False)


def dipole_and_velocity(params: pk.PacketParams, helicity: Helicity,
                        t: float, spec: QuadratureSpec = None):
    """Dipole <u> t - <d phi/dp> + <p x zeta / (2 eps (eps + m))> and <u>.

    The phase-gradient and spin terms are evaluated by azimuthal quadrature
    and come out zero to tolerance; they are returned so callers can check
    rather than trust the symmetry argument.
    """
    m2 = params.m ** 2
    zeta_z = 2.0 * helicity.lam

    def u_z(pp, zz):
        return zz / np.sqrt(pp**2 + zz**2 + m2)

    uz = pk.average(params, u_z, spec)

    def u_x(pp, phi, zz):
        return pp * np.cos(phi) / np.sqrt(pp**2 + zz**2 + m2)

    def u_y(pp, phi, zz):
        return pp * np.sin(phi) / np.sqrt(pp**2 + zz**2 + m2)

    ux = pk.average(params, u_x, spec, azimuthal=True)
    uy = pk.average(params, u_y, spec, azimuthal=True)
    mean_u = (ux, uy, uz)

    # d(ell phi_p)/dp = (ell/p_perp) phi-hat; the measure's p_perp^(2|l|+1)
    # keeps the 1/p_perp integrable, and the ell factor kills it at l = 0.
    # The p_perp = 0 edge carries zero weight; clamp it to keep the value
    # finite there.
    if params.ell == 0:
        grad_phase = (0.0, 0.0, 0.0)
    else:
        gx = pk.average(
            params,
            lambda pp, phi, zz: -params.ell * np.sin(phi)
            / np.maximum(pp, 1e-300),
            spec, azimuthal=True)
        gy = pk.average(
            params,
            lambda pp, phi, zz: params.ell * np.cos(phi)
            / np.maximum(pp, 1e-300),
            spec, azimuthal=True)
        grad_phase = (gx, gy, 0.0)

    # p x zeta = zeta_z (p_y, -p_x, 0)
    def sx(pp, phi, zz):
        eps = np.sqrt(pp**2 + zz**2 + m2)
        return zeta_z * pp * np.sin(phi) / (2.0 * eps * (eps + params.m))

    def sy(pp, phi, zz):
        eps = np.sqrt(pp**2 + zz**2 + m2)
        return -zeta_z * pp * np.cos(phi) / (2.0 * eps * (eps + params.m))

    spin_term = (pk.average(params, sx, spec, azimuthal=True),
                 pk.average(params, sy, spec, azimuthal=True), 0.0)

    dipole = tuple(u * t - g + s
                   for u, g, s in zip(mean_u, grad_phase, spin_term))
    return DipoleVelocity(dipole, mean_u, grad_phase, spin_term)


def total_jz(ell: int, helicity: Helicity) -> float:
    """Total angular momentum projection ell + lambda."""
    return ell + helicity.lam
