"""Momentum-space vortex packet.

The packet is Gaussian in the invariant (p - pbar)^2 with an azimuthal phase
vortex exp(i l phi_p) and a transverse amplitude p_perp^|l|.  Everything
downstream (observables, fields, fermion moments) averages over the induced
normalized measure, so this module owns the wave function's log-magnitude,
its phase, and the measure weight handed to the quadrature engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import specfun
from .errors import ParameterMismatchError
from .logdomain import LogComplex
from .quadrature import QuadratureSpec, integrate_2d

__all__ = [
    "PacketParams",
    "MomentumPoint",
    "log_psi_momentum",
    "measure_log_weight",
    "average",
    "phase_winding",
    "overlap",
    "default_spec",
]

_LOG_PREFACTOR_BASE = 1.5 * math.log(2.0) + math.log(math.pi)
_N_PHI = 64  # azimuthal trapezoid order (spectrally accurate for smooth f)


@dataclass(frozen=True)
class PacketParams:
    """One vortex packet: OAM ell, invariant width sigma, mean momentum.

    sigma and pbar_z are expressed in units of the mass m; all derived
    quantities below are in the same absolute units as m.
    """

    ell: int
    sigma: float
    pbar_z: float = 0.0
    m: float = 1.0

    def __post_init__(self):
        if self.sigma <= 0.0:
            raise ValueError("sigma must be positive")
        if self.m <= 0.0:
            raise ValueError("mass must be positive")
        if self.ell != int(self.ell):
            raise ValueError("ell must be an integer")

    @property
    def sigma_abs(self) -> float:
        return self.sigma * self.m

    @property
    def pbar_abs(self) -> float:
        return self.pbar_z * self.m

    @property
    def ebar(self) -> float:
        return math.hypot(self.pbar_abs, self.m)

    @property
    def ubar(self) -> float:
        """Mean velocity pbar/ebar."""
        return self.pbar_abs / self.ebar

    @property
    def bessel_argument(self) -> float:
        """2 m^2 / sigma^2, the argument of every normalization Bessel K."""
        return 2.0 / (self.sigma * self.sigma)

    @property
    def paraxiality(self) -> float:
        """|ell| sigma^2 / m^2, the effective expansion parameter."""
        return abs(self.ell) * self.sigma * self.sigma

    def boosted(self, rapidity: float) -> "PacketParams":
        """Packet seen after a longitudinal boost of the mean momentum."""
        ch, sh = math.cosh(rapidity), math.sinh(rapidity)
        pbar_new = (self.pbar_abs * ch + self.ebar * sh) / self.m
        return PacketParams(self.ell, self.sigma, pbar_new, self.m)


@dataclass(frozen=True)
class MomentumPoint:
    """Cylindrical momentum coordinates; the energy is always recomputed."""

    p_perp: float
    phi_p: float
    p_z: float

    def __post_init__(self):
        if self.p_perp < 0.0:
            raise ValueError("p_perp must be non-negative")

    def energy(self, m: float) -> float:
        return math.sqrt(self.p_perp**2 + self.p_z**2 + m * m)


def _invariant_exponent(params: PacketParams, p_perp, p_z):
    """(p - pbar)^2 / (2 sigma^2) + m^2/sigma^2, assembled cancellation-free.

    Equals -(eps ebar - p_z pbar - m^2)/sigma^2; the numerator is rewritten
    as a positive-definite quotient so that tiny sigma (huge exponents) does
    not amplify rounding of eps*ebar.
    """
    m = params.m
    ebar = params.ebar
    pbar = params.pbar_abs
    eps = np.sqrt(p_perp**2 + p_z**2 + m * m)
    num = (p_perp * ebar) ** 2 + (m * (p_z - pbar)) ** 2
    den = eps * ebar + p_z * pbar + m * m
    return -(num / den) / params.sigma_abs**2


def _log_norm_constant(params: PacketParams) -> float:
    """Log of the p_perp- and exponent-independent prefactor of psi, with the
    -m^2/sigma^2 Gaussian scale and the 1/sqrt(K) normalization folded into
    the exponentially scaled Bessel value (the huge e^{-2m^2/sigma^2} cancels
    analytically and is never formed)."""
    aell = abs(params.ell)
    log_kve = specfun.log_bessel_k_scaled(aell + 1, params.bessel_argument)
    return (_LOG_PREFACTOR_BASE
            - (aell + 1) * math.log(params.sigma_abs)
            - 0.5 * specfun.log_gamma(aell + 1.0)
            - 0.5 * log_kve)


def log_psi_arrays(params: PacketParams, p_perp: np.ndarray,
                   p_z: np.ndarray) -> np.ndarray:
    """Vectorized log|psi(p)| over arrays of (p_perp, p_z)."""
    aell = abs(params.ell)
    p_perp = np.asarray(p_perp, dtype=float)
    with np.errstate(divide="ignore"):
        radial = aell * np.log(p_perp) if aell else np.zeros_like(p_perp)
    return (_log_norm_constant(params) + radial
            + _invariant_exponent(params, p_perp, np.asarray(p_z, dtype=float)))


def log_psi_momentum(params: PacketParams, q: MomentumPoint) -> LogComplex:
    """The momentum-space wave function as (log-magnitude, phase)."""
    log_abs = float(log_psi_arrays(params, np.array([q.p_perp]),
                                   np.array([q.p_z]))[0])
    return LogComplex(log_abs, params.ell * q.phi_p)


def measure_log_weight_arrays(params: PacketParams, p_perp: np.ndarray,
                              p_z: np.ndarray) -> np.ndarray:
    """log of p_perp/(2 pi)^2 * |psi|^2/(2 eps), vectorized.

    The cylindrical Jacobian and the 2 pi azimuthal integral are included, so
    integrating exp(weight) over (p_perp, p_z) gives exactly 1.
    """
    p_perp = np.asarray(p_perp, dtype=float)
    p_z = np.asarray(p_z, dtype=float)
    eps = np.sqrt(p_perp**2 + p_z**2 + params.m**2)
    with np.errstate(divide="ignore"):
        log_jac = np.log(p_perp)
    return (log_jac - 2.0 * math.log(2.0 * math.pi)
            + 2.0 * log_psi_arrays(params, p_perp, p_z)
            - np.log(2.0 * eps))


def measure_log_weight(params: PacketParams, q: MomentumPoint) -> float:
    return float(measure_log_weight_arrays(params, np.array([q.p_perp]),
                                           np.array([q.p_z]))[0])


def default_spec(params: PacketParams, rel_tol: float = 1e-9,
                 max_subdivisions: int = 40000) -> QuadratureSpec:
    """Integration window adapted to the packet.

    The longitudinal window starts at pbar +- 10 sigma ebar/m (the measure
    is ebar/m times wider along z than transversally); the transverse window
    is centered on the weight's peak at sigma sqrt|ell|, clipped at zero.
    Relativistically the exponent decays only linearly far from the peak, so
    each edge is then pushed out until |psi| itself (not just |psi|^2) is
    below exp(-60) there; this keeps single-psi integrals (Fourier
    transforms) truncation-free as well.
    """
    s = params.sigma_abs
    pb = params.pbar_abs
    half_z = 10.0 * s * params.ebar / params.m
    peak = s * math.sqrt(abs(params.ell))
    lo = max(0.0, peak - 10.0 * s)
    hi = peak + 10.0 * s

    def edge_exponent(p_perp, p_z):
        return float(_invariant_exponent(params, p_perp, p_z))

    while edge_exponent(peak, pb + half_z) > -60.0 \
            or edge_exponent(peak, pb - half_z) > -60.0:
        half_z *= 1.5
    while edge_exponent(hi, pb) > -60.0:
        hi += 10.0 * s
    if lo > 0.0:
        while lo > 0.0 and edge_exponent(lo, pb) > -60.0:
            lo = max(0.0, lo - 10.0 * s)
    return QuadratureSpec(rel_tol=rel_tol, max_subdivisions=max_subdivisions,
                          domain=((lo, hi), (pb - half_z, pb + half_z)))


def average(params: PacketParams, f, spec: QuadratureSpec = None,
            azimuthal: bool = False):
    """<f> over the normalized packet measure.

    f is a vectorized callable f(p_perp, p_z) -> array (azimuthally symmetric
    observables), or f(p_perp, phi_p, p_z) with azimuthal=True, in which case
    the phi average is taken by a fixed-order periodic trapezoid first.
    """
    if spec is None:
        spec = default_spec(params)

    # Absolute-tolerance floor at the scale of <1> in mantissa units, so that
    # averages that vanish identically (odd in phi_p) still terminate: the
    # measure integrates to exactly 1, whose mantissa is exp(-shift).
    (p_lo, p_hi), (z_lo, z_hi) = spec.domain
    gx, gz = np.meshgrid(np.linspace(p_lo, p_hi, 65),
                         np.linspace(z_lo, z_hi, 65), indexing="ij")
    shift_est = float(np.max(measure_log_weight_arrays(params, gx.ravel(),
                                                       gz.ravel())))
    floor = 1e-12 * math.exp(-min(shift_est, 700.0))
    spec = replace(spec, abs_tol=max(spec.abs_tol, floor))

    if azimuthal:
        phi = np.linspace(0.0, 2.0 * math.pi, _N_PHI, endpoint=False)

        def integrand(p_perp, p_z):
            vals = np.mean(
                [f(p_perp, np.full_like(p_perp, ph), p_z) for ph in phi],
                axis=0)
            return measure_log_weight_arrays(params, p_perp, p_z), vals
    else:
        def integrand(p_perp, p_z):
            return (measure_log_weight_arrays(params, p_perp, p_z),
                    f(p_perp, p_z))

    return integrate_2d(integrand, spec).value


def phase_winding(params: PacketParams, circuit_radius: float,
                  p_z: float, samples: int = 256) -> int:
    """Phase accumulated by psi around a p_perp-circle, in units of 2 pi."""
    if circuit_radius <= 0.0:
        raise ValueError("circuit_radius must be positive")
    phi = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    phases = np.array([
        log_psi_momentum(params,
                         MomentumPoint(circuit_radius, float(ph), p_z)).phase
        for ph in phi])
    # principal-valued steps around the closed circuit; requires
    # |ell| * 2 pi / samples < pi, i.e. samples > 2 |ell|
    diffs = np.diff(np.append(phases, phases[0]))
    diffs = (diffs + math.pi) % (2.0 * math.pi) - math.pi
    return int(round(float(np.sum(diffs)) / (2.0 * math.pi)))


def overlap(a: PacketParams, b: PacketParams,
            spec: QuadratureSpec = None) -> complex:
    """<l'|l> for packets sharing (sigma, pbar, m): delta_{l,l'}.

    The azimuthal integral of exp(i (l - l') phi) vanishes identically for
    l != l'; the equal-OAM case verifies the radial normalization by
    quadrature.
    """
    if (a.sigma, a.pbar_z, a.m) != (b.sigma, b.pbar_z, b.m):
        raise ParameterMismatchError(
            "overlap requires identical (sigma, pbar_z, m)")
    if a.ell != b.ell:
        return 0.0 + 0.0j
    if spec is None:
        spec = default_spec(a)
    value = average(a, lambda p_perp, p_z: np.ones_like(p_perp), spec)
    return complex(value)
