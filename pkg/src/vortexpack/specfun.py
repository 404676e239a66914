"""Log-domain special functions.

Modified Bessel K of real order at extreme order/argument combinations
(order up to 5000, argument up to 1e9), K of complex argument, Bessel J of
integer order, and log-gamma.  K is evaluated by regime dispatch:

* half-integer order: finite closed-form sum (exact up to rounding),
* argument >> order^2: large-argument asymptotic series,
* order > 20: uniform large-order (Debye) expansion,
* small argument: Temme power series reduced to |mu| <= 1/2,
* otherwise: double-exponential quadrature of the integral representation
  int_0^inf exp(-z cosh t) cosh(nu t) dt, accumulated in the log domain.

All K results are produced internally as ln(e^z K_nu(z)) so that ratios of
nearby orders at the same argument cancel the e^{-z} factor exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import special as _sp

from .errors import ConvergenceError, DomainError
from .logdomain import LogComplex, LogReal

__all__ = [
    "log_bessel_k",
    "log_bessel_k_scaled",
    "bessel_k_ratio",
    "bessel_k_half_step_ratio",
    "bessel_k_complex",
    "bessel_j",
    "log_gamma",
    "NU_MAX",
    "Z_MAX",
]

NU_MAX = 5000.0
Z_MAX = 1.0e9

# Dispatch thresholds.  Each boundary is covered by the cross-regime
# recurrence test in the suite.
_Z_SERIES_MAX = 2.0
_Z_ASYMP_FACTOR = 30.0
_NU_DEBYE_MIN = 20.0

_EULER_GAMMA = 0.5772156649015328606
# gamma1(mu) = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu) = -(a1 + a3 mu^2 + ...)
# with a_k the Taylor coefficients of 1/Gamma(1+x); a3 below.
_A3 = (_sp.zeta(3) / 3.0 - _EULER_GAMMA * math.pi**2 / 12.0
       + _EULER_GAMMA**3 / 6.0)


def _check_real_domain(nu: float, z: float) -> None:
    if not (0.0 <= nu <= NU_MAX):
        raise DomainError(f"order nu={nu} outside supported range [0, {NU_MAX}]")
    if not (0.0 < z <= Z_MAX):
        raise DomainError(f"argument z={z} outside supported range (0, {Z_MAX}]")


def _is_half_integer(nu: float) -> bool:
    return float(2.0 * nu).is_integer() and not float(nu).is_integer()


# ---------------------------------------------------------------------------
# half-integer closed form

def _log_kve_half_integer(n: int, z: float) -> float:
    """ln(e^z K_{n+1/2}(z)) via the terminating sum, log-sum-exp over k."""
    if n == 0:
        return 0.5 * math.log(math.pi / (2.0 * z))
    k = np.arange(n + 1, dtype=float)
    log_terms = (_sp.gammaln(n + 1 + k) - _sp.gammaln(k + 1)
                 - _sp.gammaln(n + 1 - k) - k * math.log(2.0 * z))
    m = float(np.max(log_terms))
    s = float(np.sum(np.exp(log_terms - m)))
    return 0.5 * math.log(math.pi / (2.0 * z)) + m + math.log(s)


# ---------------------------------------------------------------------------
# large-argument asymptotic series (z >> nu^2)

def _log_kve_large_arg(nu: float, z: float) -> float:
    mu4 = 4.0 * nu * nu
    total = 1.0
    term = 1.0
    prev = math.inf
    for k in range(1, 60):
        term *= (mu4 - (2 * k - 1) ** 2) / (8.0 * z * k)
        total += term
        a = abs(term)
        if a < 1e-17 * abs(total):
            return 0.5 * math.log(math.pi / (2.0 * z)) + math.log(total)
        if a > prev:
            break
        prev = a
    raise ConvergenceError(
        f"large-argument K series did not converge for nu={nu}, z={z}")


# ---------------------------------------------------------------------------
# uniform large-order (Debye) expansion

@lru_cache(maxsize=None)
def _debye_u_coeffs(kmax: int):
    """Polynomials u_k(p) of the Debye expansion, exact rational coefficients.

    u_{k+1} = (p^2 (1 - p^2)/2) u_k' + (1/8) int_0^p (1 - 5 t^2) u_k dt.
    Returned as float coefficient arrays, index = power of p.
    """
    polys = [[Fraction(1)]]
    for _ in range(kmax):
        u = polys[-1]
        nxt: dict[int, Fraction] = {}
        # (p^2 - p^4)/2 * u'
        for i, c in enumerate(u):
            if i == 0 or c == 0:
                continue
            d = c * i  # coefficient of p^{i-1} in u'
            nxt[i + 1] = nxt.get(i + 1, Fraction(0)) + d / 2
            nxt[i + 3] = nxt.get(i + 3, Fraction(0)) - d / 2
        # (1/8) int_0^p (1 - 5 t^2) u dt
        for i, c in enumerate(u):
            if c == 0:
                continue
            nxt[i + 1] = nxt.get(i + 1, Fraction(0)) + c / (8 * (i + 1))
            nxt[i + 3] = nxt.get(i + 3, Fraction(0)) - 5 * c / (8 * (i + 3))
        deg = max(nxt)
        polys.append([nxt.get(i, Fraction(0)) for i in range(deg + 1)])
    return tuple(np.array([float(c) for c in poly]) for poly in polys)


_DEBYE_KMAX = 14


def _log_kve_debye(nu: float, z: float) -> float:
    """ln(e^z K_nu(z)) via the uniform large-order expansion."""
    w = math.hypot(nu, z)
    p = nu / w
    # nu*eta - z, with eta = sqrt(1+(z/nu)^2) + ln((z/nu)/(1+sqrt(1+(z/nu)^2)))
    # assembled cancellation-free: sqrt(nu^2+z^2) - z = nu^2/(w+z).
    nu_eta_minus_z = nu * nu / (w + z) + nu * math.log(z / (nu + w))
    polys = _debye_u_coeffs(_DEBYE_KMAX)
    total = 0.0
    sign = 1.0
    inv = 1.0
    for k, coeffs in enumerate(polys):
        term = sign * inv * float(np.polyval(coeffs[::-1], p))
        total += term
        if k > 0 and abs(term) < 1e-17 * abs(total):
            break
        sign = -sign
        inv /= nu
    else:
        if abs(term) > 1e-12 * abs(total):
            raise ConvergenceError(
                f"Debye expansion did not converge for nu={nu}, z={z}")
    return (0.5 * math.log(math.pi / (2.0 * w)) - nu_eta_minus_z
            + math.log(total))


# ---------------------------------------------------------------------------
# Temme power series, |mu| <= 1/2, z < 2

def _temme_gammas(mu: float):
    if abs(mu) < 1e-4:
        # even Taylor expansion of (1/G(1-mu) - 1/G(1+mu))/(2 mu)
        gam1 = -(_EULER_GAMMA + _A3 * mu * mu)
    else:
        gam1 = (_sp.rgamma(1.0 - mu) - _sp.rgamma(1.0 + mu)) / (2.0 * mu)
    gam2 = (_sp.rgamma(1.0 - mu) + _sp.rgamma(1.0 + mu)) / 2.0
    gampl = _sp.rgamma(1.0 + mu)
    gammi = _sp.rgamma(1.0 - mu)
    return gam1, gam2, float(gampl), float(gammi)


def _temme_series_k(mu: float, z: float):
    """(K_mu(z), K_{mu+1}(z)) for |mu| <= 1/2, 0 < z < 2 (linear domain)."""
    x2 = 0.5 * z
    mu2 = mu * mu
    pimu = math.pi * mu
    fact = 1.0 if abs(pimu) < 1e-15 else pimu / math.sin(pimu)
    d = -math.log(x2)
    e = mu * d
    fact2 = 1.0 if abs(e) < 1e-15 else math.sinh(e) / e
    gam1, gam2, gampl, gammi = _temme_gammas(mu)
    ff = fact * (gam1 * math.cosh(e) + gam2 * fact2 * d)
    total = ff
    ee = math.exp(e)
    p = 0.5 * ee / gampl
    q = 0.5 / (ee * gammi)
    c = 1.0
    d2 = x2 * x2
    total1 = p
    for i in range(1, 500):
        ff = (i * ff + p + q) / (i * i - mu2)
        c *= d2 / i
        p /= (i - mu)
        q /= (i + mu)
        delta = c * ff
        total += delta
        total1 += c * (p - i * ff)
        if abs(delta) < abs(total) * 1e-17:
            return total, total1 * 2.0 / z
    raise ConvergenceError(f"Temme K series did not converge for mu={mu}, z={z}")


# ---------------------------------------------------------------------------
# Steed continued fraction (CF2), |mu| <= 1/2, z >= 2

def _cf2_k(mu: float, z: float):
    """(ln(e^z K_mu(z)), K_{mu+1}/K_mu) for |mu| <= 1/2, z >= 2."""
    mu2 = mu * mu
    b = 2.0 * (1.0 + z)
    d = 1.0 / b
    h = delh = d
    q1, q2 = 0.0, 1.0
    a1 = 0.25 - mu2
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 20000):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < 1e-16:
            break
    else:
        raise ConvergenceError(f"CF2 for K did not converge at mu={mu}, z={z}")
    h = a1 * h
    log_kve_mu = 0.5 * math.log(math.pi / (2.0 * z)) - math.log(s)
    ratio = (mu + z + 0.5 - h) / z
    return log_kve_mu, ratio


# ---------------------------------------------------------------------------
# integral representation, double-exponentially decaying trapezoid

def _log_cosh(x: np.ndarray) -> np.ndarray:
    ax = np.abs(x)
    return ax - math.log(2.0) + np.log1p(np.exp(-2.0 * ax))


def _log_kve_integral(nu: float, z: complex, rel_tol: float = 1e-13,
                      max_nodes: int = 4_000_000):
    """ln(e^z K_nu(z)) for Re z > 0, via the cosh integral representation.

    The integrand exp(-z(cosh t - 1)) cosh(nu t) decays double-exponentially
    in t, so the plain trapezoidal rule on a uniform grid converges
    geometrically; the grid spacing is halved until two successive sums agree.
    Accumulation is done with a log-sum-exp shift.  Returns (log_abs, phase)
    of the scaled value e^z K_nu(z).
    """
    zr = float(np.real(z))
    zi = float(np.imag(z))
    if zr <= 0.0:
        raise DomainError("integral representation requires Re z > 0")

    def exponent(t: np.ndarray):
        # exponent of the scaled integrand e^{-z(cosh t - 1)} cosh(nu t),
        # magnitude and phase parts separately
        shc = 2.0 * np.sinh(0.5 * t) ** 2          # cosh t - 1, stable
        lc = _log_cosh(nu * t)
        mag = -zr * shc + lc
        phase = -zi * shc
        return mag, phase

    # locate the magnitude peak and the effective upper limit
    tpeak = math.asinh(nu / zr) if nu > 0 else 0.0
    t_hi = tpeak + 1.0
    mag0, _ = exponent(np.array([0.0, tpeak]))
    peak = float(np.max(mag0))
    while True:
        m, _ = exponent(np.array([t_hi]))
        if float(m[0]) < peak - 750.0:
            break
        t_hi *= 1.5
        if t_hi > 1e4:
            break

    n = 64
    prev = None
    while n <= max_nodes:
        t = np.linspace(0.0, t_hi, n + 1)
        h = t_hi / n
        mag, phase = exponent(t)
        m_shift = float(np.max(mag))
        f = np.exp(mag - m_shift) * np.exp(1j * phase)
        s = complex(h * (0.5 * f[0] + np.sum(f[1:])))
        if n >= 1024:
            # oscillatory cancellation below double precision cannot recover
            gross = h * float(np.sum(np.abs(f)))
            if abs(s) < 1e-13 * gross:
                raise ConvergenceError(
                    f"oscillation budget exceeded integrating K_nu (cancellation "
                    f"{abs(s) / gross:.1e}), nu={nu}, z={z}")
        if prev is not None:
            ps, pm = prev
            ref = ps * math.exp(pm - m_shift)  # old sum on the new shift
            if abs(s) > 0 and abs(s - ref) <= rel_tol * abs(s):
                break
        prev = (s, m_shift)
        n *= 2
    else:
        raise ConvergenceError(
            f"oscillation budget exceeded integrating K_nu, nu={nu}, z={z}")
    return m_shift + math.log(abs(s)), math.atan2(s.imag, s.real)


def _log_kve_quadrature_real(nu: float, z: float) -> float:
    log_abs, _ = _log_kve_integral(nu, complex(z, 0.0))
    return log_abs


# ---------------------------------------------------------------------------
# public API

def log_bessel_k_scaled(nu: float, z: float) -> float:
    """ln(e^z K_nu(z)) with regime dispatch; relative accuracy of K <= 1e-10.

    Sharing the exact e^{-z} factor lets ratios of nearby orders at equal
    argument be formed without any loss from the huge exponential.
    """
    nu = abs(nu)  # K is even in its order
    _check_real_domain(nu, z)
    if _is_half_integer(nu):
        return _log_kve_half_integer(int(nu - 0.5), z)
    if z > _Z_ASYMP_FACTOR * max(1.0, nu * nu):
        return _log_kve_large_arg(nu, z)
    if nu > _NU_DEBYE_MIN:
        return _log_kve_debye(nu, z)
    if z < _Z_SERIES_MAX:
        return _log_kve_series_recurrence(nu, z)
    return _log_kve_quadrature_real(nu, z)


def _log_kve_series_recurrence(nu: float, z: float) -> float:
    """Small-argument branch: Temme series at |mu| <= 1/2, log recurrence up."""
    n = int(math.floor(nu + 0.5))
    mu = nu - n  # in [-1/2, 1/2)
    kmu, kmu1 = _temme_series_k(mu, z)
    if n == 0:
        return math.log(kmu) + z
    log_k = math.log(kmu)
    ratio = kmu1 / kmu
    log_k += math.log(ratio)
    for j in range(1, n):
        ratio = 2.0 * (mu + j) / z + 1.0 / ratio
        log_k += math.log(ratio)
    return log_k + z


def log_bessel_k(nu: float, z: float) -> LogReal:
    """ln K_nu(z) as a LogReal (K is positive on the supported domain)."""
    return LogReal(log_bessel_k_scaled(nu, z) - z, 1)


def bessel_k_ratio(nu: float, z: float) -> float:
    """K_{nu+1}(z) / K_nu(z) to ~1e-12 relative.

    Seeded at the fractional part of nu by the Temme series (z < 2) or the
    Steed continued fraction (z >= 2), then carried up by the stable forward
    recurrence r_nu = 2 nu / z + 1/r_{nu-1}.  No exponentiated log
    differences are involved, so the accuracy is uniform in z.
    """
    _check_real_domain(nu, z)
    n = int(math.floor(nu))
    mu = nu - n
    if mu == 0.5:
        ratio = 1.0 + 1.0 / z  # K_{3/2}/K_{1/2} closed form
    elif z < _Z_SERIES_MAX:
        kmu, kmu1 = _temme_series_k(mu, z)
        ratio = kmu1 / kmu
    else:
        _, ratio = _cf2_k(mu, z)
    for j in range(1, n + 1):
        ratio = 2.0 * (mu + j) / z + 1.0 / ratio
    return ratio


def bessel_k_half_step_ratio(nu: float, z: float) -> float:
    """K_{nu+1/2}(z) / K_nu(z), formed from scaled logs (e^{-z} cancels)."""
    return math.exp(log_bessel_k_scaled(nu + 0.5, z)
                    - log_bessel_k_scaled(nu, z))


_COMPLEX_NU_MAX = 64.0
_COMPLEX_IM_FACTOR = 50.0


def bessel_k_complex(nu: float, z: complex, rel_tol: float = 1e-13) -> LogComplex:
    """K_nu(z) for complex z, via double-exponential quadrature.

    Documented convergence domain: nu <= 64, Re z >= max(1, nu/4),
    |Im z| <= 50 Re z.  Guaranteed relative accuracy 1e-8; in practice the
    quadrature is pushed to near machine precision, which the
    finite-difference Klein-Gordon checks rely on.
    """
    if not (0.0 <= nu <= _COMPLEX_NU_MAX):
        raise DomainError(f"complex-argument K supports 0 <= nu <= {_COMPLEX_NU_MAX}")
    z = complex(z)
    if z.real < max(1.0, nu / 4.0):
        raise DomainError(
            f"Re z = {z.real} below convergence threshold max(1, nu/4) for nu={nu}")
    if abs(z.imag) > _COMPLEX_IM_FACTOR * z.real:
        raise DomainError(
            f"|Im z| = {abs(z.imag)} exceeds {_COMPLEX_IM_FACTOR} * Re z")
    log_abs_scaled, phase_scaled = _log_kve_integral(nu, z, rel_tol=rel_tol)
    # the integral computed e^z K_nu(z); peel off both parts of e^z
    return LogComplex(log_abs_scaled - z.real, phase_scaled - z.imag)


_J_ELL_MAX = 64
_J_X_MAX = 1.0e4


def bessel_j(ell: int, x: float) -> float:
    """J_ell(x) for integer ell, |ell| <= 64, |x| <= 1e4."""
    if abs(ell) > _J_ELL_MAX:
        raise DomainError(f"|ell| must be <= {_J_ELL_MAX}")
    if abs(x) > _J_X_MAX:
        raise DomainError(f"|x| must be <= {_J_X_MAX}")
    if ell >= 0:
        return float(_sp.jv(ell, x))
    return float((-1) ** (-ell) * _sp.jv(-ell, x))


def log_gamma(x: float) -> float:
    """ln Gamma(x) for 0 < x <= 1e6."""
    if not (0.0 < x <= 1.0e6):
        raise DomainError(f"log_gamma requires 0 < x <= 1e6, got {x}")
    return float(_sp.gammaln(x))
