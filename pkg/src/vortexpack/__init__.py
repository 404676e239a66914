"""Relativistic vortex wave packets with orbital angular momentum.

A numpy/scipy library for the invariant Gaussian vortex packet: log-domain
special functions at extreme arguments, adaptive log-aware quadrature,
momentum- and position-space fields, exact/expansion/quadrature observable
triplets, and the Dirac-layer moments (magnetic moment, spin-orbit
coupling, electric dipole).
"""

from .errors import (
    BranchCutError,
    ConvergenceError,
    DomainError,
    ParameterMismatchError,
    QuadratureBudgetError,
    VortexpackError,
)
from .fermion import (
    HELICITY_DOWN,
    HELICITY_UP,
    DipoleVelocity,
    Helicity,
    MagneticMoment,
    SpinOrbitDelta,
    dipole_and_velocity,
    magnetic_moment,
    make_bispinor,
    make_spinor,
    spin_orbit_delta,
    spinor_identity_check,
    total_jz,
)
from .field import (
    SpacetimePoint,
    Varsigma,
    beam_width,
    comoving_envelope,
    decay_slope,
    fourier_oracle,
    kg_residual,
    psi_exact,
    psi_paraxial,
    t_over_diffraction_time,
    varsigma,
)
from .kinematics import (
    ELECTRON_MASS_KEV,
    LAMBDA_C_NM,
    Boost,
    FourVector,
    boost_z,
    minkowski_dot,
    minkowski_square,
    on_shell,
    pbar_from_kinetic_kev,
    sigma_ratio_from_waist_nm,
)
from .logdomain import LogComplex, LogReal
from .observables import (
    MassExcess,
    ObservableReport,
    ParaxialityWarning,
    pperp_scan,
    pperp_scan_slope,
    invariant_mass,
    mass_excess,
    mean_four_momentum_exact,
    mean_four_momentum_expansion,
    mean_four_momentum_quadrature,
    mean_pperp,
    paraxiality,
)
from .packet import (
    MomentumPoint,
    PacketParams,
    average,
    default_spec,
    log_psi_momentum,
    measure_log_weight,
    overlap,
    phase_winding,
)
from .quadrature import (
    QuadratureSpec,
    QuadResult,
    integrate_1d,
    integrate_2d,
    tanh_sinh_semi_infinite,
)
from .specfun import (
    bessel_j,
    bessel_k_complex,
    bessel_k_half_step_ratio,
    bessel_k_ratio,
    log_bessel_k,
    log_bessel_k_scaled,
    log_gamma,
)

__version__ = "0.1.0"
