"""Dirac layer: magnetic moment, spin-orbit correction, dipole drift.

For a vortex electron the orbital magnetic moment is l/(2 ebar) at leading
order, the spin moment picks up an l-dependent relativistic bracket, and
the total moment deviates from the naive (l + 2 lambda) g-factor form by a
spin-orbit term Delta.  The electric dipole vanishes at t = 0 and drifts
with the mean velocity.
"""

from vortexpack import (HELICITY_UP, PacketParams, dipole_and_velocity,
                        magnetic_moment, spin_orbit_delta, total_jz)


def main():
    params = PacketParams(3, 0.1, 1.0)
    lam = HELICITY_UP
    print(f"ell = {params.ell}, sigma/m = {params.sigma}, "
          f"pbar/m = {params.pbar_z}, helicity = {lam.lam:+.1f}")
    print(f"total j_z = {total_jz(params.ell, lam)}\n")

    quad, expn = magnetic_moment(params, lam)
    print("magnetic moment (z component, units mu_B with g = 2):")
    print(f"  orbital: quadrature {quad.orbital[2]:+.10f}   "
          f"expansion {expn.orbital[2]:+.10f}")
    print(f"  spin:    quadrature {quad.spin[2]:+.10f}   "
          f"expansion {expn.spin[2]:+.10f}")
    print(f"  total:   {quad.total[2]:+.10f}")
    print(f"  leading orbital l/(2 ebar) = "
          f"{params.ell / (2.0 * params.ebar):+.10f}")

    d = spin_orbit_delta(params)
    print(f"\nspin-orbit correction Delta: exact {d.exact:.6e}, "
          f"paraxial l sigma^2 (r - q) form {d.paraxial:.6e}")

    for t in (0.0, 2.0):
        dv = dipole_and_velocity(params, lam, t)
        print(f"\nt = {t}: dipole = ({dv.dipole[0]:+.3e}, "
              f"{dv.dipole[1]:+.3e}, {dv.dipole[2]:+.3e})")
        print(f"         mean velocity z = {dv.mean_velocity[2]:.10f} "
              f"(ubar = {params.ubar:.10f})")


if __name__ == "__main__":
    main()
