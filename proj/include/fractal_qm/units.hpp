#pragma once

#include <numbers>

#include "fractal_qm/error.hpp"

namespace fractal_qm {

inline constexpr double kEvPerHartree = 27.211386245988;

/// Physical constants in one unit system. Coulomb couplings use
/// e^2 / (4 pi epsilon0), so atomic units store epsilon0 = 1 / (4 pi).
struct PhysicalConstants {
    double hbar = 1.0;
    double electron_mass = 1.0;
    double charge = 1.0;
    double vacuum_permittivity = 1.0 / (4.0 * std::numbers::pi);
    double bohr_radius = 1.0;
    /// Size of one energy unit of this system, in eV.
    double ev_per_energy_unit = kEvPerHartree;

    [[nodiscard]] static PhysicalConstants atomic() { return {}; }

    /// CODATA 2018, SI units; energies come out in joules.
    [[nodiscard]] static PhysicalConstants si() {
        return {1.054571817e-34, 9.1093837015e-31, 1.602176634e-19, 8.8541878128e-12, 5.29177210903e-11,
                1.0 / 1.602176634e-19};
    }

    [[nodiscard]] double coulomb_coupling() const {
        return charge * charge / (4.0 * std::numbers::pi * vacuum_permittivity);
    }

    /// Hartree energy m (e^2/4 pi eps0)^2 / hbar^2 in this system's unit.
    [[nodiscard]] double hartree() const {
        const double k = coulomb_coupling();
        return electron_mass * k * k / (hbar * hbar);
    }

    void validate() const {
        detail::require(hbar > 0.0 && electron_mass > 0.0 && charge > 0.0 && vacuum_permittivity > 0.0 &&
                            bohr_radius > 0.0 && ev_per_energy_unit > 0.0,
                        "PhysicalConstants: all constants must be positive");
    }
};

/// Space (alpha) and time (beta) staircase exponents.
struct FractalDims {
    double alpha = 1.0;
    double beta = 1.0;

    void validate() const {
        detail::require(alpha > 0.0 && alpha <= 1.0, "FractalDims: alpha must lie in (0, 1]");
        detail::require(beta > 0.0 && beta <= 1.0, "FractalDims: beta must lie in (0, 1]");
    }
};

}  // namespace fractal_qm
