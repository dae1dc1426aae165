#pragma once

// Closed-form fractal hydrogen atom: radial and full wavefunctions, radial
// densities, energy levels and fractal-time evolution of superpositions.
//
// Every radial quantity depends on r only through the staircase S(r); with
// the power-law staircase S(r) = r^alpha these are the textbook hydrogen
// functions composed with r -> r^alpha.

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "fractal_qm/error.hpp"
#include "fractal_qm/fcalc.hpp"
#include "fractal_qm/measure.hpp"
#include "fractal_qm/specfun.hpp"
#include "fractal_qm/units.hpp"

namespace fractal_qm::hydrogen {

struct QuantumNumbers {
    int n = 1;
    int l = 0;
    int m = 0;

    void validate() const {
        detail::require(n >= 1, "QuantumNumbers: n must be >= 1");
        detail::require(l >= 0 && l <= n - 1, "QuantumNumbers: need 0 <= l <= n - 1");
        detail::require(m >= -l && m <= l, "QuantumNumbers: need |m| <= l");
    }
};

/// squared: |R|^2. paper_literal: the printed density, whose exponential
/// carries a single (not doubled) exponent.
enum class RadialMode { squared, paper_literal };

namespace detail {

inline void check_staircase(const FractalDims& dims, const Staircase& s) {
    dims.validate();
    if (s.is_power_law() && std::abs(s.alpha() - dims.alpha) > 1e-12)
        throw ParameterError("hydrogen: power-law staircase exponent differs from dims.alpha");
}

struct RadialParts {
    double prefactor;  // (2 / (n S(a0)))^(l+1)
    double decay;      // S(r) / (n S(a0))
    double laguerre;   // L_{n-l-1}^{2l+1}(2 S(r) / (n S(a0)))
};

inline RadialParts radial_parts(const QuantumNumbers& qn, double r, const PhysicalConstants& consts,
                                const Staircase& s) {
    qn.validate();
    consts.validate();
    fractal_qm::detail::require(r >= 0.0, "hydrogen: r must be non-negative");
    const double scale = qn.n * s(consts.bohr_radius);
    const double rho = s(r) / scale;
    return {std::pow(2.0 / scale, qn.l + 1), rho, assoc_laguerre(qn.n - qn.l - 1, 2 * qn.l + 1, 2.0 * rho)};
}

}  // namespace detail

using fractal_qm::detail::require;

[[nodiscard]] inline double radial_wavefunction(const QuantumNumbers& qn, const FractalDims& dims, double r,
                                                const PhysicalConstants& consts, double amplitude,
                                                const Staircase& s) {
    detail::check_staircase(dims, s);
    const auto p = detail::radial_parts(qn, r, consts, s);
    return amplitude * p.prefactor * std::exp(-p.decay) * p.laguerre;
}

[[nodiscard]] inline double radial_wavefunction(const QuantumNumbers& qn, const FractalDims& dims, double r,
                                                const PhysicalConstants& consts = {}, double amplitude = 1.0) {
    return radial_wavefunction(qn, dims, r, consts, amplitude, Staircase::power_law(dims.alpha));
}

[[nodiscard]] inline double radial_density(const QuantumNumbers& qn, const FractalDims& dims, double r,
                                           const PhysicalConstants& consts, double amplitude, RadialMode mode,
                                           const Staircase& s) {
    if (mode == RadialMode::squared) {
        const double radial = radial_wavefunction(qn, dims, r, consts, amplitude, s);
        return radial * radial;
    }
    detail::check_staircase(dims, s);
    const auto p = detail::radial_parts(qn, r, consts, s);
    return amplitude * amplitude * p.prefactor * p.prefactor * std::exp(-p.decay) * p.laguerre * p.laguerre;
}

[[nodiscard]] inline double radial_density(const QuantumNumbers& qn, const FractalDims& dims, double r,
                                           const PhysicalConstants& consts = {}, double amplitude = 1.0,
                                           RadialMode mode = RadialMode::squared) {
    return radial_density(qn, dims, r, consts, amplitude, mode, Staircase::power_law(dims.alpha));
}

/// The 1s orbital exactly as printed, with the power-law staircase:
/// (2/sqrt(4 pi)) a0^(-3 alpha / 2) exp(-r^alpha / a0^(3 alpha)).
[[nodiscard]] inline double orbital_1s(const FractalDims& dims, double r, const PhysicalConstants& consts = {}) {
    dims.validate();
    consts.validate();
    require(r >= 0.0, "orbital_1s: r must be non-negative");
    const double a0_cubed = std::pow(consts.bohr_radius, 3.0 * dims.alpha);
    return 2.0 / std::sqrt(4.0 * std::numbers::pi) * std::sqrt(1.0 / a0_cubed) *
           std::exp(-std::pow(r, dims.alpha) / a0_cubed);
}

[[nodiscard]] inline ComplexValue full_wavefunction(const QuantumNumbers& qn, const FractalDims& dims, double r,
                                                    double theta, double phi, const PhysicalConstants& consts,
                                                    double amplitude, const Staircase& s) {
    qn.validate();
    return radial_wavefunction(qn, dims, r, consts, amplitude, s) * spherical_harmonic(qn.l, qn.m, theta, phi);
}

[[nodiscard]] inline ComplexValue full_wavefunction(const QuantumNumbers& qn, const FractalDims& dims, double r,
                                                    double theta, double phi, const PhysicalConstants& consts = {},
                                                    double amplitude = 1.0) {
    return full_wavefunction(qn, dims, r, theta, phi, consts, amplitude, Staircase::power_law(dims.alpha));
}

/// Bohr orbit radius n^2 hbar^2 / (m e^2 / 4 pi eps0).
[[nodiscard]] inline double bohr_radius_level(int n, const PhysicalConstants& consts = {}) {
    require(n >= 1, "bohr_radius_level: n must be >= 1");
    consts.validate();
    return n * n * consts.hbar * consts.hbar / (consts.electron_mass * consts.coulomb_coupling());
}

/// E_n = -(Hartree / 2) / S(r_n / a0). The orbit radius enters the staircase
/// in Bohr radii, so the power-law case reduces to -(Hartree / 2) n^(-2 alpha).
[[nodiscard]] inline double energy_level(int n, const FractalDims& dims, const PhysicalConstants& consts,
                                         const Staircase& s) {
    detail::check_staircase(dims, s);
    const double orbit = bohr_radius_level(n, consts) / consts.bohr_radius;
    return -0.5 * consts.hartree() / s(orbit);
}

[[nodiscard]] inline double energy_level(int n, const FractalDims& dims, const PhysicalConstants& consts = {}) {
    return energy_level(n, dims, consts, Staircase::power_law(dims.alpha));
}

[[nodiscard]] inline double to_ev(double energy, const PhysicalConstants& consts = {}) {
    return energy * consts.ev_per_energy_unit;
}

struct Term {
    ComplexValue coefficient;
    QuantumNumbers qn;
};

struct Point {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// Sum of c_n psi_n(point) exp(-i E_n S_time(t) / hbar).
[[nodiscard]] inline ComplexValue evolve_superposition(std::span<const Term> terms, const FractalDims& dims,
                                                       const Point& point, double t,
                                                       const PhysicalConstants& consts, const Staircase& s_space,
                                                       const Staircase& s_time) {
    require(!terms.empty(), "evolve_superposition: at least one term is required");
    require(t >= 0.0, "evolve_superposition: t must be non-negative");
    const double clock = s_time(t);
    ComplexValue total{0.0, 0.0};
    for (const auto& term : terms) {
        const ComplexValue psi =
            full_wavefunction(term.qn, dims, point.r, point.theta, point.phi, consts, 1.0, s_space);
        const double energy = energy_level(term.qn.n, dims, consts, s_space);
        total += term.coefficient * psi * std::polar(1.0, -energy * clock / consts.hbar);
    }
    return total;
}

[[nodiscard]] inline ComplexValue evolve_superposition(std::span<const Term> terms, const FractalDims& dims,
                                                       const Point& point, double t,
                                                       const PhysicalConstants& consts = {}) {
    return evolve_superposition(terms, dims, point, t, consts, Staircase::power_law(dims.alpha),
                                Staircase::power_law(dims.beta));
}

/// Optional normalization: amplitude making the F^alpha-integral of R^2 over
/// [0, r_max] equal one.
[[nodiscard]] inline double radial_normalization(const QuantumNumbers& qn, const FractalDims& dims, double r_max,
                                                 const PhysicalConstants& consts, const Staircase& s,
                                                 int cells = 4096) {
    require(r_max > 0.0, "radial_normalization: r_max must be positive");
    const auto density = [&](double r) { return radial_density(qn, dims, r, consts, 1.0, RadialMode::squared, s); };
    const double mass = falpha_integral(density, s, 0.0, r_max, FalphaConfig{1e-4, cells});
    if (!(mass > 0.0)) throw ComputationError("radial_normalization: density integrates to zero");
    return 1.0 / std::sqrt(mass);
}

}  // namespace fractal_qm::hydrogen
