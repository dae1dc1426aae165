#pragma once

// Closed-form fractal harmonic oscillator.
//
// psi_n(x) = (2^n n!)^(-1/2) (m w / pi hbar)^(1/4) exp(-m w S(x)^2 / 2 hbar) H_n(sqrt(m w / hbar) S(x)),
// where w is the fractal angular frequency, treated as one opaque parameter.

#include <cmath>
#include <numbers>
#include <span>

#include "fractal_qm/error.hpp"
#include "fractal_qm/fcalc.hpp"
#include "fractal_qm/measure.hpp"
#include "fractal_qm/specfun.hpp"
#include "fractal_qm/units.hpp"

namespace fractal_qm::oscillator {

using fractal_qm::detail::require;

struct OscillatorParams {
    double mass = 1.0;
    double omega_alpha = 1.0;
    double hbar = 1.0;

    void validate() const {
        require(mass > 0.0 && omega_alpha > 0.0 && hbar > 0.0, "OscillatorParams: parameters must be positive");
    }
};

inline constexpr int kMaxLevel = 150;

namespace detail {

inline void check(int n, const FractalDims& dims, const OscillatorParams& p, const Staircase& s) {
    require(n >= 0, "oscillator: n must be non-negative");
    require(n <= kMaxLevel, "oscillator: n above 150 overflows the normalization");
    dims.validate();
    p.validate();
    if (s.is_power_law() && std::abs(s.alpha() - dims.alpha) > 1e-12)
        throw ParameterError("oscillator: power-law staircase exponent differs from dims.alpha");
}

// Textbook eigenfunction at the staircase value u = S(x).
inline double standard_eigenfunction(int n, double u, const OscillatorParams& p) {
    const double k = p.mass * p.omega_alpha / p.hbar;
    const double norm = std::exp(-0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0)));
    return norm * std::pow(k / std::numbers::pi, 0.25) * std::exp(-0.5 * k * u * u) * hermite(n, std::sqrt(k) * u);
}

}  // namespace detail

[[nodiscard]] inline double eigenfunction(int n, const FractalDims& dims, double x, const OscillatorParams& p,
                                          const Staircase& s) {
    detail::check(n, dims, p, s);
    return detail::standard_eigenfunction(n, s(x), p);
}

[[nodiscard]] inline double eigenfunction(int n, const FractalDims& dims, double x, const OscillatorParams& p = {}) {
    return eigenfunction(n, dims, x, p, Staircase::power_law(dims.alpha));
}

[[nodiscard]] inline double density(int n, const FractalDims& dims, double x, const OscillatorParams& p,
                                    const Staircase& s) {
    const double psi = eigenfunction(n, dims, x, p, s);
    return psi * psi;
}

[[nodiscard]] inline double density(int n, const FractalDims& dims, double x, const OscillatorParams& p = {}) {
    return density(n, dims, x, p, Staircase::power_law(dims.alpha));
}

/// E_n = hbar w (n + 1/2).
[[nodiscard]] inline double energy(int n, const OscillatorParams& p = {}) {
    require(n >= 0, "oscillator: n must be non-negative");
    p.validate();
    return p.hbar * p.omega_alpha * (n + 0.5);
}

/// The position-dependent form hbar sqrt(S(x) / m) (n + 1/2).
[[nodiscard]] inline double energy_position_form(int n, const FractalDims& dims, double x, const OscillatorParams& p,
                                                 const Staircase& s) {
    detail::check(n, dims, p, s);
    require(x >= 0.0, "energy_position_form: x must be non-negative");
    return p.hbar * std::sqrt(s(x) / p.mass) * (n + 0.5);
}

[[nodiscard]] inline double energy_position_form(int n, const FractalDims& dims, double x,
                                                 const OscillatorParams& p = {}) {
    return energy_position_form(n, dims, x, p, Staircase::power_law(dims.alpha));
}

struct Term {
    ComplexValue coefficient;
    int n = 0;
};

[[nodiscard]] inline ComplexValue evolve(std::span<const Term> terms, const FractalDims& dims, double x, double t,
                                         const OscillatorParams& p, const Staircase& s_space,
                                         const Staircase& s_time) {
    require(!terms.empty(), "oscillator::evolve: at least one term is required");
    require(t >= 0.0, "oscillator::evolve: t must be non-negative");
    const double clock = s_time(t);
    ComplexValue total{0.0, 0.0};
    for (const auto& term : terms) {
        const double psi = eigenfunction(term.n, dims, x, p, s_space);
        total += term.coefficient * psi * std::polar(1.0, -energy(term.n, p) * clock / p.hbar);
    }
    return total;
}

[[nodiscard]] inline ComplexValue evolve(std::span<const Term> terms, const FractalDims& dims, double x, double t,
                                         const OscillatorParams& p = {}) {
    return evolve(terms, dims, x, t, p, Staircase::power_law(dims.alpha), Staircase::power_law(dims.beta));
}

/// |H psi - E psi| at x, with the second-order operator taken as the
/// F^alpha-derivative applied twice.
[[nodiscard]] inline double tise_residual(int n, const FractalDims& dims, double x, const OscillatorParams& p,
                                          const Staircase& s, const FalphaConfig& cfg) {
    detail::check(n, dims, p, s);
    const auto psi = [&](double y) { return detail::standard_eigenfunction(n, s(y), p); };
    const auto first = [&](double y) { return falpha_derivative(psi, s, y, cfg); };
    const double second = falpha_derivative(first, s, x, cfg);
    const double u = s(x);
    const double value = psi(x);
    const double kinetic = -(p.hbar * p.hbar) / (2.0 * p.mass) * second;
    const double potential = 0.5 * p.mass * p.omega_alpha * p.omega_alpha * u * u * value;
    return std::abs(kinetic + potential - energy(n, p) * value);
}

[[nodiscard]] inline double tise_residual(int n, const FractalDims& dims, double x, const OscillatorParams& p = {},
                                          const FalphaConfig& cfg = {1e-3, 1}) {
    return tise_residual(n, dims, x, p, Staircase::power_law(dims.alpha), cfg);
}

}  // namespace fractal_qm::oscillator
