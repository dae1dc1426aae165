#pragma once

// F^alpha-derivative and F^alpha-integral with respect to a staircase.
//
// Both discretize in staircase value rather than in x: difference quotients
// use points y+- with |S(y+-) - S(x)| = step, and integration cells are
// uniform in S. Plateaus of S therefore cost nothing.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>

#include "fractal_qm/error.hpp"
#include "fractal_qm/measure.hpp"

namespace fractal_qm {

struct FalphaConfig {
    double step = 1e-4;
    int integration_cells = 4096;

    void validate() const {
        if (!(step > 0.0) || !std::isfinite(step)) throw ParameterError("FalphaConfig: step must be positive");
        if (integration_cells < 1) throw ParameterError("FalphaConfig: integration_cells must be >= 1");
    }
};

template <class F>
concept RealFunction = std::regular_invocable<const F&, double> &&
                       std::convertible_to<std::invoke_result_t<const F&, double>, double>;

namespace detail {

inline constexpr double kFlatRatio = 1e-12;

// Smallest x-offset used to probe for local flatness.
inline double probe_offset(double x) { return 1e-9 * std::max(1.0, std::abs(x)); }

// Point y on the side `direction` (+1 or -1) of x with |S(y) - S(x)| as close
// to `target` as the staircase allows in a bounded search.
inline double staircase_step_point(const Staircase& s, double x, double sx, double target, int direction) {
    if (const auto* p = std::get_if<PowerLawStaircase>(&s.backend())) {
        const double u = sx + direction * target;
        return std::copysign(std::pow(std::abs(u), 1.0 / p->alpha), u);
    }
    const double d = static_cast<double>(direction);
    double inner = 0.0;
    double outer = probe_offset(x);
    int expansions = 0;
    while (std::abs(s(x + d * outer) - sx) < target) {
        inner = outer;
        outer *= 2.0;
        if (++expansions > 80) return x + d * outer;
    }
    for (int iter = 0; iter < 200 && outer - inner > 1e-15 * std::max(1.0, std::abs(x)); ++iter) {
        const double mid = 0.5 * (inner + outer);
        (std::abs(s(x + d * mid) - sx) < target ? inner : outer) = mid;
    }
    return x + d * outer;
}

}  // namespace detail

/// Smallest-magnitude x with S(x) = u inside [lo, hi], for S(lo) <= u <= S(hi).
[[nodiscard]] inline double staircase_inverse(const Staircase& s, double u, double lo, double hi) {
    if (const auto* p = std::get_if<PowerLawStaircase>(&s.backend())) {
        const double x = std::copysign(std::pow(std::abs(u), 1.0 / p->alpha), u);
        return std::clamp(x, lo, hi);
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++iter) {
        const double mid = 0.5 * (lo + hi);
        (s(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Symmetric F^alpha difference quotient of f at x.
///
/// Throws DerivativeUndefined when S is flat around x, which is where the
/// exact derivative falls on its zero branch.
template <RealFunction F>
[[nodiscard]] double falpha_derivative(const F& f, const Staircase& s, double x, const FalphaConfig& cfg = {}) {
    cfg.validate();
    const double sx = s(x);
    if (!s.is_power_law()) {
        const double h = detail::probe_offset(x);
        if (s(x + h) - s(x - h) < detail::kFlatRatio * cfg.step)
            throw DerivativeUndefined("falpha_derivative: staircase is locally flat");
    }
    const double plus = detail::staircase_step_point(s, x, sx, cfg.step, +1);
    const double minus = detail::staircase_step_point(s, x, sx, cfg.step, -1);
    const double denom = s(plus) - s(minus);
    if (!(denom >= detail::kFlatRatio * cfg.step))
        throw DerivativeUndefined("falpha_derivative: staircase is locally flat");
    return (static_cast<double>(f(plus)) - static_cast<double>(f(minus))) / denom;
}

/// Riemann-Stieltjes sum of f against S over [a, b], cells uniform in S,
/// each evaluated at the point whose staircase value is the cell midpoint.
template <RealFunction F>
[[nodiscard]] double falpha_integral(const F& f, const Staircase& s, double a, double b, const FalphaConfig& cfg = {}) {
    cfg.validate();
    detail::require(a <= b, "falpha_integral: need a <= b");
    const double sa = s(a);
    const double sb = s(b);
    const double total = sb - sa;
    if (total == 0.0) return 0.0;

    const int cells = cfg.integration_cells;
    const double du = total / cells;
    double sum = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double u_lo = sa + du * i;
        const double u_hi = i + 1 == cells ? sb : sa + du * (i + 1);
        const double z = staircase_inverse(s, 0.5 * (u_lo + u_hi), a, b);
        const double value = static_cast<double>(f(z));
        if (!std::isfinite(value)) throw ComputationError("falpha_integral: integrand is not finite");
        sum += value * (u_hi - u_lo);
    }
    return sum;
}

}  // namespace fractal_qm
