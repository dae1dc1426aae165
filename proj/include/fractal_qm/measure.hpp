#pragma once

// Coarse-grained mass, mass function, gamma-dimension and the integral
// staircase of a Cantor-type set.
//
// The infimum over partitions is approximated over a structured family at
// each mesh delta:
//   * the gap-aligned partition at the construction level matched to delta,
//     whose breakpoints sit in removed gaps so every flagged cell holds one
//     retained piece. It is evaluated in the limit of vanishing margins
//     around each piece, which is the infimum over that family;
//   * uniform grids with n, n+1, ... cells, n = ceil((b - a) / delta);
//   * the single cell [a, b] when b - a <= delta.
// search_budget caps the number of candidates examined.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "fractal_qm/error.hpp"
#include "fractal_qm/fractalset.hpp"
#include "fractal_qm/specfun.hpp"

namespace fractal_qm {

struct MassEstimate {
    double value = 0.0;
    double delta = 0.0;
    bool converged = false;
};

inline constexpr int kDefaultSearchBudget = 8;
inline constexpr double kMassRelativeTolerance = 1e-3;

namespace detail {

inline void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
}

// Relative slack when matching a mesh to a construction level, so that
// delta = r^k L selects level k despite rounding in either quantity.
inline constexpr double kLevelSlack = 1e-9;

inline int matched_level(const IntervalUnion& set, double delta) {
    const double ratio = set.spec().keep_ratio;
    double piece = set.spec().support.length();
    for (int level = 0; level <= set.depth(); ++level) {
        if (piece <= delta * (1.0 + kLevelSlack)) return level;
        piece *= ratio;
    }
    return set.depth();
}

// Cost of the gap-aligned partition at `level`, without the Gamma weight.
inline double gap_aligned_sum(const IntervalUnion& set, double alpha, double a, double b,
                              double delta, int level) {
    const auto pieces = set.intervals();
    // Full-interval sets store one interval regardless of depth.
    const std::size_t group =
        set.size() == 1 ? 1 : (std::size_t{1} << static_cast<unsigned>(set.depth() - level));
    double sum = 0.0;
    for (std::size_t first = set.lower_index(a) / group * group; first < pieces.size(); first += group) {
        const double lo = std::max(pieces[first].lo, a);
        const double hi = std::min(pieces[first + group - 1].hi, b);
        if (pieces[first].lo > b) break;
        const double width = hi - lo;
        if (width <= 0.0) continue;
        // Pieces wider than the mesh are cut into equal flagged cells.
        const double cells = std::max(1.0, std::ceil(width / delta - kLevelSlack));
        sum += std::pow(cells, 1.0 - alpha) * std::pow(width, alpha);
    }
    return sum;
}

// Number of cells of the uniform n-cell grid on [a, b] that meet the set.
inline std::int64_t flagged_uniform_cells(const IntervalUnion& set, double a, double b, std::int64_t n) {
    const double width = (b - a) / static_cast<double>(n);
    const auto pieces = set.intervals();
    std::int64_t count = 0;
    std::int64_t next_free = 0;  // cells below this index were already counted
    for (std::size_t i = set.lower_index(a); i < pieces.size() && pieces[i].lo <= b; ++i) {
        // Closed cells: cell k meets [lo, hi] iff (lo - a)/w - 1 <= k <= (hi - a)/w.
        auto first = static_cast<std::int64_t>(std::ceil((pieces[i].lo - a) / width - 1.0));
        auto last = static_cast<std::int64_t>(std::floor((pieces[i].hi - a) / width));
        first = std::max<std::int64_t>({first, 0, next_free});
        last = std::min<std::int64_t>(last, n - 1);
        if (last >= first) {
            count += last - first + 1;
            next_free = last + 1;
        }
    }
    return count;
}

}  // namespace detail

/// Upper-bound estimate of the coarse-grained mass of the set on [a, b] at mesh delta.
[[nodiscard]] inline MassEstimate coarse_mass(const IntervalUnion& set, double alpha, double a, double b,
                                              double delta, int search_budget = kDefaultSearchBudget) {
    detail::require_alpha(alpha);
    detail::require(a < b, "coarse_mass: need a < b");
    detail::require(delta > 0.0, "coarse_mass: delta must be positive");
    detail::require(search_budget >= 1, "coarse_mass: search_budget must be at least 1");

    const double weight = gamma_fn(alpha + 1.0);
    const double span = b - a;

    int remaining = search_budget;
    double best = weight * detail::gap_aligned_sum(set, alpha, a, b, delta, detail::matched_level(set, delta));
    --remaining;

    if (remaining > 0 && span <= delta) {
        best = std::min(best, weight * std::pow(span, alpha) * flag(set, {a, b}));
        --remaining;
    }

    const auto n_min = static_cast<std::int64_t>(std::max(1.0, std::ceil(span / delta - detail::kLevelSlack)));
    for (std::int64_t n = n_min; remaining > 0; ++n, --remaining) {
        const double width = span / static_cast<double>(n);
        const auto flagged = static_cast<double>(detail::flagged_uniform_cells(set, a, b, n));
        best = std::min(best, weight * flagged * std::pow(width, alpha));
    }
    return {best, delta, false};
}

/// Meshes r^j (c2 - c1) for j = 0..depth, one per construction level.
[[nodiscard]] inline std::vector<double> level_schedule(const IntervalUnion& set) {
    std::vector<double> meshes;
    double piece = set.spec().support.length();
    for (int level = 0; level <= set.depth(); ++level) {
        meshes.push_back(piece);
        piece *= set.spec().keep_ratio;
    }
    return meshes;
}

/// coarse_mass evaluated at every mesh of the schedule, in order.
[[nodiscard]] inline std::vector<MassEstimate> mass_profile(const IntervalUnion& set, double alpha, double a,
                                                            double b, std::span<const double> mesh_schedule,
                                                            int search_budget = kDefaultSearchBudget) {
    detail::require(!mesh_schedule.empty(), "mass_function: mesh schedule is empty");
    for (std::size_t i = 0; i < mesh_schedule.size(); ++i) {
        detail::require(mesh_schedule[i] > 0.0, "mass_function: meshes must be positive");
        detail::require(i == 0 || mesh_schedule[i] < mesh_schedule[i - 1],
                        "mass_function: meshes must be strictly decreasing");
    }
    std::vector<MassEstimate> profile;
    profile.reserve(mesh_schedule.size());
    for (double delta : mesh_schedule) profile.push_back(coarse_mass(set, alpha, a, b, delta, search_budget));
    return profile;
}

/// Mass function: the estimate at the finest mesh of the schedule. converged
/// reports whether the last two meshes agree to a relative 1e-3.
[[nodiscard]] inline MassEstimate mass_function(const IntervalUnion& set, double alpha, double a, double b,
                                                std::span<const double> mesh_schedule,
                                                int search_budget = kDefaultSearchBudget) {
    const auto profile = mass_profile(set, alpha, a, b, mesh_schedule, search_budget);
    MassEstimate last = profile.back();
    if (profile.size() >= 2) {
        const double prev = profile[profile.size() - 2].value;
        const double scale = std::max(std::abs(last.value), std::abs(prev));
        last.converged = std::abs(last.value - prev) <= kMassRelativeTolerance * scale;
    }
    return last;
}

struct DimensionProbe {
    double alpha = 0.0;
    double coarse = 0.0;  // mass at the first mesh
    double fine = 0.0;    // mass at the last mesh
    double slope = 0.0;   // least-squares d(log mass)/d(level)
    bool divergent = false;
};

struct DimensionEstimate {
    double value = 0.0;
    std::vector<DimensionProbe> probes;
};

namespace detail {

inline DimensionProbe probe_dimension(const IntervalUnion& set, double alpha, double a, double b,
                                      std::span<const double> meshes) {
    const auto profile = mass_profile(set, alpha, a, b, meshes);
    DimensionProbe probe{alpha, profile.front().value, profile.back().value, 0.0, false};
    bool any_zero = false;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (!(profile[i].value > 0.0)) {
            any_zero = true;
            break;
        }
        const double x = static_cast<double>(i);
        const double y = std::log(profile[i].value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    if (any_zero) {
        probe.slope = -INFINITY;
        return probe;
    }
    const double count = static_cast<double>(profile.size());
    const double denom = count * sxx - sx * sx;
    probe.slope = denom > 0.0 ? (count * sxy - sx * sy) / denom : 0.0;
    // Slopes within rounding of zero (the alpha = 1 full-interval case) count as bounded.
    probe.divergent = probe.slope > 1e-9;
    return probe;
}

}  // namespace detail

/// Bisection for the alpha at which the mass along the level schedule
/// switches from growing to vanishing. The returned probes are the table the
/// bisection consulted.
[[nodiscard]] inline DimensionEstimate gamma_dimension_trace(const IntervalUnion& set, double a, double b,
                                                             double tol) {
    detail::require(tol > 0.0, "gamma_dimension: tol must be positive");
    detail::require(a < b, "gamma_dimension: need a < b");
    const auto meshes = level_schedule(set);
    if (meshes.size() < 2) throw ComputationError("gamma_dimension: depth 0 cannot separate growth from decay");

    DimensionEstimate out;
    const double floor_alpha = std::min(tol, 1e-3);
    const auto low = detail::probe_dimension(set, floor_alpha, a, b, meshes);
    out.probes.push_back(low);
    if (!(low.fine > 0.0)) throw ComputationError("gamma_dimension: set has no mass on [a, b]");
    if (!low.divergent) throw ComputationError("gamma_dimension: mass does not grow at small alpha");

    const auto top = detail::probe_dimension(set, 1.0, a, b, meshes);
    out.probes.push_back(top);
    if (top.divergent) {
        out.value = 1.0;
        return out;
    }

    double lo = floor_alpha;
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const auto probe = detail::probe_dimension(set, mid, a, b, meshes);
        out.probes.push_back(probe);
        (probe.divergent ? lo : hi) = mid;
    }
    out.value = 0.5 * (lo + hi);
    return out;
}

[[nodiscard]] inline double gamma_dimension(const IntervalUnion& set, double a, double b, double tol) {
    return gamma_dimension_trace(set, a, b, tol).value;
}

// ---------------------------------------------------------------------------
// Integral staircase

struct PowerLawStaircase {
    double alpha = 1.0;
};

/// Self-similar Cantor-Lebesgue function of the set, scaled so S(c2) = normalization.
struct CantorAnalyticStaircase {
    CantorSpec spec;
    double normalization = 1.0;
};

/// S(x) = mass of the approximant on [c1, x] along its level schedule.
struct NumericStaircase {
    std::shared_ptr<const IntervalUnion> set;
    double alpha = 1.0;
    int search_budget = 4;
};

class Staircase {
public:
    using Backend = std::variant<PowerLawStaircase, CantorAnalyticStaircase, NumericStaircase>;

    [[nodiscard]] static Staircase power_law(double alpha) {
        detail::require_alpha(alpha);
        return Staircase(PowerLawStaircase{alpha});
    }
    [[nodiscard]] static Staircase cantor_analytic(const CantorSpec& spec, double normalization = 1.0) {
        spec.validate();
        detail::require(normalization > 0.0 && std::isfinite(normalization),
                        "cantor_analytic: normalization must be positive");
        return Staircase(CantorAnalyticStaircase{spec, normalization});
    }
    [[nodiscard]] static Staircase numeric(IntervalUnion set, double alpha, int search_budget = 4) {
        detail::require_alpha(alpha);
        detail::require(search_budget >= 1, "numeric staircase: search_budget must be at least 1");
        return Staircase(NumericStaircase{std::make_shared<const IntervalUnion>(std::move(set)), alpha, search_budget});
    }

    [[nodiscard]] const Backend& backend() const noexcept { return backend_; }
    [[nodiscard]] bool is_power_law() const noexcept {
        return std::holds_alternative<PowerLawStaircase>(backend_);
    }

    [[nodiscard]] double alpha() const {
        return std::visit(
            [](const auto& b) -> double {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, CantorAnalyticStaircase>) return b.spec.similarity_dimension();
                else return b.alpha;
            },
            backend_);
    }

    /// S(x), odd-extended to x < 0.
    [[nodiscard]] double operator()(double x) const {
        if (x < 0.0) return -positive(-x);
        return positive(x);
    }

private:
    explicit Staircase(Backend backend) : backend_(std::move(backend)) {}

    [[nodiscard]] double positive(double x) const {
        return std::visit([x](const auto& b) { return eval(b, x); }, backend_);
    }

    static double eval(const PowerLawStaircase& b, double x) { return std::pow(x, b.alpha); }

    static double eval(const CantorAnalyticStaircase& b, double x) {
        // Work in units of 1/r so that triadic-rational points map exactly.
        double inv = 1.0 / b.spec.keep_ratio;
        if (std::abs(inv - std::round(inv)) < 1e-12) inv = std::round(inv);
        double u = (x - b.spec.support.lo) / b.spec.support.length();
        double value = 0.0;
        double scale = 1.0;
        for (int iter = 0; iter < 64; ++iter) {
            if (u <= 0.0) break;
            if (u >= 1.0) {
                value += scale;
                break;
            }
            const double v = u * inv;
            if (v <= 1.0) {
                u = v;
            } else if (v >= inv - 1.0) {
                value += 0.5 * scale;
                u = v - (inv - 1.0);
            } else {
                value += 0.5 * scale;
                break;
            }
            scale *= 0.5;
        }
        return b.normalization * value;
    }

    static double eval(const NumericStaircase& b, double x) {
        const double c0 = b.set->spec().support.lo;
        if (x <= c0) return 0.0;
        const auto meshes = level_schedule(*b.set);
        return mass_function(*b.set, b.alpha, c0, x, meshes, b.search_budget).value;
    }

    Backend backend_;
};

[[nodiscard]] inline double staircase_eval(const Staircase& s, double x) { return s(x); }

}  // namespace fractal_qm
