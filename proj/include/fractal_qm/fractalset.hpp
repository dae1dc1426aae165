#pragma once

// Finite-depth approximants of symmetric two-map Cantor sets on [c1, c2].
//
// Each refinement keeps the two end subintervals of relative length
// keep_ratio and discards the middle. keep_ratio = 1/3 is the triadic
// middle-third set, keep_ratio = 1/2 leaves the whole support.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "fractal_qm/error.hpp"

namespace fractal_qm {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] double length() const noexcept { return hi - lo; }
    [[nodiscard]] bool intersects(const Interval& other) const noexcept {
        return lo <= other.hi && other.lo <= hi;
    }
    bool operator==(const Interval&) const = default;
};

struct CantorSpec {
    double keep_ratio = 1.0 / 3.0;
    Interval support{0.0, 1.0};

    [[nodiscard]] static CantorSpec triadic() { return {}; }
    [[nodiscard]] static CantorSpec full_interval(double c1 = 0.0, double c2 = 1.0) {
        return {0.5, {c1, c2}};
    }

    void validate() const {
        if (!(keep_ratio > 0.0 && keep_ratio <= 0.5))
            throw ParameterError("keep_ratio must lie in (0, 1/2]");
        if (!(support.lo < support.hi) || !std::isfinite(support.lo) || !std::isfinite(support.hi))
            throw ParameterError("support must be a finite interval with c1 < c2");
    }

    /// ln 2 / ln(1/keep_ratio); equals 1 for the full interval.
    [[nodiscard]] double similarity_dimension() const {
        return std::log(2.0) / std::log(1.0 / keep_ratio);
    }

    [[nodiscard]] bool is_full_interval() const noexcept { return keep_ratio == 0.5; }
};

/// Depth-k approximant: a sorted list of disjoint closed intervals.
///
/// For keep_ratio < 1/2 there are exactly 2^depth intervals, each of length
/// keep_ratio^depth * (c2 - c1). For keep_ratio = 1/2 the retained pieces
/// abut, and the union is stored as the single support interval.
class IntervalUnion {
public:
    IntervalUnion(CantorSpec spec, int depth, std::vector<Interval> intervals)
        : spec_(spec), depth_(depth), intervals_(std::move(intervals)) {}

    [[nodiscard]] const CantorSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] int depth() const noexcept { return depth_; }
    [[nodiscard]] std::span<const Interval> intervals() const noexcept { return intervals_; }
    [[nodiscard]] std::size_t size() const noexcept { return intervals_.size(); }
    [[nodiscard]] Interval hull() const noexcept {
        return {intervals_.front().lo, intervals_.back().hi};
    }
    /// Length of every stored interval at this depth (before any merging).
    [[nodiscard]] double piece_length() const {
        return std::pow(spec_.keep_ratio, depth_) * spec_.support.length();
    }
    [[nodiscard]] double total_length() const noexcept {
        double sum = 0.0;
        for (const auto& iv : intervals_) sum += iv.length();
        return sum;
    }

    /// Index of the first interval whose right end is >= x.
    [[nodiscard]] std::size_t lower_index(double x) const noexcept {
        auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                                   [](const Interval& iv, double v) { return iv.hi < v; });
        return static_cast<std::size_t>(it - intervals_.begin());
    }

private:
    CantorSpec spec_;
    int depth_;
    std::vector<Interval> intervals_;
};

/// Maximum refinement depth; 2^30 intervals is already far past useful.
inline constexpr int kMaxCantorDepth = 30;

[[nodiscard]] inline IntervalUnion build_cantor(const CantorSpec& spec, int depth) {
    spec.validate();
    if (depth < 0 || depth > kMaxCantorDepth) throw ParameterError("depth must lie in [0, 30]");

    const double c1 = spec.support.lo;
    const double length = spec.support.length();
    if (spec.is_full_interval()) return IntervalUnion(spec, depth, {spec.support});

    // Left endpoints are generated exactly as sums of digit offsets in units
    // of the support length, which keeps the pieces aligned at every depth.
    std::vector<double> offsets{0.0};
    double scale = 1.0;
    for (int level = 0; level < depth; ++level) {
        const double shift = scale * (1.0 - spec.keep_ratio);
        std::vector<double> next;
        next.reserve(offsets.size() * 2);
        for (double o : offsets) next.push_back(o);
        for (double o : offsets) next.push_back(o + shift);
        std::sort(next.begin(), next.end());
        offsets = std::move(next);
        scale *= spec.keep_ratio;
    }

    std::vector<Interval> out;
    out.reserve(offsets.size());
    for (double o : offsets) {
        double lo = c1 + o * length;
        double hi = c1 + (o + scale) * length;
        out.push_back({lo, std::min(hi, spec.support.hi)});
    }
    out.back().hi = spec.support.hi;
    return IntervalUnion(spec, depth, std::move(out));
}

/// Flag function: 1 iff the approximant meets the closed interval I.
[[nodiscard]] inline int flag(const IntervalUnion& set, Interval query) noexcept {
    if (query.hi < query.lo) std::swap(query.lo, query.hi);
    const std::size_t i = set.lower_index(query.lo);
    if (i == set.size()) return 0;
    return set.intervals()[i].lo <= query.hi ? 1 : 0;
}

[[nodiscard]] inline bool contains(const IntervalUnion& set, double x, double tol = 0.0) {
    detail::require(tol >= 0.0, "tolerance must be non-negative");
    return flag(set, {x - tol, x + tol}) == 1;
}

}  // namespace fractal_qm
