#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fractal_qm/hydrogen.hpp"

using namespace fractal_qm;
using namespace fractal_qm::hydrogen;
using Catch::Approx;

TEST_CASE("radial wavefunction reference values", "[hydrogen][radial]") {
    CHECK(radial_wavefunction({1, 0, 0}, {1.0, 1.0}, 0.0) == Approx(2.0).epsilon(1e-15));
    CHECK(radial_wavefunction({1, 0, 0}, {1.0, 1.0}, 1.0) == Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
    // S(4) = 2 for alpha = 1/2; L_0^3 = 1.
    CHECK(radial_wavefunction({2, 1, 0}, {0.5, 1.0}, 4.0) == Approx(std::exp(-1.0)).epsilon(1e-15));
    // 2s at alpha = 1 with A = 1: e^{-r/2} L_1^1(r) = e^{-r/2} (2 - r).
    CHECK(radial_wavefunction({2, 0, 0}, {1.0, 1.0}, 0.5) == Approx(std::exp(-0.25) * 1.5).epsilon(1e-14));
}

TEST_CASE("radial functions validate inputs", "[hydrogen][errors]") {
    CHECK_THROWS_AS(radial_wavefunction({1, 0, 0}, {1.0, 1.0}, -0.1), ParameterError);
    CHECK_THROWS_AS(radial_wavefunction({2, 2, 0}, {1.0, 1.0}, 1.0), ParameterError);
    CHECK_THROWS_AS(radial_wavefunction({0, 0, 0}, {1.0, 1.0}, 1.0), ParameterError);
    CHECK_THROWS_AS(radial_wavefunction({1, 0, 0}, {1.2, 1.0}, 1.0), ParameterError);
    CHECK_THROWS_AS(radial_wavefunction({1, 0, 0}, {0.5, 1.0}, 1.0, {}, 1.0, Staircase::power_law(0.7)),
                    ParameterError);
    CHECK_THROWS_AS(full_wavefunction({2, 1, 2}, {1.0, 1.0}, 1.0, 0.0, 0.0), ParameterError);
}

TEST_CASE("radial density modes", "[hydrogen][density]") {
    const FractalDims dims{1.0, 1.0};
    const PhysicalConstants au;
    CHECK(radial_density({1, 0, 0}, dims, 0.0, au, 1.0, RadialMode::squared) == Approx(4.0).epsilon(1e-15));
    CHECK(radial_density({1, 0, 0}, dims, 0.0, au, 1.0, RadialMode::paper_literal) == Approx(4.0).epsilon(1e-15));
    CHECK(radial_density({1, 0, 0}, dims, 1.0, au, 1.0, RadialMode::squared) ==
          Approx(4.0 * std::exp(-2.0)).epsilon(1e-14));
    CHECK(radial_density({1, 0, 0}, dims, 1.0, au, 1.0, RadialMode::paper_literal) ==
          Approx(4.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(radial_density({2, 1, 0}, dims, 3.0, au, 2.0, RadialMode::paper_literal) ==
          Approx(4.0 * std::exp(-1.5)).epsilon(1e-14));
}

TEST_CASE("radial density is non-negative in both modes", "[hydrogen][density][property]") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> rs(0.0, 60.0);
    std::uniform_real_distribution<double> alphas(0.2, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 5;
        const int l = trial % n;
        const FractalDims dims{alphas(rng), 1.0};
        const double r = rs(rng);
        CHECK(radial_density({n, l, 0}, dims, r, {}, 1.0, RadialMode::squared) >= 0.0);
        CHECK(radial_density({n, l, 0}, dims, r, {}, 1.0, RadialMode::paper_literal) >= 0.0);
    }
}

TEST_CASE("power-law radial functions are conjugate to alpha = 1", "[hydrogen][property]") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> alphas(0.3, 1.0);
    std::uniform_real_distribution<double> rs(0.0, 25.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 6;
        const QuantumNumbers qn{n, trial % n, 0};
        const double alpha = alphas(rng);
        const double r = rs(rng);
        CHECK(radial_wavefunction(qn, {alpha, 1.0}, r) == radial_wavefunction(qn, {1.0, 1.0}, std::pow(r, alpha)));
    }
}

TEST_CASE("squared density has n - l - 1 radial nodes at alpha = 1", "[hydrogen][property]") {
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l < n; ++l) {
            const int samples = 10000;
            const double r_max = 40.0 * n;
            std::vector<double> d(samples);
            double peak = 0.0;
            for (int i = 0; i < samples; ++i) {
                d[i] = radial_density({n, l, 0}, {1.0, 1.0}, r_max * (i + 1) / (samples + 1));
                peak = std::max(peak, d[i]);
            }
            int zeros = 0;
            for (int i = 1; i + 1 < samples; ++i)
                if (d[i] < d[i - 1] && d[i] <= d[i + 1] && d[i] < 1e-3 * peak) ++zeros;
            INFO("n=" << n << " l=" << l);
            CHECK(zeros == n - l - 1);
        }
}

TEST_CASE("1s orbital as printed", "[hydrogen][orbital]") {
    const double prefactor = 1.0 / std::sqrt(std::numbers::pi);
    CHECK(orbital_1s({1.0, 1.0}, 0.0) == Approx(prefactor).epsilon(1e-15));
    CHECK(orbital_1s({1.0, 1.0}, 1.0) == Approx(prefactor * std::exp(-1.0)).epsilon(1e-15));
    for (double alpha : {0.3, 0.5, 0.9}) CHECK(orbital_1s({alpha, 1.0}, 0.0) == Approx(prefactor).epsilon(1e-15));
    // a0 = 2: (1/2^{3a})^{1/2} exp(-r^a / 2^{3a}).
    PhysicalConstants c;
    c.bohr_radius = 2.0;
    CHECK(orbital_1s({0.5, 1.0}, 4.0, c) ==
          Approx(prefactor * std::pow(2.0, -0.75) * std::exp(-2.0 / std::pow(2.0, 1.5))).epsilon(1e-14));
    CHECK_THROWS_AS(orbital_1s({1.0, 1.0}, -1.0), ParameterError);
}

TEST_CASE("full wavefunction composes radial and angular parts", "[hydrogen][full]") {
    using std::numbers::pi;
    const FractalDims dims{0.7, 1.0};
    const auto psi = full_wavefunction({1, 0, 0}, dims, 2.0, 0.4, 1.1);
    CHECK(psi.real() == Approx(radial_wavefunction({1, 0, 0}, dims, 2.0) * 0.28209479177387814).epsilon(1e-14));
    CHECK(psi.imag() == 0.0);
    for (double r : {0.0, 0.5, 3.0}) CHECK(std::abs(full_wavefunction({2, 1, 0}, dims, r, pi / 2, 0.0)) < 1e-16);
    const auto p211 = full_wavefunction({2, 1, 1}, {1.0, 1.0}, 2.0, pi / 2, 0.0);
    CHECK(p211.real() ==
          Approx(radial_wavefunction({2, 1, 0}, {1.0, 1.0}, 2.0) * -std::sqrt(3.0 / (8 * pi))).epsilon(1e-14));
}

TEST_CASE("Bohr orbit radii", "[hydrogen][energy]") {
    CHECK(bohr_radius_level(1) == 1.0);
    CHECK(bohr_radius_level(3) == 9.0);
    PhysicalConstants c;
    c.hbar = 2.0;
    CHECK(bohr_radius_level(2, c) == Approx(16.0).epsilon(1e-15));
    CHECK_THROWS_AS(bohr_radius_level(0), ParameterError);
    CHECK(bohr_radius_level(1, PhysicalConstants::si()) == Approx(5.29177210903e-11).epsilon(1e-8));
}

TEST_CASE("energy levels", "[hydrogen][energy]") {
    CHECK(energy_level(1, {1.0, 1.0}) == Approx(-0.5).epsilon(1e-15));
    CHECK(to_ev(energy_level(1, {1.0, 1.0})) == Approx(-13.606).margin(1e-3));
    CHECK(to_ev(energy_level(2, {1.0, 1.0})) == Approx(-3.4).margin(2e-3));
    CHECK(energy_level(2, {0.8, 1.0}) == Approx(-1.0 / (2.0 * std::pow(4.0, 0.8))).epsilon(1e-14));
    CHECK(energy_level(2, {0.8, 1.0}) == Approx(-0.16494).margin(1e-5));
    // SI constants give the same level in eV.
    CHECK(to_ev(energy_level(1, {1.0, 1.0}, PhysicalConstants::si()), PhysicalConstants::si()) ==
          Approx(-13.6057).margin(1e-3));
}

TEST_CASE("energy level properties", "[hydrogen][energy][property]") {
    for (int n = 1; n <= 10; ++n)
        CHECK(to_ev(energy_level(n, {1.0, 1.0})) == Approx(-13.606 / (n * n)).margin(1e-3));
    for (double alpha : {0.2, 0.5, 0.77, 1.0}) CHECK(energy_level(1, {alpha, 1.0}) == -0.5);
    for (int n = 2; n <= 8; ++n) {
        double previous = INFINITY;
        for (double alpha = 0.1; alpha <= 1.0001; alpha += 0.05) {
            const double magnitude = std::abs(energy_level(n, {std::min(alpha, 1.0), 1.0}));
            CHECK(magnitude < previous);
            previous = magnitude;
        }
    }
}

TEST_CASE("superposition evolution", "[hydrogen][evolve]") {
    const PhysicalConstants au;
    const Point point{1.0, 0.0, 0.0};
    for (double beta : {0.5, 1.0}) {
        const FractalDims dims{0.6, beta};
        const std::vector<Term> single{{{0.6, 0.8}, {2, 1, 0}}};
        const double reference = std::norm(full_wavefunction({2, 1, 0}, dims, point.r, point.theta, point.phi));
        for (double t : {0.0, 0.3, 7.0, 123.0})
            CHECK(std::norm(evolve_superposition(single, dims, point, t)) == Approx(reference).epsilon(1e-12));
    }

    const double c = 1.0 / std::sqrt(2.0);
    const std::vector<Term> pair{{{c, 0.0}, {1, 0, 0}}, {{c, 0.0}, {2, 0, 0}}};
    const FractalDims dims{1.0, 1.0};
    const ComplexValue at_zero = evolve_superposition(pair, dims, point, 0.0);
    const ComplexValue sum = c * full_wavefunction({1, 0, 0}, dims, 1.0, 0.0, 0.0) +
                             c * full_wavefunction({2, 0, 0}, dims, 1.0, 0.0, 0.0);
    CHECK(at_zero == sum);
    const double period = 2 * std::numbers::pi / (energy_level(2, dims) - energy_level(1, dims));
    CHECK(std::abs(std::norm(evolve_superposition(pair, dims, point, period)) - std::norm(at_zero)) < 1e-9);
    CHECK(std::abs(std::norm(evolve_superposition(pair, dims, point, 0.5 * period)) - std::norm(at_zero)) > 1e-3);

    CHECK_THROWS_AS(evolve_superposition(std::vector<Term>{}, dims, point, 0.0), ParameterError);
    CHECK_THROWS_AS(evolve_superposition(pair, dims, point, -1.0), ParameterError);
}

TEST_CASE("optional normalization against the fractal measure", "[hydrogen][normalization]") {
    // At alpha = 1 the F-measure is dr and int_0^inf (2 e^{-r})^2 dr = 2.
    const auto s1 = Staircase::power_law(1.0);
    CHECK(radial_normalization({1, 0, 0}, {1.0, 1.0}, 40.0, {}, s1) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-4));
    // With S = r^alpha the measure is dS, and the integral is alpha-independent.
    const auto s = Staircase::power_law(0.5);
    CHECK(radial_normalization({1, 0, 0}, {0.5, 1.0}, 1600.0, {}, s) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-4));
}
