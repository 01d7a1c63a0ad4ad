#include "doctest.h"

#include "anhosc/continuum.hpp"
#include "anhosc/correction.hpp"
#include "anhosc/errors.hpp"
#include "oracle_values.hpp"

#include <cmath>
#include <numbers>

using namespace anhosc;
using doctest::Approx;

namespace {
ModelParams mp(double a, double b, double c, double beta, double xf) {
    ModelParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.beta = beta;
    p.x_f = xf;
    return p;
}
}  // namespace

TEST_CASE("mehler kernel") {
    CHECK(mehler_kernel(1.0, 0.0, 0.0, 1.0) == Approx(1.0 / std::sqrt(2 * std::numbers::pi * std::sinh(1.0))));
    CHECK(mehler_kernel(1.0, 0.0, 0.0, 1.0) == Approx(0.368005198707561).epsilon(1e-12));
    CHECK(mehler_kernel(2.0, 0.3, -0.4, 0.7) == Approx(oracle::kMehler_k2_xi03_xfm04_nu07).epsilon(1e-13));
    CHECK_THROWS_AS(mehler_kernel(0.0, 0.0, 0.0, 1.0), DomainError);
}

TEST_CASE("harmonic factor on both branches") {
    HarmonicFactor h = harmonic_fixed_origin(mp(0, 1, 1, 1, 0.5));
    CHECK(h.prefactor == Approx(oracle::kHarmPrefactor_b1).epsilon(1e-14));
    CHECK(h.exponent == Approx(oracle::kHarmExponent_b1_x05).epsilon(1e-14));
    HarmonicFactor t = harmonic_fixed_origin(mp(0, -2, 1, 1, 0.5));
    CHECK(t.prefactor == Approx(oracle::kHarmPrefactor_bm2).epsilon(1e-14));
    CHECK(t.exponent == Approx(oracle::kHarmExponent_bm2_x05).epsilon(1e-14));
    // free particle
    HarmonicFactor f = harmonic_fixed_origin(mp(0, 0, 2, 0.5, 1.0));
    CHECK(f.prefactor == Approx(1.0 / std::sqrt(2 * std::numbers::pi * 0.5 / 2)));
    CHECK(f.exponent == Approx(-2.0 / (2 * 0.5)));
}

TEST_CASE("frequency branches and continuity at b = 0") {
    CHECK(FrequencyBranch::of(mp(0, 1, 1, 1, 0)).branch == Branch::hyperbolic);
    CHECK(FrequencyBranch::of(mp(0, 0, 1, 1, 0)).branch == Branch::flat);
    CHECK(FrequencyBranch::of(mp(0, -1, 1, 1, 0)).branch == Branch::trigonometric);
    for (double u : {1e-3, 5e-3, 2e-2, 0.5}) {
        CHECK(sinhc(u) == Approx(std::sinh(std::sqrt(u)) / std::sqrt(u)).epsilon(1e-14));
        CHECK(sinhc(-u) == Approx(std::sin(std::sqrt(u)) / std::sqrt(u)).epsilon(1e-14));
        CHECK(xcothx(u) == Approx(std::sqrt(u) / std::tanh(std::sqrt(u))).epsilon(1e-14));
        CHECK(xcothx(-u) == Approx(std::sqrt(u) / std::tan(std::sqrt(u))).epsilon(1e-14));
    }
    HarmonicFactor lo = harmonic_fixed_origin(mp(0, -1e-6, 1, 1, 0.7));
    HarmonicFactor hi = harmonic_fixed_origin(mp(0, 1e-6, 1, 1, 0.7));
    CHECK(std::abs(lo.prefactor / hi.prefactor - 1) < 1e-6);
    CHECK(std::abs(lo.exponent - hi.exponent) < 1e-6);
}

TEST_CASE("singular frequency guard") {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK_THROWS_AS(check_frequency(mp(0, -4.9348, 1, 1, 0)), SingularFrequencyError);
    CHECK_THROWS_AS(check_frequency(mp(0, -pi2 / 2, 1, 1, 0)), SingularFrequencyError);
    CHECK_THROWS_AS(check_frequency(mp(0, -8.0, 1, 1, 0)), SingularFrequencyError);
    CHECK_NOTHROW(check_frequency(mp(0, -pi2 / 2 + 5e-5, 1, 1, 0)));
}

TEST_CASE("finite-N prefactor and exponent converge to the continuum") {
    for (double b : {0.5, 1.0, 2.0}) {
        ModelParams p = mp(0, b, 1, 1, 0.8);
        const double g = std::sqrt(2 * b);
        const double pref = 2 * std::numbers::pi * std::sinh(g) / g;
        const double ex = -0.5 * g / std::tanh(g) * 0.64;
        double pe_prev = INFINITY, ee_prev = INFINITY;
        for (int N = 8; N <= 512; N *= 2) {
            const double pe = std::abs(prefactor_finite_N(p, N) - pref);
            const double ee = std::abs(exponent_finite_N(p, N) - ex);
            CHECK(pe < pe_prev);
            CHECK(ee < ee_prev);
            pe_prev = pe;
            ee_prev = ee;
        }
    }
}

TEST_CASE("close-root recurrence agrees with the closed form") {
    // b tiny enough that the two roots nearly coincide
    ModelParams p = mp(0, 1e-4, 1, 1, 0.5);
    for (int N : {8, 64}) {
        const double pref = prefactor_finite_N(p, N);
        ModelParams q = p;
        q.b = 0.0;
        CHECK(pref == Approx(prefactor_finite_N(q, N)).epsilon(1e-4));
    }
    CHECK(big_omega(0, p, 8) == 1.0);
}

TEST_CASE("kernels") {
    ModelParams p = mp(0, 0.5, 1, 1, 0);  // gamma = 1
    CHECK(kernel_Q(0.4, p) == Approx(2 * std::sinh(0.4)).epsilon(1e-15));
    CHECK(kernel_d(0.4, p) == Approx(0.5 * (1 / std::tanh(0.4) - 1 / std::tanh(1.0))).epsilon(1e-14));
    CHECK(kernel_d(1.0, p) == Approx(0.0));
    CHECK(kernel_t_d(0.0, p) == Approx(0.5));
    CHECK_THROWS_AS(kernel_d(0.0, p), DomainError);
    ModelParams flat = mp(0, 0, 1, 2, 0);
    CHECK(kernel_d(0.5, flat) == Approx(0.5 * (1 / 0.5 - 1 / 2.0)));
    CHECK(kernel_Q(0.5, flat) == Approx(1.0));
}

TEST_CASE("closed-form quartic ratio") {
    ModelParams p = mp(1, 0.5, 1, 1, 1);
    CHECK(quartic_ratio_closed_form(p) == Approx(oracle::kRatio_gamma1_beta1).epsilon(1e-12));
    CHECK(quartic_ratio_closed_form(mp(1, -2, 1, 1, 1)) == Approx(oracle::kRatio_trig_gsq_m4_beta1).epsilon(1e-12));
    CHECK(quartic_ratio_closed_form(mp(1, 1e-8, 1, 0.7, 1)) == Approx(0.7 / 5).epsilon(1e-7));
    CHECK(quartic_ratio_closed_form(mp(1, 0, 1, 0.7, 1)) == Approx(0.7 / 5).epsilon(1e-15));
    // the series and the exp-scaled branches meet smoothly
    for (double u : {0.999, 1.001, 30.0, 900.0}) {
        ModelParams q = mp(1, u / 2, 1, 1, 1);
        const double y = std::sqrt(u);
        const double num = 3 * y - 2 * std::sinh(2 * y) + std::sinh(4 * y) / 4;
        const double ref = u < 100 ? num / (8 * y * std::pow(std::sinh(y), 4)) : 1.0 / (4 * y);
        CHECK(quartic_ratio_closed_form(q) == Approx(ref).epsilon(1e-11));
    }
}
