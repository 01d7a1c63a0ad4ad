#include "doctest.h"

#include "anhosc/errors.hpp"
#include "anhosc/quadrature.hpp"
#include "anhosc/specfun.hpp"
#include "oracle_values.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

using namespace anhosc;
using doctest::Approx;

TEST_CASE("pochhammer products") {
    CHECK(pochhammer(0.7, 0) == 1.0);
    CHECK(pochhammer(0.5, 2) == Approx(0.75).epsilon(1e-15));
    CHECK(pochhammer(1.5, 2) == Approx(3.75).epsilon(1e-15));
    CHECK(pochhammer(-2.0, 3) == Approx(-2.0 * -1.0 * 0.0));
}

TEST_CASE("coeff_a values and domain") {
    for (int j = 0; j <= 12; ++j) CHECK(coeff_a(j, j) == 1.0);
    CHECK(coeff_a(0, 2) == Approx(0.75).epsilon(1e-15));
    CHECK(coeff_a(1, 2) == Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(coeff_a(3, 2), DomainError);
    CHECK(coeff_a_exact(0, 2) == Rational(3, 4));
    CHECK_THROWS_AS(coeff_a_exact(0, 17), DomainError);
    // beyond the exact range: recurrence a_i^{j+1} = a_i^j (j + 1/2)(j + 1)/(j + 1 - i)
    for (int j = 12; j <= 60; ++j)
        for (int i = 0; i <= j; ++i)
            CHECK(coeff_a(i, j + 1) == Approx(coeff_a(i, j) * (j + 0.5) * (j + 1) / (j + 1 - i)).epsilon(1e-14));
    CHECK(coeff_a(0, 20) == Approx(std::tgamma(20.5) / std::tgamma(0.5)).epsilon(1e-13));
}

TEST_CASE("quartic moments") {
    TruncationPolicy pol;
    CHECK(quartic_moment(1, 1.0, 0.0, pol) == 0.0);
    CHECK(quartic_moment(0, 1.0, 0.0, pol) == Approx(oracle::kMoment0).epsilon(1e-10));
    CHECK(quartic_moment(2, 1.0, 0.0, pol) == Approx(oracle::kMoment2).epsilon(1e-10));
    CHECK(quartic_moment(4, 0.7, -0.3, pol) == Approx(oracle::kMoment4_a07_bm03).epsilon(1e-10));
    CHECK_THROWS_AS(quartic_moment(0, 0.0, 1.0, pol), DomainError);
}

TEST_CASE("scaled parabolic cylinder reference") {
    TruncationPolicy pol;
    CHECK(pcf_scaled_ref(0, 0.5, pol) == Approx(oracle::kPcfScaled_m0_z0p5).epsilon(1e-10));
    CHECK(pcf_scaled_ref(1, 2.0, pol) == Approx(oracle::kPcfScaled_m1_z2).epsilon(1e-10));
    CHECK(pcf_scaled_ref(3, 5.0, pol) == Approx(oracle::kPcfScaled_m3_z5).epsilon(1e-10));
    CHECK(pcf_scaled_ref(2, 20.0, pol) == Approx(oracle::kPcfScaled_m2_z20).epsilon(1e-10));
    CHECK(pcf_scaled_general(0.5, INFINITY, pol) == 1.0);
    CHECK(pcf_exp_scaled(0, -1.5, pol) == Approx(oracle::kPcfExp_m0_zm1p5).epsilon(1e-10));
    CHECK(pcf_exp_scaled(2, 0.0, pol) == Approx(oracle::kPcfExp_m2_z0).epsilon(1e-10));
    CHECK(pcf_exp_scaled(2, 1.0, pol) == Approx(oracle::kPcfExp_m2_z1).epsilon(1e-10));
    // the two normalizations differ by z^{m+1/2}
    CHECK(pcf_scaled_ref(2, 1.3, pol) == Approx(std::pow(1.3, 2.5) * pcf_exp_scaled(2, 1.3, pol)).epsilon(1e-10));
}

TEST_CASE("poincare expansion remainder is bounded by the first omitted term") {
    TruncationPolicy pol;
    for (double z : {20.0, 35.0, 80.0})
        for (int m = 0; m <= 3; ++m)
            for (int J = 0; J <= 4; ++J) {
                const double ref = pcf_scaled_ref(m, z, pol);
                const double next = std::abs(pcf_poincare_next_term(m, z, J));
                if (next < 1e-13 * ref) continue;  // below what a double reference resolves
                CHECK(std::abs(pcf_scaled_poincare(m, z, J) - ref) <= next);
            }
    // leading correction of D_{-1/2} is (1/2)_2 / (2 z^2) = 3 / (8 z^2)
    const double z = 50.0;
    CHECK((1.0 - pcf_scaled_poincare(0, z, 1)) * 2 * z * z == Approx(0.75).epsilon(1e-12));
}

TEST_CASE("quartic exponential integral by series vs quadrature") {
    TruncationPolicy pol;
    CHECK(j1_quartic(0.3, 0.5, 0.7, pol) == Approx(oracle::kJ1_a03_b05_c07).epsilon(1e-9));
    CHECK(j1_quartic(0.2, -1.0, 0.4, pol) == Approx(oracle::kJ1_a02_bm1_c04).epsilon(1e-9));
    boost::math::quadrature::tanh_sinh<double> ts;
    for (double b : {0.0, 0.8, -0.6}) {
        const double a = 0.5, c = -0.9;
        auto f = [&](double x) {
            // x in (-1, 1) mapped onto the real line
            const double u = x / (1 - x * x);
            const double jac = (1 + x * x) / ((1 - x * x) * (1 - x * x));
            return std::exp(-a * u * u * u * u - b * u * u - c * u) * jac;
        };
        CHECK(j1_quartic(a, b, c, pol) == Approx(ts.integrate(f, -1.0, 1.0)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(j1_quartic(0.0, 1.0, 1.0, pol), DomainError);
}

TEST_CASE("policy validation") {
    TruncationPolicy p;
    p.quad_rel_tol = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    TruncationPolicy q;
    q.series_cutoff = 0;
    CHECK_THROWS_AS(q.validate(), DomainError);
}

TEST_CASE("adaptive quadrature reports failure") {
    auto bad = [](double x) { return std::sin(1.0 / x) / x; };
    CHECK_THROWS_AS(quad::finite(bad, 1e-6, 1.0, 1e-14, 0.0), AccuracyError);
    auto gauss = [](double x) { return std::exp(-x * x); };
    CHECK(quad::real_line(gauss, 0.0, 1.0, 1e-12, 0.0).value == Approx(std::sqrt(M_PI)).epsilon(1e-12));
}
