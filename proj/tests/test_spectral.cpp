#include "doctest.h"

#include "anhosc/correction.hpp"
#include "anhosc/errors.hpp"
#include "anhosc/quadrature.hpp"
#include "anhosc/spectral.hpp"
#include "oracle_values.hpp"

#include <cmath>

using namespace anhosc;
using doctest::Approx;

TEST_CASE("analytic pole families") {
    PoleSet full = harmonic_pole_positions(1.0, 2, PoleFamily::full_mehler);
    REQUIRE(full.poles.size() == 3);
    CHECK(full.poles[0].im == 0.5);
    CHECK(full.poles[2].im == 2.5);
    PoleSet fixed = harmonic_pole_positions(2.0, 1, PoleFamily::fixed_origin);
    REQUIRE(fixed.poles.size() == 4);
    CHECK(fixed.poles[0].im == 1.0);
    CHECK(fixed.poles[1].im == -1.0);
    CHECK(fixed.poles[2].im == 5.0);
    for (auto& p : fixed.poles) CHECK(p.re == 0.0);
    PoleSet scaled = harmonic_pole_positions(3.0, 2, PoleFamily::full_mehler);
    for (int i = 0; i < 3; ++i) CHECK(scaled.poles[i].im == Approx(3.0 * full.poles[i].im));
    CHECK_THROWS_AS(harmonic_pole_positions(0.0, 1, PoleFamily::full_mehler), DomainError);
}

TEST_CASE("gamma product") {
    CHECK(gamma_product(0.0, 1.0) == Approx(oracle::kGammaQuarterSq).epsilon(1e-14));
    CHECK(gamma_product(0.3, 1.0) == Approx(gamma_product(-0.3, 1.0)));
    CHECK_THROWS_AS(gamma_product(0.5, 1.0), PoleHitError);
    CHECK_THROWS_AS(gamma_product(-2.5, 1.0), PoleHitError);
    for (double e : {0.2, 1.7, -3.1}) CHECK(gamma_product_reciprocal(e, 1.3) * gamma_product(e, 1.3) == Approx(1.0));
}

TEST_CASE("numeric poles sit at (2n + 1/2) gamma") {
    for (double g : {0.5, 1.0, 2.0}) {
        std::vector<double> found = locate_poles_numeric(g, 7.9 * g);
        REQUIRE(found.size() == 8);
        for (int n = 0; n <= 3; ++n) {
            CHECK(std::abs(found[4 + n] - (2 * n + 0.5) * g) < 1e-8);
            CHECK(std::abs(found[3 - n] + (2 * n + 0.5) * g) < 1e-8);
        }
    }
}

TEST_CASE("zero-momentum transform") {
    TruncationPolicy pol;
    ModelParams p;
    p.b = 0.5;  // gamma = 1
    p.a = 0.1;
    CHECK(x_fourier_zero_momentum(p, pol) == Approx(oracle::kXFourier_a01).epsilon(1e-9));
    p.a = 0.0;
    const double gauss = 1.0 / std::sqrt(2 * M_PI * std::sinh(1.0)) * std::sqrt(2 * M_PI / (1.0 / std::tanh(1.0)));
    CHECK(x_fourier_zero_momentum(p, pol) == Approx(gauss).epsilon(1e-12));
    // against quadrature of the propagator with p_max = 0
    for (double a : {0.1, 0.5}) {
        ModelParams q;
        q.a = a;
        q.b = 0.5;
        TruncationPolicy p0;
        p0.p_max = 0;
        auto f = [&](double x) {
            ModelParams r = q;
            r.x_f = x;
            return full_propagator(r, p0).value;
        };
        CHECK(x_fourier_zero_momentum(q, pol) == Approx(quad::real_line(f, 0.0, 1.0, 1e-11, 1e-15).value).epsilon(1e-8));
    }
    ModelParams bad;
    bad.b = -4.0;  // |gamma| beta = 2.83 > pi/2: g(beta) < 0
    CHECK_THROWS_AS(x_fourier_zero_momentum(bad, pol), DomainError);
}
