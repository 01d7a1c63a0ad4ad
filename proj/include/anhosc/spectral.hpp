#pragma once

#include "anhosc/params.hpp"

#include <vector>

namespace anhosc {

enum class PoleFamily { full_mehler, fixed_origin };

struct Pole {
    double re;
    double im;
};

struct PoleSet {
    double gamma;
    PoleFamily family;
    std::vector<Pole> poles;
};

// full_mehler: i (n + 1/2) gamma; fixed_origin: +-i (2n + 1/2) gamma; n = 0..n_max.
PoleSet harmonic_pole_positions(double gamma, int n_max, PoleFamily family);

// Gamma(1/4 + s) Gamma(1/4 - s) with s = E_im / (2 gamma). Throws PoleHitError on a pole.
double gamma_product(double E_im, double gamma);
// 1 / gamma_product, entire in E_im; zero exactly at the poles.
double gamma_product_reciprocal(double E_im, double gamma);

// Zeros of the reciprocal in [-search_radius, search_radius], ascending.
std::vector<double> locate_poles_numeric(double gamma, double search_radius);

// int dx_f of the fixed-origin propagator with the universal quartic factor:
// prefactor sqrt(pi / A) Dscaled_{-1/2}(A / sqrt(2 a R)), A = (c/2) g(beta), R = I_0(0)/Q^4(beta).
double x_fourier_zero_momentum(const ModelParams& params, const TruncationPolicy& policy);

}  // namespace anhosc
