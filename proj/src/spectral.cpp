#include "anhosc/spectral.hpp"

#include "anhosc/continuum.hpp"
#include "anhosc/errors.hpp"
#include "anhosc/specfun.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace anhosc {

PoleSet harmonic_pole_positions(double gamma, int n_max, PoleFamily family) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    if (n_max < 0) throw DomainError("n_max must be nonnegative");
    PoleSet set{gamma, family, {}};
    for (int n = 0; n <= n_max; ++n) {
        if (family == PoleFamily::full_mehler) {
            set.poles.push_back({0.0, (n + 0.5) * gamma});
        } else {
            const double im = (2 * n + 0.5) * gamma;
            set.poles.push_back({0.0, im});
            set.poles.push_back({0.0, -im});
        }
    }
    return set;
}

namespace {

bool nonpositive_integer(double x) {
    if (x > 0.0) return false;
    return x == std::nearbyint(x);
}

}  // namespace

double gamma_product(double E_im, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    const double s = E_im / (2.0 * gamma);
    if (nonpositive_integer(0.25 + s) || nonpositive_integer(0.25 - s))
        throw PoleHitError("Gamma product evaluated on a pole");
    return std::tgamma(0.25 + s) * std::tgamma(0.25 - s);
}

double gamma_product_reciprocal(double E_im, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    const double s = std::abs(E_im) / (2.0 * gamma);
    // 1/Gamma(1/4 - s) = Gamma(3/4 + s) sin(pi (1/4 - s)) / pi
    const double lg = std::lgamma(0.75 + s) - std::lgamma(0.25 + s);
    return std::exp(lg) * std::sin(std::numbers::pi * (0.25 - s)) / std::numbers::pi;
}

std::vector<double> locate_poles_numeric(double gamma, double search_radius) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    if (!(search_radius > 0.0)) throw DomainError("search radius must be positive");
    auto f = [gamma](double e) { return gamma_product_reciprocal(e, gamma); };
    const double step = gamma / 16.0;
    std::vector<double> found;
    double lo = 0.0, flo = f(lo);
    while (lo < search_radius) {
        const double hi = std::min(lo + step, search_radius);
        const double fhi = f(hi);
        if (fhi == 0.0) {
            found.push_back(hi);
        } else if (flo != 0.0 && std::signbit(flo) != std::signbit(fhi)) {
            std::uintmax_t iters = 200;
            auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2);
            auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
            found.push_back(0.5 * (a + b));
        }
        lo = hi;
        flo = fhi;
    }
    std::vector<double> out;
    for (auto it = found.rbegin(); it != found.rend(); ++it) out.push_back(-*it);
    out.insert(out.end(), found.begin(), found.end());
    return out;
}

double x_fourier_zero_momentum(const ModelParams& params, const TruncationPolicy& policy) {
    params.validate();
    if (params.a < 0.0) throw DomainError("x-space transform needs a >= 0");
    check_frequency(params);
    const HarmonicFactor h = harmonic_fixed_origin(params);
    const double A = 0.5 * params.c * g_of(params.beta, params.gamma_sq());
    if (!(A > 0.0)) throw DomainError("Gaussian width is not positive; the x-integral diverges");
    double d = 1.0;
    if (params.a > 0.0) {
        const double z = A / std::sqrt(2.0 * params.a * quartic_ratio_closed_form(params));
        d = pcf_scaled_ref(0, z, policy);
    }
    return h.prefactor * std::sqrt(std::numbers::pi / A) * d;
}

}  // namespace anhosc
