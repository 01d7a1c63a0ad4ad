#include "anhosc/specfun.hpp"

#include "anhosc/errors.hpp"
#include "anhosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace anhosc {

double pochhammer(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x + i;
    return r;
}

Rational coeff_a_exact(int i, int j) {
    if (i < 0 || j < 0 || i > j) throw DomainError("coeff_a requires 0 <= i <= j");
    // numerators leave int64 from j = 17 on
    if (j > 16) throw DomainError("coeff_a exact form limited to j <= 16");
    // (1/2)_j / (1/2)_i = (i + 1/2)_{j-i}
    return Rational(binomial(j, i)) * rising(Rational(2 * i + 1, 2), j - i);
}

double coeff_a(int i, int j) {
    if (i < 0 || j < 0 || i > j) throw DomainError("coeff_a requires 0 <= i <= j");
    if (j <= 16) return to_double(coeff_a_exact(i, j));
    long double v = 1.0L;
    const int k = std::min(i, j - i);
    for (int t = 1; t <= k; ++t) v = v * (j - k + t) / t;
    for (int t = i; t < j; ++t) v *= t + 0.5L;
    return static_cast<double>(v);
}

namespace {

// int x^n exp(-alpha x^4 - b x^2 - shift) dx over the real line, n even.
double even_moment(int n, double alpha, double b, double shift, double rel_tol) {
    double width = 1.0 / (std::sqrt(std::max(b, 0.0)) + std::pow(alpha, 0.25));
    double y = (-2.0 * b + std::sqrt(4.0 * b * b + 16.0 * alpha * n)) / (8.0 * alpha);
    double scale = std::max(width, y > 0.0 ? std::sqrt(y) : 0.0);
    auto f = [=](double x) {
        if (x == 0.0) return n == 0 ? std::exp(-shift) : 0.0;
        double x2 = x * x;
        return std::exp(n * std::log(x) - alpha * x2 * x2 - b * x2 - shift);
    };
    return 2.0 * quad::half_line(f, scale, rel_tol, 0.0).value;
}

}  // namespace

double quartic_moment(int n, double alpha, double beta_coef, const TruncationPolicy& policy) {
    if (n < 0) throw DomainError("moment order must be nonnegative");
    if (!(alpha > 0.0)) throw DomainError("quartic moment requires alpha > 0");
    if (n % 2 == 1) return 0.0;
    return even_moment(n, alpha, beta_coef, 0.0, policy.quad_rel_tol);
}

double pcf_scaled_general(double mu, double z, const TruncationPolicy& policy) {
    if (!(mu > 0.0)) throw DomainError("scaled parabolic cylinder index must be positive");
    if (std::isinf(z) && z > 0) return 1.0;
    if (!(z > 0.0)) throw DomainError("scaled parabolic cylinder function requires z > 0");
    double alpha = 1.0 / (2.0 * z * z);
    double shift = std::lgamma(mu);
    double peak = std::sqrt(std::max(mu - 0.5, 0.0));
    double scale = std::max(1.0, peak);
    auto f = [=](double y) {
        if (y == 0.0) return mu == 0.5 ? std::exp(-shift) : 0.0;
        double y2 = y * y;
        return std::exp((2.0 * mu - 1.0) * std::log(y) - y2 - alpha * y2 * y2 - shift);
    };
    return 2.0 * quad::half_line(f, scale, policy.quad_rel_tol, 0.0).value;
}

double pcf_scaled_ref(int m, double z, const TruncationPolicy& policy) {
    if (m < 0) throw DomainError("parabolic cylinder index m must be nonnegative");
    return pcf_scaled_general(m + 0.5, z, policy);
}

double pcf_exp_scaled(int m, double z, const TruncationPolicy& policy) {
    if (m < 0) throw DomainError("parabolic cylinder index m must be nonnegative");
    return even_moment(2 * m, 0.5, z, std::lgamma(m + 0.5), policy.quad_rel_tol);
}

double pcf_scaled_poincare(int m, double z, int J) {
    if (m < 0 || J < 0) throw DomainError("poincare expansion needs m >= 0 and J >= 0");
    if (!(z > 0.0)) throw DomainError("poincare expansion requires z > 0");
    double sum = 0.0;
    for (int j = 0; j <= J; ++j) sum += pcf_poincare_next_term(m, z, j - 1);
    return sum;
}

double pcf_poincare_next_term(int m, double z, int J) {
    int j = J + 1;
    double t = pochhammer(m + 0.5, 2 * j) / std::tgamma(j + 1.0) / std::pow(2.0 * z * z, j);
    return (j % 2 == 0) ? t : -t;
}

double j1_quartic(double a, double b, double c, const TruncationPolicy& policy) {
    if (!(a > 0.0)) throw DomainError("j1_quartic requires a > 0");
    double s = std::sqrt(2.0 * a);
    double xi = c * c / (4.0 * s);
    double z = b / s;
    double sum = 0.0;
    double term_coef = 1.0;  // xi^m / m!
    int small = 0;
    for (int m = 0; m < policy.series_cutoff; ++m) {
        if (m > 0) term_coef *= xi / m;
        double t = term_coef == 0.0 ? 0.0 : term_coef * pcf_exp_scaled(m, z, policy);
        sum += t;
        if (std::abs(t) <= policy.quad_abs_tol * std::max(1.0, std::abs(sum))) {
            if (++small == 2) return std::sqrt(std::numbers::pi) * std::pow(2.0 * a, -0.25) * sum;
        } else {
            small = 0;
        }
    }
    throw AccuracyError("j1_quartic series did not converge within series_cutoff terms",
                        std::numeric_limits<double>::infinity(), policy.quad_abs_tol);
}

}  // namespace anhosc
