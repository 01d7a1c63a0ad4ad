#include "anhosc/continuum.hpp"

#include "anhosc/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace anhosc {

FrequencyBranch FrequencyBranch::of(const ModelParams& params) {
    double g2 = params.gamma_sq();
    Branch br = g2 > 0.0 ? Branch::hyperbolic : (g2 < 0.0 ? Branch::trigonometric : Branch::flat);
    return {g2, br};
}

double sinhc(double u) {
    if (std::abs(u) < 1e-2) {
        // sum u^n / (2n+1)!
        double term = 1.0, sum = 1.0;
        for (int n = 1; n < 10; ++n) {
            term *= u / ((2.0 * n) * (2.0 * n + 1.0));
            sum += term;
        }
        return sum;
    }
    double r = std::sqrt(std::abs(u));
    return u > 0.0 ? std::sinh(r) / r : std::sin(r) / r;
}

double xcothx(double u) {
    if (std::abs(u) < 1e-2) {
        return 1.0 + u * (1.0 / 3.0 + u * (-1.0 / 45.0 + u * (2.0 / 945.0 +
                     u * (-1.0 / 4725.0 + u * (2.0 / 93555.0 + u * (-1382.0 / 638512875.0))))));
    }
    double r = std::sqrt(std::abs(u));
    return u > 0.0 ? r / std::tanh(r) : r * std::cos(r) / std::sin(r);
}

double s_of(double t, double gamma_sq) { return t * sinhc(gamma_sq * t * t); }

double g_of(double t, double gamma_sq) { return xcothx(gamma_sq * t * t) / t; }

void check_frequency(const ModelParams& params) {
    double g2 = params.gamma_sq();
    if (g2 >= 0.0) return;
    double theta = std::sqrt(-g2) * params.beta;
    if (theta >= std::numbers::pi - 1e-6)
        throw SingularFrequencyError("|gamma| beta reached pi: harmonic propagator vanishes");
}

double mehler_kernel(double k, double x_i, double x_f, double nu) {
    if (!(k > 0.0) || !(nu > 0.0)) throw DomainError("mehler kernel needs k > 0 and nu > 0");
    double sh = std::sinh(nu);
    return std::sqrt(k / (2.0 * std::numbers::pi * sh)) *
           std::exp(-k * (x_i * x_i + x_f * x_f) / (2.0 * std::tanh(nu)) + k * x_i * x_f / sh);
}

HarmonicFactor harmonic_fixed_origin(const ModelParams& params) {
    params.validate();
    check_frequency(params);
    const double g2 = params.gamma_sq();
    const double s = s_of(params.beta, g2);
    const double g = g_of(params.beta, g2);
    return {1.0 / std::sqrt(2.0 * std::numbers::pi * s / params.c),
            -0.5 * params.c * g * params.x_f * params.x_f};
}

namespace {

constexpr double kCloseRoots = 1e-3;

struct Roots {
    double delta, eps, sigma, s, rho1, rho2;
};

Roots roots(const ModelParams& params, int N) {
    params.validate();
    if (N < 1) throw DomainError("N must be positive");
    Roots r{};
    r.delta = params.beta / N;
    r.eps = params.b * r.delta * r.delta / params.c;
    if (1.0 + r.eps <= 0.0) throw SingularLatticeError("1 + b delta^2 / c must be positive", -1);
    r.sigma = 1.0 / (2.0 * (1.0 + r.eps));
    double disc = 1.0 - 4.0 * r.sigma * r.sigma;
    if (disc < 0.0) throw SingularLatticeError("4 sigma^2 > 1: characteristic roots are complex", -1);
    r.s = std::sqrt(disc);
    r.rho1 = 0.5 * (1.0 + r.s);
    r.rho2 = 0.5 * (1.0 - r.s);
    return r;
}

}  // namespace

double big_omega(int n, const ModelParams& params, int N) {
    if (n < 0) throw DomainError("Omega index must be nonnegative");
    const Roots r = roots(params, N);
    const double sig2 = r.sigma * r.sigma;
    if (r.s < kCloseRoots) {
        double prev = 1.0, cur = 1.0 - sig2;
        if (n == 0) return prev;
        for (int k = 2; k <= n; ++k) {
            double next = cur - sig2 * prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    const double w1 = 0.5 * (1.0 + (1.0 - 2.0 * sig2) / r.s);
    const double w2 = 0.5 * (1.0 - (1.0 - 2.0 * sig2) / r.s);
    return w1 * std::pow(r.rho1, n) + w2 * std::pow(r.rho2, n);
}

double prefactor_finite_N(const ModelParams& params, int N) {
    if (N < 2) throw DomainError("prefactor_finite_N needs N >= 2");
    const Roots r = roots(params, N);
    const double sig2 = r.sigma * r.sigma;
    const double k = 2.0 * (1.0 + r.eps);
    const int n = N - 2;
    double scaled;  // k^n Omega_n
    if (r.s < kCloseRoots) {
        // k sigma = 1, so k^n Omega_n obeys y_n = k y_{n-1} - y_{n-2}
        double prev = 1.0, cur = k * (1.0 - sig2);
        if (n == 0) cur = prev;
        for (int i = 2; i <= n; ++i) {
            double next = k * cur - prev;
            prev = cur;
            cur = next;
        }
        scaled = cur;
    } else {
        const double w1 = 0.5 * (1.0 + (1.0 - 2.0 * sig2) / r.s);
        const double w2 = 0.5 * (1.0 - (1.0 - 2.0 * sig2) / r.s);
        scaled = w1 * std::pow(k * r.rho1, n) + w2 * std::pow(k * r.rho2, n);
    }
    return 2.0 * std::numbers::pi * r.delta / params.c * k * scaled;
}

namespace {

double q_seq(int n, const ModelParams& params, int N, double sign) {
    if (n < 0) throw DomainError("Q index must be nonnegative");
    const Roots r = roots(params, N);
    if (r.s == 0.0) throw SingularLatticeError("Q_n degenerates at 4 sigma^2 = 1", -1);
    const double u = (r.s - 1.0) / (r.s + 1.0);  // u2 / u1
    return std::pow(r.rho1 / r.sigma, n) + sign * u * std::pow(r.rho2 / r.sigma, n);
}

}  // namespace

double bigQ(int n, const ModelParams& params, int N) { return q_seq(n, params, N, 1.0); }

double bigQ_tilde(int n, const ModelParams& params, int N) { return q_seq(n, params, N, -1.0); }

double exponent_finite_N(const ModelParams& params, int N) {
    if (N < 2) throw DomainError("exponent_finite_N needs N >= 2");
    const Roots r = roots(params, N);
    double inv_omega;
    if (r.s < kCloseRoots) {
        double w = 1.0;
        for (int i = 1; i <= N - 2; ++i) w = 1.0 - r.sigma * r.sigma / w;
        inv_omega = 1.0 / w;
    } else {
        inv_omega = bigQ(N - 2, params, N) / (r.sigma * bigQ(N - 1, params, N));
    }
    const double x2 = params.x_f * params.x_f;
    const double xi = params.c * x2 / (4.0 * r.delta * (1.0 + r.eps)) * inv_omega;
    return -params.a * r.delta * x2 * x2 - (0.5 * params.c / r.delta + params.b * r.delta) * x2 + xi;
}

double kernel_d(double tau, const ModelParams& params) {
    if (!(tau > 0.0) || tau > params.beta) throw DomainError("kernel_d needs tau in (0, beta]");
    check_frequency(params);
    const double g2 = params.gamma_sq();
    return 0.5 * (g_of(tau, g2) - g_of(params.beta, g2));
}

double kernel_t_d(double tau, const ModelParams& params) {
    if (tau < 0.0 || tau > params.beta) throw DomainError("kernel_t_d needs tau in [0, beta]");
    const double g2 = params.gamma_sq();
    return 0.5 * (xcothx(g2 * tau * tau) - tau * g_of(params.beta, g2));
}

double kernel_Q(double tau, const ModelParams& params) {
    if (tau < 0.0 || tau > params.beta) throw DomainError("kernel_Q needs tau in [0, beta]");
    check_frequency(params);
    return 2.0 * s_of(tau, params.gamma_sq());
}

double quartic_ratio_closed_form(const ModelParams& params) {
    params.validate();
    check_frequency(params);
    const double beta = params.beta;
    const double u = params.gamma_sq() * beta * beta;
    if (std::abs(u) < 1.0) {
        // numerator / y = sum_{k>=2} (16^k - 4^{k+1}) u^k / (2k+1)!
        double sum = 0.0;
        double upow = 1.0;       // u^{k-2}
        double fact = 120.0;     // (2k+1)! at k = 2
        double p16 = 256.0, p4 = 64.0;
        for (int k = 2; k < 40; ++k) {
            double term = (p16 - p4) * upow / fact;
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            upow *= u;
            fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
            p16 *= 16.0;
            p4 *= 4.0;
        }
        double sc = sinhc(u);
        return beta * sum / (8.0 * sc * sc * sc * sc);
    }
    if (u > 0.0) {
        const double y = std::sqrt(u);
        const double gamma = y / beta;
        const double e2 = std::exp(-2.0 * y);
        const double num = 3.0 * y * e2 * e2 - (e2 - e2 * e2 * e2) + (1.0 - std::pow(e2, 4)) / 8.0;
        const double h = 0.5 * (1.0 - e2);
        return num / (8.0 * gamma * h * h * h * h);
    }
    const double th = std::sqrt(-u);
    const double kappa = th / beta;
    const double sn = std::sin(th);
    return (3.0 * th - 2.0 * std::sin(2.0 * th) + 0.25 * std::sin(4.0 * th)) /
           (8.0 * kappa * sn * sn * sn * sn);
}

}  // namespace anhosc
