#include "anhosc/lattice.hpp"

#include "anhosc/errors.hpp"
#include "anhosc/quadrature.hpp"
#include "anhosc/specfun.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace anhosc {

LatticeState LatticeState::build(const ModelParams& params, int N) {
    params.validate();
    if (N < 2) throw DomainError("lattice state needs N >= 2");
    LatticeState s;
    s.params = params;
    s.N = N;
    s.delta = params.beta / N;
    s.eps = params.b * s.delta * s.delta / params.c;
    if (1.0 + s.eps <= 0.0) throw SingularLatticeError("1 + b delta^2 / c must be positive", -1);
    s.sigma = 1.0 / (2.0 * (1.0 + s.eps));
    s.z = params.a > 0.0 ? params.c * (1.0 + s.eps) / std::sqrt(2.0 * params.a * std::pow(s.delta, 3))
                         : std::numeric_limits<double>::infinity();
    s.omega.assign(1, 1.0);
    for (int i = 1; i <= N - 2; ++i) {
        double w = 1.0 - s.sigma * s.sigma / s.omega.back();
        if (!(w > 0.0))
            throw SingularLatticeError("omega_" + std::to_string(i) + " vanishes or changes sign", i);
        s.omega.push_back(w);
    }
    s.xi = params.c * params.x_f * params.x_f / (4.0 * s.delta * (1.0 + s.eps)) / s.omega[N - 2];
    return s;
}

double LatticeState::sigma_ratio(int i) const {
    if (i < 1 || i > N - 2) throw DomainError("sigma ratio index out of range");
    return sigma * sigma / (omega[i] * omega[i - 1]);
}

double discretized_action(const std::vector<double>& path, const ModelParams& params, int N) {
    if (N < 1 || static_cast<int>(path.size()) != N + 1)
        throw DomainError("path must hold N + 1 points");
    const double dt = params.beta / N;
    double e = 0.0;
    for (int i = 1; i <= N; ++i) {
        double v = (path[i] - path[i - 1]) / dt;
        double x2 = path[i] * path[i];
        e += dt * (0.5 * params.c * v * v + params.b * x2 + params.a * x2 * x2);
    }
    return e;
}

double wn_quadrature(const ModelParams& params, int N, const TruncationPolicy& policy) {
    params.validate();
    if (N < 1 || N > 4) throw DomainError("wn_quadrature supports 1 <= N <= 4");
    const double dt = params.beta / N;
    const double norm = std::pow(2.0 * std::numbers::pi * dt / params.c, -0.5 * N);
    std::vector<double> path(N + 1, 0.0);
    path[N] = params.x_f;
    if (N == 1) return norm * std::exp(-discretized_action(path, params, N));

    const double scale = std::sqrt(dt / params.c);
    std::function<double(int)> level = [&](int i) -> double {
        double tol = policy.quad_rel_tol * std::pow(0.1, i);
        // inner values far in the tails underflow; judge them against the peak size
        double abs_tol = policy.quad_abs_tol * std::pow(2.0 * std::numbers::pi * dt / params.c, 0.5 * (N - i));
        auto f = [&, i](double x) {
            path[i] = x;
            if (i == N - 1) return std::exp(-discretized_action(path, params, N));
            return level(i + 1);
        };
        return quad::real_line(f, params.x_f * i / N, scale, tol, abs_tol).value;
    };
    return norm * level(1);
}

namespace {

// Sum over k_1..k_{N-1} < M of the chained slice weights.
double chained_sum(int N, int M, const std::vector<double>& log_gd, double log_1pe, double log_end,
                   bool zero_end) {
    std::vector<double> v(1, 1.0);  // k_0 = 0
    for (int i = 1; i <= N - 1; ++i) {
        const bool last = (i == N - 1);
        std::vector<double> nv(M, 0.0);
        for (int k = 0; k < M; ++k) {
            if (last && zero_end && k > 0) break;
            double lw = -std::lgamma(2.0 * k + 1.0);
            lw += last ? (zero_end ? 0.0 : k * (log_end - log_1pe)) : -2.0 * k * log_1pe;
            double acc = 0.0;
            for (int kp = 0; kp < static_cast<int>(v.size()); ++kp) {
                if (v[kp] == 0.0) continue;
                acc += v[kp] * std::exp(lw + log_gd[kp + k]);
            }
            nv[k] = acc;
        }
        v.swap(nv);
    }
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

}  // namespace

SeriesValue wn_series_exact_detailed(const ModelParams& params, int N, const TruncationPolicy& policy) {
    params.validate();
    if (N < 2 || N > 4) throw DomainError("wn_series_exact supports 2 <= N <= 4");
    const LatticeState st = LatticeState::build(params, N);
    const int M = policy.series_cutoff;
    // log of Gamma(K + 1/2) * D_{-K-1/2}(z) for K = 0 .. 2M - 2
    std::vector<double> log_gd(2 * M - 1);
    for (int K = 0; K < 2 * M - 1; ++K)
        log_gd[K] = std::lgamma(K + 0.5) + std::log(pcf_scaled_ref(K, st.z, policy));

    const double log_1pe = std::log1p(st.eps);
    const bool zero_end = params.x_f == 0.0;
    const double log_end = zero_end ? 0.0 : std::log(params.c * params.x_f * params.x_f / st.delta);
    const double x2 = params.x_f * params.x_f;
    const double pref = std::pow(2.0 * std::numbers::pi * st.delta / params.c, -0.5) *
                        std::pow(2.0 * std::numbers::pi * (1.0 + st.eps), -0.5 * (N - 1)) *
                        std::exp(-params.a * st.delta * x2 * x2 -
                                 (0.5 * params.c / st.delta + params.b * st.delta) * x2);

    double s0 = chained_sum(N, M, log_gd, log_1pe, log_end, zero_end);
    double tail = 0.0;
    if (M >= 3) {
        double s1 = chained_sum(N, M - 1, log_gd, log_1pe, log_end, zero_end);
        double s2 = chained_sum(N, M - 2, log_gd, log_1pe, log_end, zero_end);
        double d1 = std::abs(s0 - s1), d2 = std::abs(s1 - s2);
        if (d1 == 0.0)
            tail = 0.0;
        else if (d2 > 0.0 && d1 < d2)
            tail = d1 * (d1 / d2) / (1.0 - d1 / d2);
        else
            tail = std::numeric_limits<double>::infinity();
    } else {
        tail = std::numeric_limits<double>::infinity();
    }
    return {pref * s0, pref * tail};
}

double wn_series_exact(const ModelParams& params, int N, const TruncationPolicy& policy) {
    SeriesValue r = wn_series_exact_detailed(params, N, policy);
    if (r.tail_estimate > policy.quad_rel_tol * std::abs(r.value))
        throw AccuracyError("wn_series_exact tail estimate exceeds tolerance", r.tail_estimate,
                            policy.quad_rel_tol * std::abs(r.value));
    return r.value;
}

LambdaTable::LambdaTable(const LatticeState& state, int lambda_max, int mu_max)
    : lambda_max_(lambda_max), mu_max_(mu_max) {
    if (lambda_max < 1 || lambda_max > state.N - 1)
        throw DomainError("Lambda must lie in 1..N-1 for the given lattice");
    if (mu_max < 0) throw DomainError("mu must be nonnegative");
    t_.resize(lambda_max + 1);
    t_[1].resize(mu_max + 1);
    for (int mu = 0; mu <= mu_max; ++mu)
        for (int i = 0; i <= 2 * mu; ++i) t_[1][mu].push_back(coeff_a(i, 2 * mu));
    for (int L = 2; L <= lambda_max; ++L) {
        const double w = 1.0 / state.omega[L - 1];
        const double r = state.sigma_ratio(L - 1);
        t_[L].resize(mu_max + 1);
        for (int mu = 0; mu <= mu_max; ++mu) {
            for (int p = 0; p <= 2 * mu; ++p) {
                double total = 0.0;
                for (int j = 0; j <= mu; ++j) {
                    double inner = 0.0;
                    for (int i = std::max(0, p - 2 * j); i <= 2 * mu - 2 * j; ++i)
                        inner += coeff_a(p, 2 * j + i) * t_[L - 1][mu - j][i] * std::pow(r, i);
                    total += static_cast<double>(binomial(mu, j)) * std::pow(w, 2 * j) * inner;
                }
                t_[L][mu].push_back(total);
            }
        }
    }
}

double LambdaTable::operator()(int Lambda, int mu, int p) const {
    if (Lambda < 1 || Lambda > lambda_max_ || mu < 0 || mu > mu_max_ || p < 0 || p > 2 * mu)
        throw DomainError("Lambda symbol index out of range");
    return t_[Lambda][mu][p];
}

double lambda_symbol(int Lambda, int mu, int p, const LatticeState& state) {
    if (mu < 0 || p < 0 || p > 2 * mu) throw DomainError("Lambda symbol index out of range");
    return LambdaTable(state, Lambda, mu)(Lambda, mu, p);
}

double wn_leading(const ModelParams& params, int N, int J, const TruncationPolicy& policy) {
    (void)policy;
    if (N < 2) throw DomainError("wn_leading needs N >= 2");
    if (J < 0) throw DomainError("Poincare order must be nonnegative");
    const LatticeState st = LatticeState::build(params, N);
    double log_pref = std::log(2.0 * std::numbers::pi * st.delta / params.c);
    for (int i = 0; i <= N - 2; ++i) log_pref += std::log(2.0 * st.omega[i] * (1.0 + st.eps));

    const int Jeff = params.a > 0.0 ? J : 0;
    const LambdaTable table(st, N - 1, Jeff);
    const double two_z2 = 2.0 * st.z * st.z;
    double series = 0.0;
    double nu_fact = 1.0;
    for (int nu = 0; nu <= Jeff; ++nu) {
        if (nu > 0) nu_fact *= nu;
        double inner = 0.0;
        for (int p = 0; p <= 2 * nu; ++p) inner += std::pow(st.xi, p) * table(N - 1, nu, p);
        series += ((nu % 2) ? -1.0 : 1.0) * inner / (nu_fact * std::pow(two_z2, nu));
    }
    const double x2 = params.x_f * params.x_f;
    const double expo = -params.a * st.delta * x2 * x2 -
                        (0.5 * params.c / st.delta + params.b * st.delta) * x2 + st.xi;
    return std::exp(-0.5 * log_pref + expo) * series;
}

}  // namespace anhosc
