#include "anhosc/correction.hpp"

#include "anhosc/continuum.hpp"
#include "anhosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace anhosc {

int MultiIndex::p() const {
    int s = 0;
    for (int x : m) s += x;
    return s;
}

std::vector<MultiIndex> enumerate_multi_indices(int nu, int p) {
    if (nu < 0 || p < 0) throw DomainError("multi-index length and order must be nonnegative");
    std::vector<MultiIndex> out;
    IndexWord cur(nu, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nu) {
            if (left == 0) out.push_back({cur});
            return;
        }
        int room = 4 * (nu - pos - 1);
        for (int v = 0; v <= std::min(4, left); ++v) {
            if (left - v > room) continue;
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, p);
    return out;
}

std::int64_t count_multi_indices(int nu, int p) {
    if (nu == 0) return p == 0 ? 1 : 0;
    std::int64_t total = 0;
    for (int k = 0; 5 * k <= p && k <= nu; ++k) {
        std::int64_t term = binomial(nu, k) * binomial(p - 5 * k + nu - 1, nu - 1);
        total += (k % 2 ? -term : term);
    }
    return total;
}

namespace {

Rational falling(int x, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(x - i);
    return r;
}

void check_m(int m, int lo) {
    if (m < lo || m > 4) throw DomainError("multi-index entry out of range");
}

}  // namespace

Rational sigma_defining_exact(int m, int x) {
    check_m(m, 0);
    static const Rational c[5] = {Rational(0), Rational(0), Rational(3, 4), Rational(3), Rational(1)};
    Rational s(0);
    for (int alpha = std::max(2, m); alpha <= 4; ++alpha)
        s += c[alpha] * Rational(binomial(alpha, m)) * falling(x, alpha - 2);
    return s;
}

Rational sigma_table_exact(int m, int x) {
    check_m(m, 0);
    const Rational X(x);
    switch (m) {
        case 0: return (X + Rational(1, 2)) * (X + Rational(3, 2));
        case 1: return Rational(4) * (X + Rational(1, 2)) * (X + Rational(3, 4));
        case 2: return Rational(6) * X * (X - 1) + Rational(9) * X + Rational(3, 4);
        case 3: return Rational(4) * (X - Rational(1, 4)) * X;
        default: return (X - 1) * X;
    }
}

double sigma_factor(int m, int j, int p_j, int nu) {
    return to_double(sigma_defining_exact(m, 2 * (nu - j) - p_j));
}

Rational f_table_exact(int m, int x) {
    check_m(m, 1);
    const Rational X(x);
    switch (m) {
        case 1: return Rational(4) * (X + Rational(3, 4));
        case 2: {
            Rational y = X + Rational(1, 4);
            return Rational(6) * (y * y + Rational(1, 16));
        }
        case 3: return Rational(4) * X * (X - Rational(1, 2)) * (X - Rational(1, 4));
        default: return X * (X - 1) * (X - Rational(1, 2)) * (X - Rational(3, 2));
    }
}

Rational f_defining_exact(int m, int x) {
    check_m(m, 1);
    // Gamma(x + 1/2) / Gamma(x - m + 5/2) for half-integer arguments
    Rational ratio(1);
    const Rational h = Rational(x) + Rational(1, 2);
    if (m == 1)
        ratio = Rational(1) / h;
    else
        for (int i = 1; i <= m - 2; ++i) ratio *= h - Rational(i);
    return ratio * sigma_defining_exact(m, x);
}

double f_factor(int m, int j, int p_j, int nu) {
    return to_double(f_table_exact(m, 2 * (nu - j) - p_j));
}

Rational sigma_product_exact(const MultiIndex& idx) {
    const int nu = idx.nu();
    int pj = idx.p();
    Rational prod(1);
    for (int j = 1; j <= nu; ++j) {
        pj -= idx.m[j - 1];
        prod *= sigma_defining_exact(idx.m[j - 1], 2 * (nu - j) - pj);
    }
    return prod;
}

Rational f_product_exact(const MultiIndex& idx) {
    const int nu = idx.nu();
    int pj = idx.p();
    Rational prod = rising(Rational(1, 2), 2 * nu - idx.p());
    for (int j = 1; j <= nu; ++j) {
        const int m = idx.m[j - 1];
        pj -= m;
        if (m != 0) prod *= f_defining_exact(m, 2 * (nu - j) - pj);
    }
    return prod;
}

// ---------------------------------------------------------------------------
// Piecewise Chebyshev machinery

namespace {

constexpr int kDeg = 32;  // Chebyshev-Lobatto nodes per panel: kDeg + 1
constexpr int kNodes = kDeg + 1;
constexpr int kMaxDepth = 60;

struct Cheb {
    double x[kNodes];                    // cos(pi k / n), node 0 at +1
    double coef[kNodes][kNodes];         // values -> Chebyshev coefficients
    double tail[kNodes][kNodes];         // values -> int_{x_k}^{1} interpolant
    double bary[kNodes];

    Cheb() {
        const long double pi = std::numbers::pi_v<long double>;
        for (int k = 0; k < kNodes; ++k) {
            x[k] = static_cast<double>(std::cos(pi * k / kDeg));
            bary[k] = ((k % 2) ? -1.0 : 1.0) * ((k == 0 || k == kDeg) ? 0.5 : 1.0);
        }
        for (int j = 0; j < kNodes; ++j) {
            for (int k = 0; k < kNodes; ++k) {
                long double w = (k == 0 || k == kDeg) ? 0.5L : 1.0L;
                long double v = 2.0L / kDeg * w * std::cos(pi * j * k / kDeg);
                if (j == 0 || j == kDeg) v *= 0.5L;
                coef[j][k] = static_cast<double>(v);
            }
        }
        for (int m = 0; m < kNodes; ++m) {
            long double c[kNodes + 2] = {};
            for (int j = 0; j < kNodes; ++j) {
                long double w = (m == 0 || m == kDeg) ? 0.5L : 1.0L;
                long double v = 2.0L / kDeg * w * std::cos(pi * j * m / kDeg);
                if (j == 0 || j == kDeg) v *= 0.5L;
                c[j] = v;
            }
            long double b[kNodes + 1] = {};
            b[1] = c[0] - c[2] / 2.0L;
            for (int j = 2; j <= kDeg + 1; ++j) b[j] = (c[j - 1] - c[j + 1]) / (2.0L * j);
            long double f1 = 0.0L;
            for (int j = 1; j <= kDeg + 1; ++j) f1 += b[j];
            for (int k = 0; k < kNodes; ++k) {
                long double fk = 0.0L;
                for (int j = 1; j <= kDeg + 1; ++j) fk += b[j] * std::cos(pi * j * k / kDeg);
                tail[k][m] = static_cast<double>(f1 - fk);
            }
        }
    }
};

const Cheb& cheb() {
    static const Cheb c;
    return c;
}

double trailing(const double* vals) {
    const Cheb& ch = cheb();
    double t = 0.0;
    for (int j = kDeg - 1; j <= kDeg; ++j) {
        double cj = 0.0;
        for (int k = 0; k < kNodes; ++k) cj += ch.coef[j][k] * vals[k];
        t = std::max(t, std::abs(cj));
    }
    return t;
}

}  // namespace

NestedIntegrator::NestedIntegrator(const ModelParams& params, const TruncationPolicy& policy)
    : params_(params) {
    params.validate();
    policy.validate();
    check_frequency(params);
    const Cheb& ch = cheb();
    const double beta = params.beta;

    double scale[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i <= 1024; ++i) {
        double t = beta * i / 1024.0;
        for (int m = 0; m <= 4; ++m) scale[m] = std::max(scale[m], std::abs(J(m, t)));
    }
    for (double& s : scale) s = std::max(s, 1e-300);
    const double thr = std::max(1e-3 * policy.quad_rel_tol, 1e-14);

    jvals_.assign(5, {});
    edges_.assign(1, 0.0);
    bool failed = false;
    std::function<void(double, double, int)> build = [&](double lo, double hi, int depth) {
        double vals[5][kNodes];
        double pts[kNodes];
        for (int k = 0; k < kNodes; ++k) {
            pts[k] = lo + 0.5 * (hi - lo) * (1.0 + ch.x[k]);
            for (int m = 0; m <= 4; ++m) vals[m][k] = J(m, pts[k]);
        }
        double worst = 0.0;
        for (int m = 0; m <= 4; ++m) worst = std::max(worst, trailing(vals[m]) / scale[m]);
        if (worst > thr && depth < kMaxDepth) {
            double mid = 0.5 * (lo + hi);
            build(lo, mid, depth + 1);
            build(mid, hi, depth + 1);
            return;
        }
        if (worst > thr) failed = true;
        achieved_ = std::max(achieved_, worst);
        edges_.push_back(hi);
        for (int k = 0; k < kNodes; ++k) {
            nodes_.push_back(pts[k]);
            for (int m = 0; m <= 4; ++m) jvals_[m].push_back(vals[m][k]);
        }
    };
    build(0.0, beta, 0);
    if (failed)
        throw AccuracyError("nested integral grid could not resolve the kernels", achieved_, thr);
}

double NestedIntegrator::J(int m, double t) const {
    const double g2 = params_.gamma_sq();
    const double td = 0.5 * (xcothx(g2 * t * t) - t * g_of(params_.beta, g2));
    const double q = 2.0 * sinhc(g2 * t * t);
    const double q4 = q * q * q * q;
    return std::pow(td, m) * q4 * std::pow(t, 4 - m);
}

std::shared_ptr<const NestedIntegrator::Profile> NestedIntegrator::profile(const IndexWord& word) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(word);
        if (it != cache_.end()) return it->second;
    }
    const int P = panels();
    auto prof = std::make_shared<Profile>(nodes_.size(), 1.0);
    if (!word.empty()) {
        const IndexWord rest(word.begin() + 1, word.end());
        auto inner = profile(rest);
        const std::vector<double>& jm = jvals_[word.front()];
        const Cheb& ch = cheb();
        double offset = 0.0;
        for (int pnl = P - 1; pnl >= 0; --pnl) {
            const int base = pnl * kNodes;
            const double half = 0.5 * (edges_[pnl + 1] - edges_[pnl]);
            double h[kNodes];
            for (int k = 0; k < kNodes; ++k) h[k] = jm[base + k] * (*inner)[base + k];
            for (int k = 0; k < kNodes; ++k) {
                double acc = 0.0;
                for (int j = 0; j < kNodes; ++j) acc += ch.tail[k][j] * h[j];
                (*prof)[base + k] = offset + half * acc;
            }
            offset = (*prof)[base + kDeg];
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(word, prof);
    return it->second;
}

double NestedIntegrator::interpolate(const Profile& prof, double tau) const {
    auto it = std::upper_bound(edges_.begin(), edges_.end(), tau);
    int pnl = static_cast<int>(it - edges_.begin()) - 1;
    pnl = std::clamp(pnl, 0, panels() - 1);
    const double lo = edges_[pnl], hi = edges_[pnl + 1];
    const double x = 2.0 * (tau - lo) / (hi - lo) - 1.0;
    const Cheb& ch = cheb();
    const int base = pnl * kNodes;
    double num = 0.0, den = 0.0;
    for (int k = 0; k < kNodes; ++k) {
        double diff = x - ch.x[k];
        if (diff == 0.0) return prof[base + k];
        double w = ch.bary[k] / diff;
        num += w * prof[base + k];
        den += w;
    }
    return num / den;
}

double NestedIntegrator::integral(const IndexWord& word, double tau) const {
    if (tau < 0.0 || tau > params_.beta) throw DomainError("tau must lie in [0, beta]");
    for (int m : word) check_m(m, 0);
    if (word.empty()) return 1.0;
    auto prof = profile(word);
    if (tau == 0.0) return (*prof)[kDeg];  // left end of the first panel
    return interpolate(*prof, tau);
}

double nested_integral(const IndexWord& word, double tau, const ModelParams& params,
                       const TruncationPolicy& policy) {
    if (word.empty()) return 1.0;
    return NestedIntegrator(params, policy).integral(word, tau);
}

double universal_exponent(const ModelParams& params) {
    if (params.a == 0.0) return 0.0;
    const double x2 = params.x_f * params.x_f;
    return -params.a * x2 * x2 * quartic_ratio_closed_form(params);
}

// ---------------------------------------------------------------------------
// Series bookkeeping

std::vector<ReducedTerm> reduced_terms(int p) {
    if (p < 0) throw DomainError("correction order must be nonnegative");
    std::map<IndexWord, ReducedTerm> acc;
    if (p == 0) return {{IndexWord{}, Rational(1), 0}};

    // compositions of p into parts 1..4
    std::vector<IndexWord> comps;
    IndexWord cur;
    std::function<void(int)> compose = [&](int left) {
        if (left == 0) {
            comps.push_back(cur);
            return;
        }
        for (int v = 1; v <= std::min(4, left); ++v) {
            cur.push_back(v);
            compose(left - v);
            cur.pop_back();
        }
    };
    compose(p);

    for (const IndexWord& letters : comps) {
        const int mu = static_cast<int>(letters.size());
        // P(G) = prod_i F(m_i, 2 r_i - q_i), r_i = zeros after letter i + letters after it
        auto P = [&](const std::vector<int>& G) {
            Rational prod(1);
            for (int i = 0; i < mu; ++i) {
                int r = mu - 1 - i, q = 0;
                for (int l = i; l < mu; ++l) r += G[l];
                for (int l = i + 1; l < mu; ++l) q += letters[l];
                prod *= f_table_exact(letters[i], 2 * r - q);
            }
            return prod;
        };
        // all gap vectors g with |g| <= p; binomial-basis coefficient by forward differences
        std::vector<int> g(mu, 0);
        std::function<void(int, int)> over_g = [&](int i, int left) {
            if (i == mu) {
                Rational cg(0);
                std::vector<int> h(mu, 0);
                std::function<void(int, std::int64_t, int)> over_h = [&](int k, std::int64_t w, int sgn) {
                    if (k == mu) {
                        cg += Rational(sgn * w) * P(h);
                        return;
                    }
                    for (int v = 0; v <= g[k]; ++v) {
                        h[k] = v;
                        over_h(k + 1, w * binomial(g[k], v), ((g[k] - v) % 2) ? -sgn : sgn);
                    }
                };
                over_h(0, 1, 1);
                if (cg == Rational(0)) return;
                IndexWord word;
                int ell = mu;
                for (int k = 0; k < mu; ++k) {
                    word.push_back(letters[k]);
                    for (int z = 0; z < g[k]; ++z) word.push_back(0);
                    ell += g[k];
                }
                if (2 * ell < p)
                    throw std::logic_error("shuffle reduction produced a negative power of X");
                auto [it, ins] = acc.emplace(word, ReducedTerm{word, cg, ell});
                if (!ins) it->second.coefficient += cg;
                return;
            }
            for (int v = 0; v <= left; ++v) {
                g[i] = v;
                over_g(i + 1, left - v);
            }
        };
        over_g(0, p);
    }
    std::vector<ReducedTerm> out;
    for (auto& [w, t] : acc)
        if (t.coefficient != Rational(0)) out.push_back(t);
    return out;
}

std::vector<CorrectionTerm> direct_terms(int p, int J, const NestedIntegrator& integ) {
    const ModelParams& prm = integ.params();
    std::vector<CorrectionTerm> out;
    for (int nu = (p + 1) / 2; nu <= J; ++nu) {
        const double sign_a = std::pow(-prm.a, nu) * std::pow(prm.c, -p);
        for (const MultiIndex& mi : enumerate_multi_indices(nu, p)) {
            double prod = 1.0;
            int pj = p;
            for (int j = 1; j <= nu; ++j) {
                const int m = mi.m[j - 1];
                pj -= m;
                if (m != 0) prod *= f_factor(m, j, pj, nu);
            }
            if (prod == 0.0) continue;
            out.push_back({nu, p, sign_a * prod, integ.integral(mi.m), 2 * nu - p});
        }
    }
    return out;
}

double CorrectionSeries::polynomial_factor() const {
    double s = 0.0;
    for (double v : polynomial) s += v;
    return s;
}

double CorrectionSeries::value() const { return std::exp(exponent) * polynomial_factor(); }

CorrectionSeries correction_series_detailed(const ModelParams& params, const TruncationPolicy& policy) {
    params.validate();
    policy.validate();
    if (policy.p_max > 2 * policy.poincare_order)
        throw DomainError("p_max must not exceed twice the Poincare order");
    const NestedIntegrator integ(params, policy);
    CorrectionSeries cs;
    const double qb = kernel_Q(params.beta, params);
    cs.X = params.x_f * params.x_f / (qb * qb);
    cs.exponent = -params.a * integ.integral({0}) * cs.X * cs.X;
    const double ex = std::exp(cs.exponent);
    for (int p = 0; p <= policy.p_max; ++p) {
        double poly = 0.0;
        for (const ReducedTerm& t : reduced_terms(p)) {
            if (params.a == 0.0 && t.ell > 0) continue;
            poly += to_double(t.coefficient) * std::pow(-params.a, t.ell) *
                    std::pow(cs.X, 2 * t.ell - p) * std::pow(params.c, -p) * integ.integral(t.word);
        }
        double direct = 0.0;
        for (const CorrectionTerm& t : direct_terms(p, policy.poincare_order, integ))
            direct += t.coefficient * std::pow(cs.X, t.power_of_X) * t.integral_value;
        cs.polynomial.push_back(poly);
        cs.truncated.push_back(direct);
        cs.tail_estimates.push_back(std::abs(ex * poly - direct));
    }
    return cs;
}

double correction_series(const ModelParams& params, const TruncationPolicy& policy) {
    return correction_series_detailed(params, policy).value();
}

double assembly_p0(const ModelParams& params, const TruncationPolicy& policy) {
    const NestedIntegrator in(params, policy);
    const double q = kernel_Q(params.beta, params);
    const double X = params.x_f * params.x_f / (q * q);
    return std::exp(-params.a * in.integral({0}) * X * X);
}

double assembly_p1(const ModelParams& params, const TruncationPolicy& policy) {
    const NestedIntegrator in(params, policy);
    const double q = kernel_Q(params.beta, params);
    const double X = params.x_f * params.x_f / (q * q);
    const double a = params.a;
    const double ex = std::exp(-a * in.integral({0}) * X * X);
    return ex * (-3.0 * a * X * in.integral({1}) + 8.0 * a * a * X * X * X * in.integral({1, 0})) /
           params.c;
}

double assembly_p2(const ModelParams& params, const TruncationPolicy& policy) {
    const NestedIntegrator in(params, policy);
    const double q = kernel_Q(params.beta, params);
    const double X = params.x_f * params.x_f / (q * q);
    const double ma = -params.a;
    const double X2 = X * X, X4 = X2 * X2, X6 = X4 * X2;
    auto I = [&](const IndexWord& w) { return in.integral(w); };
    const double ex = std::exp(ma * I({0}) * X2);
    const double braces = 0.75 * ma * I({2}) + ma * ma * (30.0 * I({2, 0}) + 21.0 * I({1, 1})) * X2 +
                          ma * ma * ma * (48.0 * I({2, 0, 0}) + 144.0 * I({1, 1, 0}) + 24.0 * I({1, 0, 1})) * X4 +
                          64.0 * ma * ma * ma * ma * (I({1, 0, 1, 0}) + 2.0 * I({1, 1, 0, 0})) * X6;
    return ex * braces / (params.c * params.c);
}

std::map<IndexWord, Rational> published_p2_coefficients() {
    return {{{2}, Rational(3, 4)},       {{2, 0}, Rational(30)},       {{1, 1}, Rational(21)},
            {{2, 0, 0}, Rational(48)},   {{1, 1, 0}, Rational(144)},   {{1, 0, 1}, Rational(24)},
            {{1, 0, 1, 0}, Rational(64)}, {{1, 1, 0, 0}, Rational(128)}};
}

std::vector<CoefficientMismatch> p2_coefficient_report() {
    std::map<IndexWord, Rational> generic;
    for (const ReducedTerm& t : reduced_terms(2)) generic[t.word] = t.coefficient;
    const auto published = published_p2_coefficients();
    std::vector<CoefficientMismatch> out;
    for (const auto& [w, c] : published) {
        auto it = generic.find(w);
        Rational g = it == generic.end() ? Rational(0) : it->second;
        if (g != c) out.push_back({w, c, g});
    }
    for (const auto& [w, g] : generic)
        if (!published.count(w)) out.push_back({w, Rational(0), g});
    return out;
}

PropagatorResult full_propagator(const ModelParams& params, const TruncationPolicy& policy) {
    params.validate();
    policy.validate();
    PropagatorResult r;
    r.truncation = policy;
    const HarmonicFactor h = harmonic_fixed_origin(params);
    r.harmonic_prefactor = h.prefactor;
    r.harmonic_exponent = h.exponent;
    r.universal_exponent = universal_exponent(params);
    if (params.a == 0.0) {
        if (policy.p_max > 2 * policy.poincare_order)
            throw DomainError("p_max must not exceed twice the Poincare order");
        r.polynomial_factor = 1.0;
        r.tail_estimates.assign(policy.p_max + 1, 0.0);
    } else {
        const CorrectionSeries cs = correction_series_detailed(params, policy);
        r.polynomial_factor = cs.polynomial_factor();
        r.tail_estimates = cs.tail_estimates;
    }
    r.value = r.harmonic_prefactor * std::exp(r.harmonic_exponent + r.universal_exponent) *
              r.polynomial_factor;
    return r;
}

}  // namespace anhosc
