#include "anhosc/validation.hpp"

#include "anhosc/algebra.hpp"
#include "anhosc/continuum.hpp"
#include "anhosc/correction.hpp"
#include "anhosc/errors.hpp"
#include "anhosc/lattice.hpp"
#include "anhosc/matrixrec.hpp"
#include "anhosc/quadrature.hpp"
#include "anhosc/specfun.hpp"
#include "anhosc/spectral.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace anhosc {

bool SuiteReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

using Checks = std::vector<Check>;

void add(Checks& out, std::string name, double measured, double tol) {
    out.push_back({std::move(name), std::isfinite(measured) && measured <= tol, measured, tol});
}

double rel(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

ModelParams mp(double a, double b, double c, double beta, double xf) {
    ModelParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.beta = beta;
    p.x_f = xf;
    return p;
}

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

Checks suite_specfun() {
    Checks out;
    TruncationPolicy pol;
    add(out, "pochhammer(1.5,2)", std::abs(pochhammer(1.5, 2) - 3.75), 1e-15);
    add(out, "coeff_a(1,2)", std::abs(coeff_a(1, 2) - 3.0), 1e-15);
    add(out, "quartic_moment n=0", rel(quartic_moment(0, 1.0, 0.0, pol), std::tgamma(0.25) / 2), 1e-9);
    add(out, "quartic_moment n=2", rel(quartic_moment(2, 1.0, 0.0, pol), std::tgamma(0.75) / 2), 1e-9);
    for (int m = 0; m <= 3; ++m)
        for (int J = 0; J <= 4; ++J) {
            const double z = 20.0;
            const double err = std::abs(pcf_scaled_poincare(m, z, J) - pcf_scaled_ref(m, z, pol));
            add(out, "poincare remainder m=" + std::to_string(m) + " J=" + std::to_string(J),
                err / std::abs(pcf_poincare_next_term(m, z, J)), 1.0);
        }
    for (double b : {0.5, -0.4}) {
        const double a = 0.3, c = 0.7;
        auto f = [&](double x) { return std::exp(-a * x * x * x * x - b * x * x - c * x); };
        const double ref = quad::real_line(f, 0.0, 1.0, 1e-12, 1e-15).value;
        add(out, "j1_quartic b=" + fmt_num(b), rel(j1_quartic(a, b, c, pol), ref), 1e-9);
    }
    return out;
}

Checks suite_oracle() {
    Checks out;
    TruncationPolicy pol;
    for (int N : {2, 3})
        for (double a : {0.0, 0.1})
            for (double b : {0.5, 1.0}) {
                ModelParams p = mp(a, b, 1.0, 0.3, 0.2);
                add(out,
                    "series vs quadrature N=" + std::to_string(N) + " a=" + fmt_num(a) + " b=" + fmt_num(b),
                    rel(wn_series_exact(p, N, pol), wn_quadrature(p, N, pol)), 1e-6);
            }
    ModelParams h = mp(0.0, 1.0, 1.0, 1.0, 0.5);
    const double gy = std::pow(prefactor_finite_N(h, 8), -0.5) * std::exp(exponent_finite_N(h, 8));
    add(out, "leading term a=0 vs Gelfand-Yaglom N=8", rel(wn_leading(h, 8, 3, pol), gy), 1e-12);
    return out;
}

Checks suite_continuum() {
    Checks out;
    TruncationPolicy pol;
    for (double b : {0.5, 1.0, 2.0}) {
        ModelParams p = mp(0.0, b, 1.0, 1.0, 0.7);
        const double g = std::sqrt(2.0 * b);
        const double pref = 2.0 * std::numbers::pi * std::sinh(g) / g;
        const double ex = -0.5 * g / std::tanh(g) * p.x_f * p.x_f;
        add(out, "prefactor N=512 b=" + fmt_num(b), rel(prefactor_finite_N(p, 512), pref), 1e-4);
        add(out, "exponent N=512 b=" + fmt_num(b), rel(exponent_finite_N(p, 512), ex), 1e-2);
    }
    for (double gb : {0.5, 1.0, 2.0}) {
        ModelParams p = mp(1.0, 0.5 * gb * gb, 1.0, 1.0, 1.0);
        NestedIntegrator in(p, pol);
        const double q = kernel_Q(1.0, p);
        add(out, "quartic ratio closed form gamma*beta=" + fmt_num(gb),
            rel(quartic_ratio_closed_form(p), in.integral({0}) / std::pow(q, 4)), 1e-10);
    }
    add(out, "quartic ratio flat limit", rel(quartic_ratio_closed_form(mp(1.0, 1e-8, 1.0, 0.8, 1.0)), 0.8 / 5),
        1e-6);
    ModelParams trig = mp(1.0, -2.0, 1.0, 1.0, 1.0);
    add(out, "quartic ratio trigonometric branch",
        rel(quartic_ratio_closed_form(trig),
            NestedIntegrator(trig, pol).integral({0}) / std::pow(kernel_Q(1.0, trig), 4)),
        1e-10);
    return out;
}

Checks suite_correction() {
    Checks out;
    TruncationPolicy pol;
    int bad = 0;
    for (int m = 0; m <= 4; ++m)
        for (int x = -2; x <= 6; ++x)
            if (sigma_defining_exact(m, x) != sigma_table_exact(m, x)) ++bad;
    add(out, "sigma table vs defining sum", bad, 0);
    bad = 0;
    for (int m = 1; m <= 4; ++m)
        for (int x = -2; x <= 8; ++x)
            if (f_defining_exact(m, x) != f_table_exact(m, x)) ++bad;
    add(out, "F table vs Gamma ratio", bad, 0);
    bad = 0;
    for (int nu = 0; nu <= 4; ++nu)
        for (int p = 0; p <= 4; ++p)
            for (const MultiIndex& mi : enumerate_multi_indices(nu, p))
                if (sigma_product_exact(mi) != f_product_exact(mi)) ++bad;
    add(out, "factorization identity", bad, 0);
    bad = 0;
    for (int nu = 0; nu <= 5; ++nu)
        for (int p = 0; p <= 4 * nu; ++p)
            if (static_cast<std::int64_t>(enumerate_multi_indices(nu, p).size()) != count_multi_indices(nu, p)) ++bad;
    add(out, "multi-index count", bad, 0);
    add(out, "p=2 coefficient mismatches", static_cast<double>(p2_coefficient_report().size()), 0);

    for (double g : {0.7, 1.0})
        for (double beta : {0.8, 1.0}) {
            ModelParams p = mp(1.0, 0.5 * g * g, 1.0, beta, 1.0);
            NestedIntegrator in(p, pol);
            double worst = 0.0;
            for (int x = 0; x <= 4; ++x)
                for (int y = 0; y <= 4; ++y)
                    worst = std::max(worst, std::abs(in.integral({x, y}) + in.integral({y, x}) -
                                                     in.integral({x}) * in.integral({y})));
            add(out, "two-letter shuffle gamma=" + fmt_num(g) + " beta=" + fmt_num(beta), worst, 1e-8);
        }
    for (double b : {0.5, 1.0, -1.0})
        for (double xf : {0.0, 0.5, 1.0}) {
            ModelParams p = mp(0.3, b, 1.0, 1.0, xf);
            const double s = correction_series(p, pol);
            const double e = assembly_p0(p, pol) + assembly_p1(p, pol) + assembly_p2(p, pol);
            add(out, "series vs assemblies b=" + fmt_num(b) + " xf=" + fmt_num(xf), std::abs(s - e), 1e-9);
        }
    return out;
}

Checks suite_algebra() {
    Checks out;
    TruncationPolicy pol;
    const ZeroPattern pats[] = {ZeroPattern::alpha_a,         ZeroPattern::alpha_a_a,
                                ZeroPattern::alpha_a_beta,    ZeroPattern::alpha_beta_a,
                                ZeroPattern::alpha_a_gamma_a, ZeroPattern::alpha_beta_a_a};
    for (double g : {0.7, 1.3})
        for (double beta : {0.8, 1.2}) {
            ModelParams p = mp(1.0, 0.5 * g * g, 1.0, beta, 1.0);
            NestedIntegrator in(p, pol);
            for (ZeroPattern pat : pats) {
                double worst = 0.0;
                for (int n = pattern_length(pat); n <= 5; ++n)
                    for (auto [al, be, a] : {std::array{1, 2, 0}, std::array{3, 4, 0}, std::array{2, 0, 1}}) {
                        const double lhs =
                            in.integral(pattern_word(pat, al, be, a)) * in.integral(IndexWord(n - pattern_length(pat), a));
                        const double rhs = evaluate_combination(reduce_against_zeros(pat, n, al, be, a), 0.0, in);
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
                add(out, pattern_name(pat) + " gamma=" + fmt_num(g) + " beta=" + fmt_num(beta), worst, 1e-8);
            }
            double worst = 0.0;
            for (int n = 1; n <= 4; ++n)
                worst = std::max(worst, std::abs(evaluate_combination(repeated_word(0, n), 0.0, in) -
                                                 to_double(repeated_word_factor(n)) * std::pow(in.integral({0}), n)));
            add(out, "repeated word gamma=" + fmt_num(g) + " beta=" + fmt_num(beta), worst, 1e-8);
        }
    return out;
}

Checks suite_matrix() {
    Checks out;
    for (double b : {0.5, 1.0})
        for (int N : {8, 16}) {
            ModelParams p = mp(0.1, b, 1.0, 1.0, 0.5);
            MatrixLattice lat = MatrixLattice::build(p, N);
            double worst = 0.0;
            for (int mu = 0; mu <= 3; ++mu) {
                const LambdaTable table(lat.state, 6, mu);
                for (int L = 1; L <= 6; ++L)
                    for (int q = 0; q <= 2 * mu; ++q)
                        worst = std::max(worst, rel(lambda_from_matrix(L, mu, q, lat), table(L, mu, 2 * mu - q)));
            }
            add(out, "matrix crosscheck b=" + fmt_num(b) + " N=" + std::to_string(N), worst, 1e-10);
            double w2 = 0.0;
            for (int i3 = 0; i3 <= 2; ++i3)
                for (int i2 = 0; i2 <= i3; ++i2)
                    for (int q = 0; q <= 2 * i3; ++q)
                        for (int l = 0; l <= std::min(q, 2 * i2); ++l) {
                            auto [lhs, rhs] = two_matrix_product_identity(i2, i3, q, l, lat);
                            w2 = std::max(w2, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
                        }
            add(out, "two-matrix product b=" + fmt_num(b) + " N=" + std::to_string(N), w2, 1e-12);
        }
    return out;
}

Checks suite_spectral() {
    Checks out;
    TruncationPolicy pol;
    for (double g : {0.5, 1.0, 2.0}) {
        const std::vector<double> found = locate_poles_numeric(g, 8.0 * g);
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n) {
            const double target = (2 * n + 0.5) * g;
            double best = INFINITY;
            for (double e : found) best = std::min(best, std::abs(e - target));
            worst = std::max(worst, best);
        }
        add(out, "pole positions gamma=" + fmt_num(g), worst, 1e-8);
    }
    for (double a : {0.1, 0.5}) {
        ModelParams p = mp(a, 1.0, 1.0, 1.0, 0.0);
        TruncationPolicy p0 = pol;
        p0.p_max = 0;
        auto f = [&](double x) {
            ModelParams q = p;
            q.x_f = x;
            return full_propagator(q, p0).value;
        };
        const double direct = quad::real_line(f, 0.0, 1.0, 1e-11, 1e-15).value;
        add(out, "zero-momentum transform a=" + fmt_num(a), rel(x_fourier_zero_momentum(p, pol), direct), 1e-6);
    }
    return out;
}

const std::map<std::string, std::function<Checks()>>& registry() {
    static const std::map<std::string, std::function<Checks()>> r = {
        {"specfun", suite_specfun},     {"oracle", suite_oracle}, {"continuum", suite_continuum},
        {"correction", suite_correction}, {"algebra", suite_algebra}, {"matrix", suite_matrix},
        {"spectral", suite_spectral},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"specfun", "oracle",  "continuum", "correction",
                                                   "algebra", "matrix", "spectral"};
    return names;
}

bool is_known_suite(const std::string& name) {
    return name == "all" || registry().count(name) > 0;
}

SuiteReport run_suite(const std::string& name) {
    if (!is_known_suite(name)) throw DomainError("unknown suite: " + name);
    SuiteReport rep{name, {}};
    for (const std::string& s : suite_names()) {
        if (name != "all" && name != s) continue;
        Checks c = registry().at(s)();
        for (Check& k : c) {
            if (name == "all") k.name = s + ": " + k.name;
            rep.checks.push_back(std::move(k));
        }
    }
    return rep;
}

}  // namespace anhosc
