#pragma once

#include "anhosc/params.hpp"
#include "anhosc/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace anhosc {

using IndexWord = std::vector<int>;

struct MultiIndex {
    IndexWord m;
    int p() const;
    int nu() const { return static_cast<int>(m.size()); }
};

// All (m_1..m_nu) with entries in 0..4 summing to p, in lexicographic order.
std::vector<MultiIndex> enumerate_multi_indices(int nu, int p);

// Number of such indices by inclusion-exclusion over the cap.
std::int64_t count_multi_indices(int nu, int p);

// Sigma(m, x) from the defining sum over alpha = max(2,m)..4 with
// c_2 = 3/4, c_3 = 3, c_4 = 1 and falling factorials for Gamma(x+1)/Gamma(x-alpha+3).
Rational sigma_defining_exact(int m, int x);
// Sigma(m, x) from the tabulated polynomial rows.
Rational sigma_table_exact(int m, int x);
// x = 2 (nu - j) - p_j
double sigma_factor(int m, int j, int p_j, int nu);

// F(m, x) for m in 1..4 from the tabulated rows.
Rational f_table_exact(int m, int x);
// F(m, x) = Gamma(x + 1/2) / Gamma(x - m + 5/2) * Sigma(m, x).
Rational f_defining_exact(int m, int x);
double f_factor(int m, int j, int p_j, int nu);

// prod_j Sigma(m_j, 2(nu - j) - p_j), p_j = m_{j+1} + ... + m_nu.
Rational sigma_product_exact(const MultiIndex& idx);
// (1/2)_{2nu - p} prod over nonzero m_j of F(m_j, 2(nu - j) - p_j).
Rational f_product_exact(const MultiIndex& idx);

// Ordered integrals I_w(tau) = int_tau^beta J_{w1}(t) I_{w2..}(t) dt with
// J_m = dhat^m Qhat^4, computed on an adaptive piecewise Chebyshev grid over
// [0, beta]. Profiles of word suffixes are cached and shared.
class NestedIntegrator {
public:
    NestedIntegrator(const ModelParams& params, const TruncationPolicy& policy);

    double integral(const IndexWord& word, double tau = 0.0) const;
    double J(int m, double t) const;

    int panels() const { return static_cast<int>(edges_.size()) - 1; }
    // Largest relative trailing Chebyshev coefficient of J_0..J_4 over all panels.
    double achieved_tolerance() const { return achieved_; }
    const ModelParams& params() const { return params_; }

private:
    using Profile = std::vector<double>;
    std::shared_ptr<const Profile> profile(const IndexWord& word) const;
    double interpolate(const Profile& prof, double tau) const;

    ModelParams params_;
    std::vector<double> edges_;
    std::vector<double> nodes_;                  // panel-major node positions
    std::vector<std::vector<double>> jvals_;     // J_m at nodes, m = 0..4
    double achieved_ = 0.0;
    mutable std::mutex mutex_;
    mutable std::map<IndexWord, std::shared_ptr<const Profile>> cache_;
};

double nested_integral(const IndexWord& word, double tau, const ModelParams& params,
                       const TruncationPolicy& policy);

// -a x_f^4 I_0(0) / Q^4(beta) from the closed form.
double universal_exponent(const ModelParams& params);

// A word of the shuffle-reduced expansion at order p: coefficient * (-a)^ell X^{2 ell - p} c^{-p} I_word.
struct ReducedTerm {
    IndexWord word;
    Rational coefficient;
    int ell;
};

// Generic reduction: placement sums of prod F are rewritten in the binomial basis of
// the zero-gap sizes, then each binomial monomial is an I_word times a power of I_0.
std::vector<ReducedTerm> reduced_terms(int p);

// One term of the direct (unreduced) series at fixed nu.
struct CorrectionTerm {
    int nu;
    int p;
    double coefficient;     // (-a)^nu c^{-p} prod F
    double integral_value;  // I_m(0)
    int power_of_X;         // 2 nu - p
};

std::vector<CorrectionTerm> direct_terms(int p, int J, const NestedIntegrator& integ);

struct CorrectionSeries {
    double X = 0.0;                      // x_f^2 / Qhat^2(beta)
    double exponent = 0.0;               // -a I_0(0) X^2
    std::vector<double> polynomial;      // P_p, p = 0..p_max, P_0 = 1
    std::vector<double> truncated;       // direct sums up to nu = J, p = 0..p_max
    std::vector<double> tail_estimates;  // |exp(exponent) P_p - truncated_p|
    double polynomial_factor() const;
    double value() const;
};

CorrectionSeries correction_series_detailed(const ModelParams& params, const TruncationPolicy& policy);
double correction_series(const ModelParams& params, const TruncationPolicy& policy);

// Hard-coded p = 0, 1, 2 contributions, each including the exponential.
double assembly_p0(const ModelParams& params, const TruncationPolicy& policy);
double assembly_p1(const ModelParams& params, const TruncationPolicy& policy);
double assembly_p2(const ModelParams& params, const TruncationPolicy& policy);

// Coefficients of the closed p = 2 assembly, keyed by word.
std::map<IndexWord, Rational> published_p2_coefficients();

struct CoefficientMismatch {
    IndexWord word;
    Rational published;
    Rational generic;
};

// Words where the generic reduction disagrees with the published p = 2 set.
std::vector<CoefficientMismatch> p2_coefficient_report();

struct PropagatorResult {
    double harmonic_prefactor = 0.0;
    double harmonic_exponent = 0.0;
    double universal_exponent = 0.0;
    double polynomial_factor = 1.0;
    double value = 0.0;
    TruncationPolicy truncation;
    std::vector<double> tail_estimates;
    std::string status = "ok";
};

PropagatorResult full_propagator(const ModelParams& params, const TruncationPolicy& policy);

}  // namespace anhosc
