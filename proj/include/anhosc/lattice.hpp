#pragma once

#include "anhosc/params.hpp"

#include <vector>

namespace anhosc {

// Derived quantities of the N-slice discretization.
struct LatticeState {
    ModelParams params;
    int N = 0;
    double delta = 0.0;  // beta / N
    double eps = 0.0;    // b delta^2 / c
    double sigma = 0.0;  // 1 / (2 (1 + eps))
    double z = 0.0;      // c (1 + eps) / sqrt(2 a delta^3); +inf for a = 0
    std::vector<double> omega;  // omega_0 .. omega_{N-2}
    double xi = 0.0;

    // Throws SingularLatticeError if 1 + eps <= 0 or some omega_i <= 0.
    static LatticeState build(const ModelParams& params, int N);

    // sigma_i / (1 - sigma_i) = sigma^2 / (omega_i omega_{i-1}), i >= 1.
    double sigma_ratio(int i) const;
};

// Sum_{i=1}^N delta [ c/2 ((phi_i - phi_{i-1}) / delta)^2 + b phi_i^2 + a phi_i^4 ].
double discretized_action(const std::vector<double>& path, const ModelParams& params, int N);

// (2 pi delta / c)^{-N/2} int dphi_1..dphi_{N-1} exp(-E_N), nested adaptive quadrature, N in 1..4.
double wn_quadrature(const ModelParams& params, int N, const TruncationPolicy& policy);

struct SeriesValue {
    double value;
    double tail_estimate;
};

// Exact multi-series over the even slice indices with every k_i < series_cutoff.
// The detailed form never throws on the tail; the plain form throws AccuracyError
// when the tail exceeds quad_rel_tol * |value|.
SeriesValue wn_series_exact_detailed(const ModelParams& params, int N, const TruncationPolicy& policy);
double wn_series_exact(const ModelParams& params, int N, const TruncationPolicy& policy);

// Table of (Lambda)^{2mu}_p for Lambda = 1..lambda_max, mu = 0..mu_max.
class LambdaTable {
public:
    LambdaTable(const LatticeState& state, int lambda_max, int mu_max);
    double operator()(int Lambda, int mu, int p) const;
    int lambda_max() const { return lambda_max_; }
    int mu_max() const { return mu_max_; }

private:
    int lambda_max_;
    int mu_max_;
    std::vector<std::vector<std::vector<double>>> t_;  // [Lambda][mu][p]
};

double lambda_symbol(int Lambda, int mu, int p, const LatticeState& state);

// Leading term of the lattice propagator up to Poincare order J.
double wn_leading(const ModelParams& params, int N, int J, const TruncationPolicy& policy);

}  // namespace anhosc
