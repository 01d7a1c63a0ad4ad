#pragma once

#include "anhosc/params.hpp"

namespace anhosc {

enum class Branch { hyperbolic, flat, trigonometric };

// gamma^2 = 2b/c with the sign deciding the branch. All continuum functions
// depend on gamma^2 only.
struct FrequencyBranch {
    double gamma_sq;
    Branch branch;
    static FrequencyBranch of(const ModelParams& params);
};

// sinh(sqrt(u)) / sqrt(u), continued to sin(sqrt(-u)) / sqrt(-u) for u < 0.
double sinhc(double u);
// sqrt(u) coth(sqrt(u)), continued to sqrt(-u) cot(sqrt(-u)) for u < 0.
double xcothx(double u);

// s(t) = sinh(gamma t) / gamma and g(t) = gamma coth(gamma t) on every branch.
double s_of(double t, double gamma_sq);
double g_of(double t, double gamma_sq);

// Throws SingularFrequencyError when |gamma| beta is within 1e-6 of pi or beyond it.
void check_frequency(const ModelParams& params);

double mehler_kernel(double k, double x_i, double x_f, double nu);

struct HarmonicFactor {
    double prefactor;
    double exponent;
};

// [(2 pi / c) s(beta)]^{-1/2} and -(c/2) g(beta) x_f^2.
HarmonicFactor harmonic_fixed_origin(const ModelParams& params);

// Omega_n = w1 rho1^n + w2 rho2^n of the N-slice lattice.
double big_omega(int n, const ModelParams& params, int N);

// (2 pi delta / c) [2 (1 + b delta^2 / c)]^{N-1} Omega_{N-2}.
double prefactor_finite_N(const ModelParams& params, int N);

// Q_n = (rho1/sigma)^n + (u2/u1)(rho2/sigma)^n and its partner with a minus sign.
double bigQ(int n, const ModelParams& params, int N);
double bigQ_tilde(int n, const ModelParams& params, int N);

// -a delta x_f^4 - (c/(2 delta) + b delta) x_f^2 + xi with 1/omega_{N-2} = Q_{N-2} / (sigma Q_{N-1}).
double exponent_finite_N(const ModelParams& params, int N);

// Kernels in the gamma-even normalization dhat = gamma^2 d, Qhat = Q / gamma:
//   dhat(t) = (g(t) - g(beta)) / 2,  Qhat(t) = 2 s(t).
// Every correction term is invariant under d -> gamma^2 d, Q^2 -> Q^2 / gamma^2,
// and these forms stay finite at b = 0.
double kernel_d(double tau, const ModelParams& params);
double kernel_Q(double tau, const ModelParams& params);

// t * dhat(t), finite at t = 0.
double kernel_t_d(double tau, const ModelParams& params);

// I_0(0) / Q^4(beta) in closed form.
double quartic_ratio_closed_form(const ModelParams& params);

}  // namespace anhosc
