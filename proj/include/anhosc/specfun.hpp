#pragma once

#include "anhosc/params.hpp"
#include "anhosc/rational.hpp"

namespace anhosc {

// Rising factorial x(x+1)...(x+k-1).
double pochhammer(double x, int k);

// a_i^j = C(j,i) (1/2)_j / (1/2)_i, exact.
Rational coeff_a_exact(int i, int j);
double coeff_a(int i, int j);

// Integral of x^n exp(-alpha x^4 - beta_coef x^2) over the real line, by
// adaptive quadrature only.
double quartic_moment(int n, double alpha, double beta_coef, const TruncationPolicy& policy);

// Scaled parabolic cylinder function z^mu e^{z^2/4} D_{-mu}(z) for mu > 0, z > 0,
// from the quartic moment representation
//   (2 / Gamma(mu)) * int_0^inf y^{2mu-1} exp(-y^2 - y^4 / (2 z^2)) dy.
// z = +inf gives 1.
double pcf_scaled_general(double mu, double z, const TruncationPolicy& policy);

// The m-th member D_{-m-1/2} of the family above.
double pcf_scaled_ref(int m, double z, const TruncationPolicy& policy);

// e^{z^2/4} D_{-m-1/2}(z) for any real z (no z^mu factor), from
//   int y^{2m} exp(-y^4/2 - z y^2) dy / Gamma(m + 1/2).
double pcf_exp_scaled(int m, double z, const TruncationPolicy& policy);

// Asymptotic expansion sum_{j<=J} (-1)^j (m+1/2)_{2j} / (j! (2z^2)^j).
double pcf_scaled_poincare(int m, double z, int J);

// First omitted term of the expansion above (order J+1), signed.
double pcf_poincare_next_term(int m, double z, int J);

// int exp(-a x^4 - b x^2 - c x) dx by its parabolic cylinder series.
double j1_quartic(double a, double b, double c, const TruncationPolicy& policy);

}  // namespace anhosc
