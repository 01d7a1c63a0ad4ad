#pragma once

namespace anhosc {

// Physical inputs of the action  c/2 phi'^2 + b phi^2 + a phi^4  on [0, beta],
// with phi(0) = 0 and phi(beta) = x_f.
struct ModelParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double beta = 1.0;
    double x_f = 0.0;

    double gamma_sq() const { return 2.0 * b / c; }
    // Throws DomainError unless c > 0, beta > 0, a >= 0 and all fields finite.
    void validate() const;
};

struct TruncationPolicy {
    int poincare_order = 3;   // J
    int series_cutoff = 64;   // M, cap on each infinite k-sum
    double quad_rel_tol = 1e-10;
    double quad_abs_tol = 1e-14;
    int p_max = 2;

    void validate() const;
};

}  // namespace anhosc
