#pragma once

#include <functional>

namespace anhosc::quad {

struct Result {
    double value;
    double error;  // estimated absolute error
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod on a finite interval. Throws AccuracyError when the
// estimate stays above max(rel_tol * L1, abs_tol) at maximal refinement.
Result finite(const Integrand& f, double lo, double hi, double rel_tol, double abs_tol);

// Integral over the real line through x = center + scale * t / (1 - t^2).
Result real_line(const Integrand& f, double center, double scale, double rel_tol, double abs_tol);

// Integral over [0, inf) through x = scale * t / (1 - t^2), t in [0, 1).
Result half_line(const Integrand& f, double scale, double rel_tol, double abs_tol);

}  // namespace anhosc::quad
