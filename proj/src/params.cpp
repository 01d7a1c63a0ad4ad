#include "anhosc/params.hpp"

#include "anhosc/errors.hpp"

#include <cmath>

namespace anhosc {

void ModelParams::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(beta) ||
        !std::isfinite(x_f))
        throw DomainError("model parameters must be finite");
    if (c <= 0.0) throw DomainError("c must be positive");
    if (beta <= 0.0) throw DomainError("beta must be positive");
    if (a < 0.0) throw DomainError("a must be nonnegative");
}

void TruncationPolicy::validate() const {
    if (poincare_order < 0) throw DomainError("poincare order must be nonnegative");
    if (series_cutoff < 1) throw DomainError("series cutoff must be at least 1");
    if (!(quad_rel_tol > 0.0) || !(quad_abs_tol > 0.0)) throw DomainError("tolerances must be positive");
    if (p_max < 0) throw DomainError("p_max must be nonnegative");
}

}  // namespace anhosc
