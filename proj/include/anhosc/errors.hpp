#pragma once

#include <stdexcept>
#include <string>

namespace anhosc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition or index-range violation.
struct DomainError : Error {
    using Error::Error;
};

// Quadrature or series did not reach the requested tolerance.
struct AccuracyError : Error {
    double achieved;
    double requested;
    AccuracyError(const std::string& what, double achieved_, double requested_)
        : Error(what), achieved(achieved_), requested(requested_) {}
};

// A finite-N quantity hit a zero denominator (omega_i = 0, 1 + b dt^2/c <= 0, ...).
struct SingularLatticeError : Error {
    int index;
    SingularLatticeError(const std::string& what, int index_) : Error(what), index(index_) {}
};

// |gamma| beta reached a multiple of pi on the trigonometric branch.
struct SingularFrequencyError : Error {
    using Error::Error;
};

// Evaluation exactly on a pole of the Gamma product.
struct PoleHitError : Error {
    using Error::Error;
};

}  // namespace anhosc
