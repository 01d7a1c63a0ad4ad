#pragma once

#include <boost/rational.hpp>

#include <cstdint>

namespace anhosc {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Exact binomial coefficient; zero outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

// Exact (x)_k = Gamma(x + k) / Gamma(x); negative k allowed.
Rational rising(const Rational& x, int k);

}  // namespace anhosc
