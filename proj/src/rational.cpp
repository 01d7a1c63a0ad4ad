#include "anhosc/rational.hpp"

namespace anhosc {

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Rational rising(const Rational& x, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= x + Rational(i);
    // negative order: (x)_k = 1 / ((x + k)(x + k + 1)...(x - 1))
    for (int i = k; i < 0; ++i) r /= x + Rational(i);
    return r;
}

}  // namespace anhosc
