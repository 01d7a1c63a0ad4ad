#include "anhosc/quadrature.hpp"

#include "anhosc/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdio>
#include <queue>
#include <string>
#include <vector>

namespace anhosc::quad {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr int kMaxPanels = 4000;

struct Panel {
    double lo, hi, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel estimate(const Integrand& f, double lo, double hi) {
    double err = 0.0;
    // max_depth = 0: a single Kronrod panel, error = |Kronrod - Gauss|
    double v = Rule::integrate(f, lo, hi, 0, 0.0, &err);
    return {lo, hi, v, err};
}

}  // namespace

Result finite(const Integrand& f, double lo, double hi, double rel_tol, double abs_tol) {
    if (lo == hi) return {0.0, 0.0};
    std::priority_queue<Panel> heap;
    Panel first = estimate(f, lo, hi);
    double total = first.value;
    double err = first.error;
    heap.push(first);
    int panels = 1;
    while (err > std::max(rel_tol * std::abs(total), abs_tol)) {
        if (panels >= kMaxPanels) {
            char msg[96];
            std::snprintf(msg, sizeof msg, "adaptive quadrature did not converge (error %.3g)", err);
            throw AccuracyError(msg,
                                err, std::max(rel_tol * std::abs(total), abs_tol));
        }
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            throw AccuracyError("adaptive quadrature exhausted floating-point resolution", err,
                                std::max(rel_tol * std::abs(total), abs_tol));
        }
        Panel left = estimate(f, worst.lo, mid);
        Panel right = estimate(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // final summation in a fixed order
    std::vector<Panel> all;
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    double sum = 0.0, esum = 0.0;
    for (const auto& p : all) {
        sum += p.value;
        esum += p.error;
    }
    return {sum, esum};
}

Result real_line(const Integrand& f, double center, double scale, double rel_tol, double abs_tol) {
    auto g = [&](double t) {
        double d = 1.0 - t * t;
        double x = center + scale * t / d;
        if (!std::isfinite(x)) return 0.0;
        double fx = f(x);
        if (fx == 0.0) return 0.0;
        return fx * scale * (1.0 + t * t) / (d * d);
    };
    return finite(g, -1.0, 1.0, rel_tol, abs_tol);
}

Result half_line(const Integrand& f, double scale, double rel_tol, double abs_tol) {
    auto g = [&](double t) {
        double d = 1.0 - t * t;
        double x = scale * t / d;
        if (!std::isfinite(x)) return 0.0;
        double fx = f(x);
        if (fx == 0.0) return 0.0;
        return fx * scale * (1.0 + t * t) / (d * d);
    };
    return finite(g, 0.0, 1.0, rel_tol, abs_tol);
}

}  // namespace anhosc::quad
