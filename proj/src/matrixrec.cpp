#include "anhosc/matrixrec.hpp"

#include "anhosc/continuum.hpp"
#include "anhosc/errors.hpp"
#include "anhosc/rational.hpp"
#include "anhosc/specfun.hpp"

#include <cmath>

namespace anhosc {

BandedTriangular::BandedTriangular(int r, int c, int minor)
    : rows(r), cols(c), minor_dim(minor), entries(static_cast<std::size_t>(r) * c, 0.0) {}

BandedTriangular BandedTriangular::operator*(const BandedTriangular& rhs) const {
    if (cols != rhs.rows) throw DomainError("matrix dimensions do not match");
    BandedTriangular out(rows, rhs.cols, std::min(minor_dim, rhs.minor_dim));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const double v = (*this)(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < rhs.cols; ++j) out(i, j) += v * rhs(k, j);
        }
    return out;
}

BandedTriangular& BandedTriangular::operator+=(const BandedTriangular& rhs) {
    if (rows != rhs.rows || cols != rhs.cols) throw DomainError("matrix dimensions do not match");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += rhs.entries[i];
    minor_dim = std::max(minor_dim, rhs.minor_dim);
    return *this;
}

bool BandedTriangular::is_lower_triangular() const {
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if ((*this)(i, j) != 0.0) return false;
    return true;
}

bool BandedTriangular::is_upper_triangular() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < std::min(i, cols); ++j)
            if ((*this)(i, j) != 0.0) return false;
    return true;
}

bool BandedTriangular::zero_outside(int r, int c) const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if ((i >= r || j >= c) && (*this)(i, j) != 0.0) return false;
    return true;
}

int BandedTriangular::nonzero_columns() const {
    int n = 0;
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            if ((*this)(i, j) != 0.0) {
                ++n;
                break;
            }
    return n;
}

MatrixLattice MatrixLattice::build(const ModelParams& params, int N) {
    MatrixLattice lat{LatticeState::build(params, N), {}};
    for (int n = 0; n <= N - 1; ++n) lat.Q.push_back(bigQ(n, params, N));
    return lat;
}

double MatrixLattice::link(int k) const {
    if (k < 0 || k + 1 >= static_cast<int>(Q.size())) throw DomainError("Q index outside the lattice");
    const double v = state.sigma * Q[k] * Q[k + 1];
    if (v == 0.0 || !std::isfinite(v)) throw SingularLatticeError("degenerate Q product", k);
    return v;
}

BandedTriangular build_A(int d, int K, int mu, const MatrixLattice& lat) {
    if (d < 0 || d > mu) throw DomainError("A-matrix minor index outside 0..mu");
    const double q = lat.link(K);
    const int n = 2 * mu + 1;
    BandedTriangular A(n, n, 2 * d + 1);
    for (int p = 0; p <= 2 * d; ++p)
        for (int i = 0; i <= p; ++i) A(p, i) = coeff_a(2 * d - p, 2 * d - i) / std::pow(q, p - i);
    return A;
}

BandedTriangular build_M(int d, int K, int mu, const MatrixLattice& lat) {
    if (d < 0 || d > mu) throw DomainError("M-matrix minor index outside 0..mu");
    if (K < 0 || K >= static_cast<int>(lat.Q.size())) throw DomainError("Q index outside the lattice");
    const double QK = lat.Q[K];
    BandedTriangular M(mu + 1, mu + 1, d + 1);
    for (int q = 0; q <= d; ++q)
        for (int l = 0; l <= q; ++l)
            M(l, q) = static_cast<double>(binomial(q, l)) * std::pow(QK, 4 * q - 4 * l);
    return M;
}

BandedTriangular projector(int d, int mu) {
    if (d < 0 || d > mu) throw DomainError("projector column outside 0..mu");
    BandedTriangular P(mu + 1, mu + 1, 1);
    P(d, d) = 1.0;
    return P;
}

namespace {

// row i is zero before column ceil(i/2)
bool has_c_pattern(const BandedTriangular& C) {
    for (int i = 0; i < C.rows; ++i)
        for (int j = 0; j < std::min((i + 1) / 2, C.cols); ++j)
            if (C(i, j) != 0.0) return false;
    return true;
}

}  // namespace

BandedTriangular c_matrix_base(int mu, const MatrixLattice& lat) {
    if (mu < 0) throw DomainError("mu must be nonnegative");
    const double q = lat.link(0);
    BandedTriangular C(2 * mu + 1, mu + 1, mu);
    for (int z = 0; z <= mu; ++z)
        for (int p = 0; p <= 2 * z; ++p) C(p, z) = std::pow(q, 2 * z - p) * coeff_a(2 * z - p, 2 * z);
    return C;
}

BandedTriangular c_matrix(int Lambda, int mu, const MatrixLattice& lat) {
    if (Lambda < 1) throw DomainError("Lambda must be at least 1");
    if (Lambda + 1 > static_cast<int>(lat.Q.size()))
        throw DomainError("Lambda too large for the lattice size");
    BandedTriangular C = c_matrix_base(mu, lat);
    for (int L = 2; L <= Lambda; ++L) {
        BandedTriangular next(2 * mu + 1, mu + 1, mu);
        for (int d = 0; d <= mu; ++d) {
            BandedTriangular A = build_A(d, L - 1, mu, lat);
            BandedTriangular M = build_M(d, L - 1, mu, lat);
            if (!A.is_lower_triangular() || !A.zero_outside(2 * d + 1, 2 * d + 1) || !M.is_upper_triangular() ||
                !M.zero_outside(d + 1, d + 1))
                throw Error("matrix recurrence produced a broken zero pattern");
            next += A * C * M * projector(d, mu);
        }
        if (!has_c_pattern(next)) throw Error("matrix recurrence produced a broken zero pattern");
        next.minor_dim = mu;
        C = std::move(next);
    }
    return C;
}

double lambda_from_matrix(int Lambda, int mu, int p, const MatrixLattice& lat) {
    if (p < 0 || p > 2 * mu) throw DomainError("row index outside 0..2mu");
    const BandedTriangular C = c_matrix(Lambda, mu, lat);
    return C(p, mu) / std::pow(lat.link(Lambda - 1), 2 * mu - p);
}

std::pair<double, double> two_matrix_product_identity(int i2, int i3, int p, int lambda_idx,
                                                      const MatrixLattice& lat) {
    if (i2 < 0 || i3 < i2) throw DomainError("need 0 <= i2 <= i3");
    if (lambda_idx < 0 || lambda_idx > p || p > 2 * i3 || lambda_idx > 2 * i2)
        throw DomainError("indices outside the active minors");
    const int mu = i3;
    const double lhs = (build_A(i3, 2, mu, lat) * build_A(i2, 1, mu, lat))(p, lambda_idx);

    // x^{4 i3 - 2p} (x^2 / (sigma Q3 Q2) + 1 / (sigma Q2 Q1))^{p - lambda} as coefficients in x
    const int n = p - lambda_idx;
    const int base = 4 * i3 - 2 * p;
    const double u = 1.0 / lat.link(2), v = 1.0 / lat.link(1);
    std::vector<double> poly(base + 2 * n + 1, 0.0);
    for (int k = 0; k <= n; ++k)
        poly[base + 2 * k] = static_cast<double>(binomial(n, k)) * std::pow(u, k) * std::pow(v, n - k);
    const int order = 4 * i3 - 4 * i2;
    for (int r = 0; r < order && !poly.empty(); ++r) {
        std::vector<double> dp(poly.size() > 1 ? poly.size() - 1 : 0);
        for (std::size_t e = 1; e < poly.size(); ++e) dp[e - 1] = static_cast<double>(e) * poly[e];
        poly = std::move(dp);
    }
    double at_one = 0.0;
    for (double c : poly) at_one += c;
    auto lfact = [](int m) { return std::lgamma(m + 1.0); };
    const double pref = std::exp(std::log(2.0) * (2 * lambda_idx - 2 * p) + lfact(4 * i2 - 2 * lambda_idx) -
                                 lfact(4 * i3 - 2 * p) - lfact(p - lambda_idx));
    return {lhs, pref * at_one};
}

}  // namespace anhosc
