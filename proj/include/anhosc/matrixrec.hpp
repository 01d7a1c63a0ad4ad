#pragma once

#include "anhosc/lattice.hpp"

#include <utility>
#include <vector>

namespace anhosc {

// Dense rectangular matrix with the size of its active principal minor.
struct BandedTriangular {
    int rows = 0;
    int cols = 0;
    int minor_dim = 0;
    std::vector<double> entries;

    BandedTriangular() = default;
    BandedTriangular(int r, int c, int minor);

    double& operator()(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    BandedTriangular operator*(const BandedTriangular& rhs) const;
    BandedTriangular& operator+=(const BandedTriangular& rhs);

    bool is_lower_triangular() const;
    bool is_upper_triangular() const;
    // zero outside the leading rows x cols block
    bool zero_outside(int r, int c) const;
    int nonzero_columns() const;
};

// Lattice state plus the sequence Q_0 .. Q_{N-1}.
struct MatrixLattice {
    LatticeState state;
    std::vector<double> Q;
    static MatrixLattice build(const ModelParams& params, int N);
    // sigma Q_k Q_{k+1}
    double link(int k) const;
};

// {A^d(K)}_{p,i} = a^{2d-i}_{2d-p} / (sigma Q_K Q_{K+1})^{p-i}, size (2mu+1)^2.
BandedTriangular build_A(int d, int K, int mu, const MatrixLattice& lat);
// {M^d(K)}_{l,q} = C(q,l) Q_K^{4q-4l} for q <= d, size (mu+1)^2.
BandedTriangular build_M(int d, int K, int mu, const MatrixLattice& lat);
// Projector onto column d, size (mu+1)^2.
BandedTriangular projector(int d, int mu);
// {C(1)}_{p,z} = (sigma Q_1 Q_0)^{2z-p} a^{2z}_{2z-p}, size (2mu+1) x (mu+1).
BandedTriangular c_matrix_base(int mu, const MatrixLattice& lat);

// C^mu(Lambda) = sum_d A^d(Lambda-1) C(Lambda-1) M^d(Lambda-1) P^d, starting from C(1).
// Throws Error if a produced matrix breaks the triangular zero pattern.
BandedTriangular c_matrix(int Lambda, int mu, const MatrixLattice& lat);

// {C^mu(Lambda)}_{p,mu} / (sigma Q_Lambda Q_{Lambda-1})^{2mu-p}, comparable with (Lambda)^{2mu}_{2mu-p}.
double lambda_from_matrix(int Lambda, int mu, int p, const MatrixLattice& lat);

// {A^{i3}(2) A^{i2}(1)}_{p,lambda}: direct product and the derivative closed form.
std::pair<double, double> two_matrix_product_identity(int i2, int i3, int p, int lambda_idx,
                                                      const MatrixLattice& lat);

}  // namespace anhosc
