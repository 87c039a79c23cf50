#pragma once

#include "walkmat/exact_matrix.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/rational.hpp"

#include <vector>

namespace walkmat {

// Row-major dense floating matrix; rectangular invariant enforced by producers.
using FloatMatrix = std::vector<std::vector<double>>;

FloatMatrix to_float(const ExactMatrix& m);
std::vector<double> float_mat_vec(const FloatMatrix& m, const std::vector<double>& v);
double norm2(const std::vector<double>& v);
double float_det(FloatMatrix m); // LU with partial pivoting

// Full eigendecomposition of a symmetric matrix.
struct SpectralData {
    int n = 0;
    std::vector<double> lambda;      // eigenvalues, ascending
    std::vector<std::vector<double>> xi; // xi[i] = orthonormal eigenvector for lambda[i]
    Rational tau = 0;
};

// Cyclic Jacobi rotations; eigenvalues ascending, ties keep the original
// column order.  Input must be symmetric to 1e-12 entrywise.
SpectralData eigen_sym(const FloatMatrix& m);

// Eigen-structure of A_tau(g).
SpectralData spectral_data(const Graph& g, const Rational& tau);

// Values Z_0(x), ..., Z_kmax(x) for the recurrence Z_0 = 1, Z_1 = x - tau,
// Z_k = (x - 2 tau) Z_{k-1} - Z_{k-2}.
std::vector<double> z_values(int kmax, double tau, double x);

// The m roots of Z_m + (tau - lam) Z_{m-1}, ascending.  Computed as the
// eigenvalues of the symmetric tridiagonal matrix with diagonal
// (tau + lam, 2 tau, ..., 2 tau, tau) and unit off-diagonals, whose
// characteristic polynomial expands to exactly that combination.
std::vector<double> mu_roots(int m, const Rational& tau, double lam);

// mu[i][j]: for each eigenvalue lambda_i of A_tau(g), the m roots above.
struct MuTable {
    int n = 0;
    int m = 0;
    std::vector<std::vector<double>> mu;
};

MuTable mu_table(const SpectralData& spec, int m);

// Explicit eigenvector of the rooted-product matrix for eigenvalue mu:
// level-j block (j = 1..m) is Z_{m-j}(mu)/Z_{m-1}(mu) * xi_i, stacked in the
// same level-major layout used by rooted_product_path.
std::vector<double> eta_vector(const SpectralData& spec, int i, double mu, int m);

// det W_tau(g) from eigen-data alone:
//   prod_{i1<i2} (lambda_{i2}-lambda_{i1}) * prod_i (e^T xi_i) / det[xi].
// Sign depends on eigenvector sign choices; compare absolute values.
double mao_walk_det(const SpectralData& spec);

} // namespace walkmat
