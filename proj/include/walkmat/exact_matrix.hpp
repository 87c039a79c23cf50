#pragma once

#include "walkmat/poly.hpp"
#include "walkmat/rational.hpp"

#include <string>
#include <vector>

namespace walkmat {

using ExactVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const Rational& s) const;
    bool operator==(const ExactMatrix& o) const;

    Rational trace() const;
    bool is_symmetric() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> e_;
};

ExactVector ones_vector(int n);
ExactVector mat_vec(const ExactMatrix& m, const ExactVector& v);

/// [e, Me, M^2 e, ..., M^{n-1} e] built by repeated matrix-vector products;
/// powers of M are never formed.
ExactMatrix walk_matrix(const ExactMatrix& m);

/// Exact determinant. Rational rows are scaled integral first (tracking the
/// correction), then fraction-free Bareiss elimination runs over integers:
/// pivoting takes the first nonzero entry in the column (exact arithmetic
/// needs no magnitude pivoting) and a fully zero column exits early with 0.
Rational det_exact(const ExactMatrix& m);

/// Monic characteristic polynomial det(xI - m), exact: det(xI - m) is
/// evaluated at x = 0..n and interpolated.
UniPoly charpoly_exact(const ExactMatrix& m);

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

/// Tridiagonal matrix of order k with diagonal (2 tau, ..., 2 tau, tau) and
/// unit off-diagonals (order 1: just [tau]); its characteristic polynomial
/// satisfies the Z-family recurrence.
ExactMatrix z_tridiagonal(int k, const Rational& tau);

/// Debug dump: one row per line, entries "p/q" separated by single spaces.
std::string matrix_to_text(const ExactMatrix& m);
ExactMatrix matrix_from_text(const std::string& text);

} // namespace walkmat
