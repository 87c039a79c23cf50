#pragma once

#include "walkmat/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace walkmat {

/// Dense univariate polynomial over exact rationals, coefficients stored
/// ascending by degree. The zero polynomial has an empty coefficient list
/// and degree() == -1; otherwise the leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly x();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^k; zero beyond the degree.
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly poly_pow(const UniPoly& p, int e);

// Monic family Z_k: Z_0 = 1, Z_1 = x - tau, Z_k = (x - 2 tau) Z_{k-1} - Z_{k-2}.
UniPoly z_poly(int k, const Rational& tau);

// Z_0 + Z_1 + ... + Z_{m-1}; degree m-1, monic.
UniPoly z_sum(int m, const Rational& tau);

// Chebyshev families sharing X_n = 2x X_{n-1} - X_{n-2}:
// second kind U (U_0 = 1, U_1 = 2x), fourth kind W (W_0 = 1, W_1 = 2x + 1).
UniPoly chebyshev_u(int n);
UniPoly chebyshev_w4(int n);

// W_0 + W_1 + ... + W_{m-1}.
UniPoly chebyshev_w4_sum(int m);

/// p(a*x + b), exact. a must be nonzero.
UniPoly compose_affine(const UniPoly& p, const Rational& a, const Rational& b);

/// den^deg(p) * p(num/den), a true polynomial (Horner over polynomial
/// arithmetic). den must be nonzero.
UniPoly rational_substitution(const UniPoly& p, const UniPoly& num, const UniPoly& den);

/// Resultant of f and g as the determinant of their Sylvester matrix.
/// Both polynomials must be nonzero; two constants give 1 by convention.
Rational sylvester_resultant(const UniPoly& f, const UniPoly& g);

/// Res(Z_m + t Z_{m-1}, Z_0 + ... + Z_{m-1}) as an exact polynomial in t,
/// recovered from evaluations at t = 0..m-1 (t enters the Sylvester matrix
/// linearly through m-1 rows, so the degree in t is at most m-1).
UniPoly resultant_in_t(int m, const Rational& tau);

/// Closed form (-1)^{k(k-1)/2} * prod_j a_j^{k-2j+1} c_j^{j-1} for the product
/// of p_{k-1} over the zeros of p_k in a three-term recurrence
/// p_k = (a_k x + b_k) p_{k-1} - c_k p_{k-2}. a and c are 1-indexed
/// conceptually (a[0] = a_1); c_1 never enters (exponent 0).
Rational schur_rhs(int k, const std::vector<Rational>& a, const std::vector<Rational>& c);

/// Unique polynomial of degree < points.size() through the given
/// (node, value) pairs. Nodes must be pairwise distinct.
UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Text form "c0 + c1*x + c2*x^2 + ..." with rational coefficients; zero
/// terms are skipped, the zero polynomial prints as "0".
std::string poly_to_text(const UniPoly& p);
UniPoly poly_from_text(const std::string& text);

} // namespace walkmat
