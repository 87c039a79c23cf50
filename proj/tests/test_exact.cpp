#include "doctest.h"

#include "oracles.hpp"
#include "walkmat/errors.hpp"
#include "walkmat/exact_matrix.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/poly.hpp"

using namespace walkmat;
using testutil::TestRng;

namespace {

ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("walk matrix of the signless Laplacian of P_3") {
    // Hand iteration: e -> Qe = (2,4,2) -> Q^2 e = (6,12,6).
    const ExactMatrix q = a_tau_matrix(path_graph(3), 1);
    CHECK(q == from_rows({{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}));
    CHECK(walk_matrix(q) == from_rows({{1, 2, 6}, {1, 4, 12}, {1, 2, 6}}));
    CHECK(det_exact(walk_matrix(q)) == 0);
}

TEST_CASE("walk matrix degenerate inputs") {
    CHECK(walk_matrix(ExactMatrix(3, 3)) == from_rows({{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
    CHECK(walk_matrix(ExactMatrix::identity(2)) == from_rows({{1, 1}, {1, 1}}));
    CHECK_THROWS_AS(walk_matrix(ExactMatrix(2, 3)), ShapeError);
}

TEST_CASE("walk matrix columns satisfy the recurrence col_{k+1} = M col_k") {
    TestRng rng(11);
    const ExactMatrix m = testutil::random_int_matrix(rng, 5, -4, 4);
    const ExactMatrix w = walk_matrix(m);
    for (int k = 0; k + 1 < 5; ++k) {
        ExactVector col(5), next(5);
        for (int i = 0; i < 5; ++i) {
            col[static_cast<std::size_t>(i)] = w.at(i, k);
            next[static_cast<std::size_t>(i)] = w.at(i, k + 1);
        }
        CHECK(mat_vec(m, col) == next);
    }
}

TEST_CASE("determinant basics") {
    CHECK(det_exact(ExactMatrix::identity(5)) == 1);
    CHECK(det_exact(from_rows({{1, 1}, {1, 2}})) == 1);
    CHECK(det_exact(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(det_exact(ExactMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(det_exact(ExactMatrix(2, 3)), ShapeError);
}

TEST_CASE("determinant of rational matrices clears denominators exactly") {
    // Hilbert 3x3: det = 1/2160.
    ExactMatrix h(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i, j) = Rational(1, i + j + 1);
    CHECK(det_exact(h) == Rational(1, 2160));
}

TEST_CASE("determinant needing a row swap") {
    CHECK(det_exact(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det_exact(from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
}

TEST_CASE("Bareiss elimination agrees with the cofactor oracle") {
    TestRng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.pick(1, 6));
        const ExactMatrix m = testutil::random_int_matrix(rng, n, -9, 9);
        CHECK(det_exact(m) == testutil::cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    TestRng rng(202);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = static_cast<int>(rng.pick(2, 6));
        const ExactMatrix a = testutil::random_int_matrix(rng, n, -5, 5);
        const ExactMatrix b = testutil::random_int_matrix(rng, n, -5, 5);
        CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("characteristic polynomial fixed values") {
    // [[2,1],[1,1]]: (x-2)(x-1) - 1 = x^2 - 3x + 1.
    CHECK(charpoly_exact(from_rows({{2, 1}, {1, 1}})) ==
          UniPoly({Rational(1), Rational(-3), Rational(1)}));
    CHECK(charpoly_exact(ExactMatrix(3, 3)) ==
          UniPoly({Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(charpoly_exact(from_rows({{2, 0}, {0, 5}})) ==
          UniPoly({Rational(10), Rational(-7), Rational(1)}));
}

TEST_CASE("characteristic polynomial is monic and consistent with det") {
    TestRng rng(303);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = static_cast<int>(rng.pick(1, 7));
        const ExactMatrix m = testutil::random_int_matrix(rng, n, -3, 3);
        const UniPoly p = charpoly_exact(m);
        CHECK(p.degree() == n);
        CHECK(p.leading() == 1);
        const Rational sign = n % 2 ? -1 : 1;
        CHECK(p.eval(0) == sign * det_exact(m));
        CHECK(p.coeff(n - 1) == -m.trace());
    }
}

TEST_CASE("kronecker product block structure") {
    const ExactMatrix x = from_rows({{1, 2}, {3, 4}});
    const ExactMatrix k = kronecker(ExactMatrix::identity(2), x);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(0, 1) == 2);
    CHECK(k.at(2, 2) == 1);
    CHECK(k.at(3, 2) == 3);
    CHECK(k.at(0, 2) == 0);
    CHECK(k.at(2, 0) == 0);

    ExactMatrix d1(2, 2);
    d1.at(0, 0) = 1;
    const ExactMatrix ap2 = a_tau_matrix(path_graph(2), 0);
    const ExactMatrix masked = kronecker(d1, ap2);
    CHECK(masked.at(0, 1) == 1);
    CHECK(masked.at(1, 0) == 1);
    CHECK(masked.at(2, 3) == 0);
    CHECK(masked.at(3, 2) == 0);
}

TEST_CASE("kronecker mixed-product property") {
    TestRng rng(404);
    const ExactMatrix a = testutil::random_int_matrix(rng, 2, -3, 3);
    const ExactMatrix b = testutil::random_int_matrix(rng, 3, -3, 3);
    const ExactMatrix u = testutil::random_int_matrix(rng, 2, -3, 3);
    const ExactMatrix v = testutil::random_int_matrix(rng, 3, -3, 3);
    CHECK(kronecker(a, b) * kronecker(u, v) == kronecker(a * u, b * v));
}

TEST_CASE("tridiagonal realization of the Z family") {
    const Rational tau(1, 2);
    CHECK(z_tridiagonal(1, tau).at(0, 0) == tau);
    for (int k = 1; k <= 6; ++k)
        CHECK(charpoly_exact(z_tridiagonal(k, tau)) == z_poly(k, tau));
    CHECK_THROWS_AS(z_tridiagonal(0, tau), InvalidOrder);
}

TEST_CASE("matrix text round trip") {
    ExactMatrix m(2, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 2) = -3;
    m.at(1, 1) = Rational(-7, 5);
    const std::string text = matrix_to_text(m);
    CHECK(matrix_from_text(text) == m);
    CHECK_THROWS_AS(matrix_from_text("1 2\n3\n"), FormatError);
    CHECK_THROWS_AS(matrix_from_text("\n"), FormatError);
}
