#include "walkmat/exact_matrix.hpp"

#include "walkmat/errors.hpp"

#include <sstream>
#include <utility>

namespace walkmat {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference: shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product: shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator*(const Rational& s) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Rational ExactMatrix::trace() const {
    if (!is_square()) throw ShapeError("trace of non-square matrix");
    Rational t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

ExactVector ones_vector(int n) {
    return ExactVector(static_cast<std::size_t>(n), Rational(1));
}

ExactVector mat_vec(const ExactMatrix& m, const ExactVector& v) {
    if (static_cast<std::size_t>(m.cols()) != v.size()) throw ShapeError("mat_vec: shape mismatch");
    ExactVector out(static_cast<std::size_t>(m.rows()), Rational(0));
    for (int i = 0; i < m.rows(); ++i) {
        Rational acc(0);
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
}

ExactMatrix walk_matrix(const ExactMatrix& m) {
    if (!m.is_square()) throw ShapeError("walk_matrix: matrix must be square");
    int n = m.rows();
    ExactMatrix w(n, n);
    ExactVector v = ones_vector(n);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) w.at(i, k) = v[static_cast<std::size_t>(i)];
        if (k + 1 < n) v = mat_vec(m, v);
    }
    return w;
}

Rational det_exact(const ExactMatrix& m) {
    if (!m.is_square()) throw ShapeError("det_exact: matrix must be square");
    int n = m.rows();
    if (n == 0) return Rational(1);

    // Scale each row integral, remembering the total correction.
    std::vector<BigInt> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    BigInt correction(1);
    BigInt lcm, t;
    for (int i = 0; i < n; ++i) {
        lcm = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (int j = 0; j < n; ++j) {
            const Rational& q = m.at(i, j);
            mpz_divexact(t.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
            a[static_cast<std::size_t>(i) * n + j] = q.get_num() * t;
        }
        correction *= lcm;
    }

    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
    int sign = 1;
    BigInt prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) { pivot = r; break; }
            if (pivot < 0) return Rational(0);
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Rational det(at(n - 1, n - 1), correction);
    det.canonicalize();
    return sign > 0 ? det : Rational(-det);
}

UniPoly charpoly_exact(const ExactMatrix& m) {
    if (!m.is_square()) throw ShapeError("charpoly_exact: matrix must be square");
    int n = m.rows();
    if (n == 0) return UniPoly::constant(Rational(1));
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) {
        ExactMatrix shifted = m * Rational(-1);
        for (int i = 0; i < n; ++i) shifted.at(i, i) += x;
        pts.emplace_back(Rational(x), det_exact(shifted));
    }
    return lagrange_interpolate(pts);
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    r.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
        }
    return r;
}

ExactMatrix z_tridiagonal(int k, const Rational& tau) {
    if (k < 1) throw InvalidOrder("z_tridiagonal: order must be >= 1");
    ExactMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = Rational(2) * tau;
    m.at(k - 1, k - 1) = tau;
    for (int i = 0; i + 1 < k; ++i) {
        m.at(i, i + 1) = 1;
        m.at(i + 1, i) = 1;
    }
    return m;
}

std::string matrix_to_text(const ExactMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << to_string(m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

ExactMatrix matrix_from_text(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rational(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw FormatError("empty matrix text");
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw FormatError("ragged matrix text");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

} // namespace walkmat
