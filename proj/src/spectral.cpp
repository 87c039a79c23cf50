#include "walkmat/spectral.hpp"

#include "walkmat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace walkmat {

FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix f(static_cast<std::size_t>(m.rows()),
                  std::vector<double>(static_cast<std::size_t>(m.cols()), 0.0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_double(m.at(i, j));
    return f;
}

std::vector<double> float_mat_vec(const FloatMatrix& m, const std::vector<double>& v) {
    std::vector<double> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw ShapeError("float_mat_vec: shape mismatch");
        out[i] = std::inner_product(m[i].begin(), m[i].end(), v.begin(), 0.0);
    }
    return out;
}

double norm2(const std::vector<double>& v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

double float_det(FloatMatrix m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k].size() != n) throw ShapeError("float_det: matrix must be square");
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::fabs(m[r][k]) > std::fabs(m[piv][k])) piv = r;
        if (m[piv][k] == 0.0) return 0.0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            double f = m[r][k] / m[k][k];
            for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

SpectralData eigen_sym(const FloatMatrix& input) {
    const int n = static_cast<int>(input.size());
    for (const auto& row : input)
        if (static_cast<int>(row.size()) != n) throw ShapeError("eigen_sym: matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(input[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                          input[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) > 1e-12)
                throw NotSymmetric("eigen_sym: input is not symmetric");

    FloatMatrix a = input;
    FloatMatrix v(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += a[p][q] * a[p][q];
        return std::sqrt(2.0 * s);
    };
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale += a[i][j] * a[i][j];
    scale = std::sqrt(scale);
    const double stop = (scale > 0 ? scale : 1.0) * 1e-15;

    for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (std::fabs(apq) <= stop * 1e-2) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e150)
                    t = 1.0 / (2.0 * theta);
                else
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double w = s / (1.0 + c);

                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a[r][p], arq = a[r][q];
                        a[r][p] = a[p][r] = arp - s * (arq + w * arp);
                        a[r][q] = a[q][r] = arq + s * (arp - w * arq);
                    }
                    const double vrp = v[r][p], vrq = v[r][q];
                    v[r][p] = vrp - s * (vrq + w * vrp);
                    v[r][q] = vrq + s * (vrp - w * vrq);
                }
            }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a[x][x] < a[y][y]; });

    SpectralData out;
    out.n = n;
    out.lambda.reserve(static_cast<std::size_t>(n));
    out.xi.reserve(static_cast<std::size_t>(n));
    for (int k : order) {
        out.lambda.push_back(a[k][k]);
        std::vector<double> col(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = v[r][k];
        out.xi.push_back(std::move(col));
    }
    return out;
}

SpectralData spectral_data(const Graph& g, const Rational& tau) {
    SpectralData s = eigen_sym(to_float(a_tau_matrix(g, tau)));
    s.tau = tau;
    return s;
}

std::vector<double> z_values(int kmax, double tau, double x) {
    std::vector<double> z(static_cast<std::size_t>(kmax) + 1);
    z[0] = 1.0;
    if (kmax >= 1) z[1] = x - tau;
    for (int k = 2; k <= kmax; ++k)
        z[static_cast<std::size_t>(k)] =
            (x - 2.0 * tau) * z[static_cast<std::size_t>(k) - 1] - z[static_cast<std::size_t>(k) - 2];
    return z;
}

std::vector<double> mu_roots(int m, const Rational& tau, double lam) {
    if (m < 1) throw InvalidOrder("mu_roots: m must be >= 1");
    if (m == 1) return {lam};
    const double tf = to_double(tau);
    FloatMatrix t(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m), 0.0));
    t[0][0] = tf + lam;
    for (int i = 1; i < m; ++i) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2.0 * tf;
    t[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(m) - 1] = tf;
    for (int i = 0; i + 1 < m; ++i) {
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = 1.0;
        t[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = 1.0;
    }
    return eigen_sym(t).lambda;
}

MuTable mu_table(const SpectralData& spec, int m) {
    MuTable tbl;
    tbl.n = spec.n;
    tbl.m = m;
    tbl.mu.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i)
        tbl.mu.push_back(mu_roots(m, spec.tau, spec.lambda[static_cast<std::size_t>(i)]));
    return tbl;
}

std::vector<double> eta_vector(const SpectralData& spec, int i, double mu, int m) {
    if (i < 0 || i >= spec.n) throw PreconditionViolation("eta_vector: eigenvalue index out of range");
    if (m < 1) throw InvalidOrder("eta_vector: m must be >= 1");
    std::vector<double> z = z_values(m - 1, to_double(spec.tau), mu);
    const double lead = z[static_cast<std::size_t>(m) - 1];
    if (std::fabs(lead) < 1e-12)
        throw NumericallySingularScale("eta_vector: Z_{m-1}(mu) vanishes numerically");
    const int n = spec.n;
    const auto& xi = spec.xi[static_cast<std::size_t>(i)];
    std::vector<double> eta(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int j = 1; j <= m; ++j) {
        const double f = z[static_cast<std::size_t>(m - j)] / lead;
        for (int r = 0; r < n; ++r)
            eta[static_cast<std::size_t>((j - 1) * n + r)] = f * xi[static_cast<std::size_t>(r)];
    }
    return eta;
}

double mao_walk_det(const SpectralData& spec) {
    const int n = spec.n;
    double prod = 1.0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = i1 + 1; i2 < n; ++i2)
            prod *= spec.lambda[static_cast<std::size_t>(i2)] - spec.lambda[static_cast<std::size_t>(i1)];
    for (int i = 0; i < n; ++i) {
        const auto& xi = spec.xi[static_cast<std::size_t>(i)];
        prod *= std::accumulate(xi.begin(), xi.end(), 0.0);
    }
    FloatMatrix cols(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                spec.xi[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    return prod / float_det(std::move(cols));
}

} // namespace walkmat
