#include "walkmat/poly.hpp"

#include "walkmat/errors.hpp"
#include "walkmat/exact_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace walkmat {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::x() {
    return UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& v : c) v = -v;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs_);
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
}

UniPoly poly_pow(const UniPoly& p, int e) {
    if (e < 0) throw PreconditionViolation("negative polynomial power");
    UniPoly out = UniPoly::constant(Rational(1));
    UniPoly base = p;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

UniPoly z_poly(int k, const Rational& tau) {
    if (k < 0) throw InvalidOrder("z_poly: k must be >= 0");
    UniPoly prev = UniPoly::constant(Rational(1));
    if (k == 0) return prev;
    UniPoly cur(std::vector<Rational>{-tau, Rational(1)});
    UniPoly step(std::vector<Rational>{Rational(-2) * tau, Rational(1)}); // x - 2 tau
    for (int i = 2; i <= k; ++i) {
        UniPoly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniPoly z_sum(int m, const Rational& tau) {
    if (m < 1) throw InvalidOrder("z_sum: m must be >= 1");
    UniPoly prev = UniPoly::constant(Rational(1));
    UniPoly acc = prev;
    if (m == 1) return acc;
    UniPoly cur(std::vector<Rational>{-tau, Rational(1)});
    acc = acc + cur;
    UniPoly step(std::vector<Rational>{Rational(-2) * tau, Rational(1)});
    for (int i = 2; i < m; ++i) {
        UniPoly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
        acc = acc + cur;
    }
    return acc;
}

namespace {

UniPoly chebyshev_common(int n, UniPoly cur) {
    UniPoly prev = UniPoly::constant(Rational(1));
    if (n == 0) return prev;
    UniPoly two_x(std::vector<Rational>{Rational(0), Rational(2)});
    for (int i = 2; i <= n; ++i) {
        UniPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

UniPoly chebyshev_u(int n) {
    if (n < 0) throw InvalidOrder("chebyshev_u: n must be >= 0");
    return chebyshev_common(n, UniPoly(std::vector<Rational>{Rational(0), Rational(2)}));
}

UniPoly chebyshev_w4(int n) {
    if (n < 0) throw InvalidOrder("chebyshev_w4: n must be >= 0");
    return chebyshev_common(n, UniPoly(std::vector<Rational>{Rational(1), Rational(2)}));
}

UniPoly chebyshev_w4_sum(int m) {
    if (m < 1) throw InvalidOrder("chebyshev_w4_sum: m must be >= 1");
    UniPoly acc;
    for (int k = 0; k < m; ++k) acc = acc + chebyshev_w4(k);
    return acc;
}

UniPoly compose_affine(const UniPoly& p, const Rational& a, const Rational& b) {
    if (a == 0) throw DegenerateSubstitution("compose_affine: a must be nonzero");
    UniPoly arg(std::vector<Rational>{b, a});
    UniPoly acc;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * arg + UniPoly::constant(p.coeff(k));
    return acc;
}

UniPoly rational_substitution(const UniPoly& p, const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw DivisionByZeroPoly("rational_substitution: zero denominator polynomial");
    if (p.is_zero()) return UniPoly();
    int n = p.degree();
    // Horner: acc <- acc*num + c_k * den^{n-k}, k = n..0.
    std::vector<UniPoly> den_pow(static_cast<std::size_t>(n) + 1);
    den_pow[0] = UniPoly::constant(Rational(1));
    for (int i = 1; i <= n; ++i) den_pow[static_cast<std::size_t>(i)] = den_pow[static_cast<std::size_t>(i - 1)] * den;
    UniPoly acc;
    for (int k = n; k >= 0; --k)
        acc = acc * num + den_pow[static_cast<std::size_t>(n - k)] * p.coeff(k);
    return acc;
}

Rational sylvester_resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw UndefinedResultant("resultant of a zero polynomial");
    int n = f.degree();
    int m = g.degree();
    if (n == 0 && m == 0) return Rational(1);
    ExactMatrix s(n + m, n + m);
    for (int r = 0; r < m; ++r)
        for (int t = 0; t <= n; ++t)
            s.at(r, r + t) = f.coeff(n - t);
    for (int r = 0; r < n; ++r)
        for (int t = 0; t <= m; ++t)
            s.at(m + r, r + t) = g.coeff(m - t);
    return det_exact(s);
}

UniPoly resultant_in_t(int m, const Rational& tau) {
    if (m < 2) throw InvalidOrder("resultant_in_t: m must be >= 2");
    UniPoly zm = z_poly(m, tau);
    UniPoly zm1 = z_poly(m - 1, tau);
    UniPoly g = z_sum(m, tau);
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        Rational t(k);
        pts.emplace_back(t, sylvester_resultant(zm + zm1 * t, g));
    }
    return lagrange_interpolate(pts);
}

Rational schur_rhs(int k, const std::vector<Rational>& a, const std::vector<Rational>& c) {
    if (k < 1) throw InvalidOrder("schur_rhs: k must be >= 1");
    if (a.size() != static_cast<std::size_t>(k) || c.size() != static_cast<std::size_t>(k))
        throw ShapeError("schur_rhs: need exactly k recurrence coefficients");
    if (a[0] == 0) throw PreconditionViolation("schur_rhs: a_1 must be nonzero");
    for (int j = 2; j <= k; ++j) {
        if (a[static_cast<std::size_t>(j - 1)] == 0 || c[static_cast<std::size_t>(j - 1)] == 0)
            throw PreconditionViolation("schur_rhs: a_j and c_j must be nonzero for j > 1");
    }
    Rational out = (static_cast<long>(k) * (k - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
    for (int j = 1; j <= k; ++j) {
        out *= pow_rational(a[static_cast<std::size_t>(j - 1)], k - 2L * j + 1);
        if (j > 1) out *= pow_rational(c[static_cast<std::size_t>(j - 1)], j - 1);
    }
    return out;
}

UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw PreconditionViolation("lagrange_interpolate: repeated node");
    UniPoly out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        UniPoly basis = UniPoly::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(std::vector<Rational>{-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        out = out + basis * (points[i].second / denom);
    }
    return out;
}

std::string poly_to_text(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

// One term of the text form: [coefficient] [*] [x [^ power]].
void parse_term(const std::string& term, bool negate, std::vector<Rational>& acc) {
    std::string s;
    for (char ch : term)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw FormatError("empty polynomial term");

    Rational coeff(1);
    int power = 0;
    std::size_t xpos = s.find('x');
    if (xpos == std::string::npos) {
        coeff = parse_rational(s);
    } else {
        std::string head = s.substr(0, xpos);
        if (!head.empty() && head.back() == '*') {
            head.pop_back();
            if (head.empty() || head == "-")
                throw FormatError("bad polynomial term '" + term + "'");
        }
        if (head.empty())
            coeff = Rational(1);
        else if (head == "-")
            coeff = Rational(-1);
        else
            coeff = parse_rational(head);
        std::string tail = s.substr(xpos + 1);
        if (tail.empty()) {
            power = 1;
        } else if (tail[0] == '^') {
            std::string num = tail.substr(1);
            if (num.empty()) throw FormatError("missing exponent in term '" + term + "'");
            for (char ch : num)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw FormatError("bad exponent in term '" + term + "'");
            power = std::stoi(num);
        } else {
            throw FormatError("bad polynomial term '" + term + "'");
        }
    }
    if (negate) coeff = -coeff;
    if (acc.size() <= static_cast<std::size_t>(power)) acc.resize(static_cast<std::size_t>(power) + 1, Rational(0));
    acc[static_cast<std::size_t>(power)] += coeff;
}

} // namespace

UniPoly poly_from_text(const std::string& text) {
    std::vector<Rational> acc;
    std::string term;
    bool negate = false;
    bool any = false;
    bool at_term_start = true; // sign characters here attach to the term
    for (char ch : text) {
        if ((ch == '+' || ch == '-') && !at_term_start) {
            parse_term(term, negate, acc);
            any = true;
            term.clear();
            negate = ch == '-';
            at_term_start = true;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            if (at_term_start && (ch == '+' || ch == '-')) {
                if (ch == '-') negate = !negate;
                continue;
            }
            term += ch;
            at_term_start = false;
        }
    }
    if (!term.empty()) {
        parse_term(term, negate, acc);
        any = true;
    }
    if (!any) throw FormatError("empty polynomial text");
    return UniPoly(std::move(acc));
}

} // namespace walkmat
