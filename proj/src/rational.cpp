#include "walkmat/rational.hpp"

#include "walkmat/errors.hpp"

#include <cctype>

namespace walkmat {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw FormatError("empty rational literal");
    std::string s = text.substr(b, e - b + 1);

    if (s[0] == '+') s.erase(0, 1);          // GMP's parser takes only '-'
    if (s.empty()) throw FormatError("bad rational literal: '" + text + "'");
    std::size_t pos = s[0] == '-' ? 1 : 0;
    std::size_t slash = s.find('/', pos);
    if (slash == std::string::npos) {
        if (!all_digits(s, pos, s.size()))
            throw FormatError("bad rational literal: '" + text + "'");
        return Rational(s);
    }
    if (!all_digits(s, pos, slash) || !all_digits(s, slash + 1, s.size()))
        throw FormatError("bad rational literal: '" + text + "'");
    Rational r(s);
    if (r.get_den() == 0) throw FormatError("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

double to_double(const Rational& r) {
    return r.get_d();
}

Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw PreconditionViolation("0 raised to a negative power");
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational out(1);
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

} // namespace walkmat
