#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace walkmat {

// Exact arbitrary-precision scalars. GMP keeps mpq_class values in canonical
// reduced form (gcd(|num|, den) = 1, den > 0) as long as they are built
// through its arithmetic operators, which is the only way this codebase
// builds them.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parse "p", "-p", or "p/q" (decimal digits only). Rejects floats and any
/// other syntax; throws FormatError. The result is canonicalized.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// r^e with integer e of either sign. Negative e requires r != 0.
Rational pow_rational(const Rational& r, long e);

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace walkmat
