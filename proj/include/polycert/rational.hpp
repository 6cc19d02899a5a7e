#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polycert {

/// Exact rational number. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace polycert
