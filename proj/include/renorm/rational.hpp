#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace renorm {

/// Exact rational in canonical reduced form (GMP keeps gcd = 1, denominator > 0).
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q"; the result is canonicalized.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace renorm
