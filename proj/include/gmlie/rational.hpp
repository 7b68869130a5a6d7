#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gmlie {

/// Exact rational scalar. mpq_class keeps values canonical after every
/// arithmetic operation; construct through make_rational() when building
/// from a numerator/denominator pair.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws UsageError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

} // namespace gmlie
