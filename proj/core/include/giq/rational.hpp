#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace giq {

// Arbitrary-precision exact scalars. mpq_class keeps every value in lowest
// terms with a positive denominator after each arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// Formats as "-1/3", "2", "0".
std::string to_string(const Rational& q);

/// Parses "5", "-1/3", "3/6" (reduced on return). Throws InputError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Returns the integer value; throws IntegrityError when q is not integral
/// or does not fit in 64 bits.
long long to_int64(const Rational& q);

}  // namespace giq
