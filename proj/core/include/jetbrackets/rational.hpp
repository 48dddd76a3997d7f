#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jetbrackets {

/// Exact rational coefficient type. All construction goes through the
/// helpers below: raw mpq_class never canonicalizes fraction or string
/// input on its own, and non-canonical values break arithmetic.
using Rational = mpq_class;

/// Canonicalized rational from machine integers. den must be nonzero.
Rational rat(long num, long den = 1);

/// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
/// Throws ConfigError on malformed text or zero denominator.
Rational rational_from_string(std::string_view text);

/// Exact decimal-free rendering: "p" or "p/q" with q > 1.
std::string rational_to_string(const Rational& q);

/// True when the denominator is 1.
bool rational_is_integer(const Rational& q);

/// -1, 0, or +1.
int rational_sign(const Rational& q);

} // namespace jetbrackets
