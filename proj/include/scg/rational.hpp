#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace scg {

/// Exact rational number. All costs and probabilities use this type.
using Rational = mpq_class;

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& r);

/// Parses "p", "p/q" or a finite decimal such as "1.1". Throws ValidationError.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace scg
