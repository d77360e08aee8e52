#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mgn {

/// Exact rational scalar, always kept in lowest terms.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Lowest-terms text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline Rational make_rational(long numerator, long denominator = 1) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

}  // namespace mgn
