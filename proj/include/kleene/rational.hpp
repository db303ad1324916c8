#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace kleene {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace kleene
