#pragma once

#include "kleene/rational.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kleene {

/// An element of the energy lattice [0, top] with an extra bottom below 0.
///
/// Bottom < Finite(p) < Finite(q) < Top whenever p < q. Finite values are
/// nonnegative exact rationals.
class ExtValue {
 public:
  enum class Kind : std::uint8_t { Bottom, Finite, Top };

  /// Default-constructs bottom.
  ExtValue() = default;

  static ExtValue bottom() { return ExtValue(); }
  static ExtValue top();
  /// Throws std::invalid_argument if `value` is negative.
  static ExtValue finite(Rational value);

  Kind kind() const { return kind_; }
  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_top() const { return kind_ == Kind::Top; }

  /// Precondition: is_finite().
  const Rational& value() const { return value_; }

  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);
  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Kind kind_ = Kind::Bottom;
  Rational value_;
};

/// Saturating shift: bottom and top are absorbing, and a finite result below
/// zero collapses to bottom.
ExtValue ext_shift(const ExtValue& x, const Rational& delta);

ExtValue ext_join(const ExtValue& x, const ExtValue& y);

std::strong_ordering ext_cmp(const ExtValue& x, const ExtValue& y);

/// "bot", "top", or a rational string such as "3/2".
std::string to_string(const ExtValue& x);
ExtValue parse_ext_value(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExtValue& x);

}  // namespace kleene
