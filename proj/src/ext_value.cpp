#include "kleene/ext_value.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace kleene {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  Rational d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r = Rational{std::string(num)} / d;
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) { return value.str(); }

ExtValue ExtValue::top() {
  ExtValue x;
  x.kind_ = Kind::Top;
  return x;
}

ExtValue ExtValue::finite(Rational value) {
  if (value < 0) throw std::invalid_argument("finite energy values must be nonnegative");
  ExtValue x;
  x.kind_ = Kind::Finite;
  x.value_ = std::move(value);
  return x;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != ExtValue::Kind::Finite) return std::strong_ordering::equal;
  return compare(a.value_, b.value_);
}

ExtValue ext_shift(const ExtValue& x, const Rational& delta) {
  if (!x.is_finite()) return x;
  Rational shifted = x.value() + delta;
  if (shifted < 0) return ExtValue::bottom();
  return ExtValue::finite(std::move(shifted));
}

ExtValue ext_join(const ExtValue& x, const ExtValue& y) { return x < y ? y : x; }

std::strong_ordering ext_cmp(const ExtValue& x, const ExtValue& y) { return x <=> y; }

std::string to_string(const ExtValue& x) {
  switch (x.kind()) {
    case ExtValue::Kind::Bottom: return "bot";
    case ExtValue::Kind::Top: return "top";
    case ExtValue::Kind::Finite: break;
  }
  return format_rational(x.value());
}

ExtValue parse_ext_value(std::string_view text) {
  if (text == "bot") return ExtValue::bottom();
  if (text == "top") return ExtValue::top();
  Rational r = parse_rational(text);
  if (r < 0) throw std::invalid_argument("energy value must be nonnegative: '" + std::string(text) + "'");
  return ExtValue::finite(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const ExtValue& x) { return os << to_string(x); }

}  // namespace kleene
