#include "kleene/energy_function.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kleene {

ExtValue Law::at(const Rational& x) const {
  switch (kind_) {
    case Kind::Bottom: return ExtValue::bottom();
    case Kind::Top: return ExtValue::top();
    case Kind::Affine: break;
  }
  Rational y = slope_ * x + offset_;
  if (y < 0) return ExtValue::bottom();
  return ExtValue::finite(std::move(y));
}

const char* to_string(ValidationError::Kind kind) {
  switch (kind) {
    case ValidationError::Kind::SlopeTooSmall: return "SlopeTooSmall";
    case ValidationError::Kind::NonMonotone: return "NonMonotone";
    case ValidationError::Kind::NegativeValue: return "NegativeValue";
    case ValidationError::Kind::MalformedPieces: return "MalformedPieces";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(ValidationError::Kind kind, const std::string& detail) {
  throw ValidationError(kind, std::string(to_string(kind)) + ": " + detail);
}

Law law_from_samples(const Rational& x1, const ExtValue& v1, const Rational& x2, const ExtValue& v2) {
  if (v1.is_bottom() && v2.is_bottom()) return Law::bottom();
  if (v1.is_top() && v2.is_top()) return Law::top();
  if (v1.is_finite() && v2.is_finite()) {
    Rational slope = (v2.value() - v1.value()) / (x2 - x1);
    Rational offset = v1.value() - slope * x1;
    return Law::affine(std::move(slope), std::move(offset));
  }
  throw std::logic_error("tabulate: samples straddle a breakpoint that is not a candidate");
}

ExtValue eval_raw(const RawEnergyFunction& raw, const Rational& x) {
  const Rational& b = *raw.bottom_boundary;
  if (x < b || (x == b && raw.bottom_at_boundary)) return ExtValue::bottom();
  if (raw.top_boundary) {
    const Rational& t = *raw.top_boundary;
    if (x > t || (x == t && raw.top_at_boundary)) return ExtValue::top();
  }
  auto it = std::upper_bound(raw.pieces.begin(), raw.pieces.end(), x,
                             [](const Rational& v, const RawPiece& p) { return v < p.start; });
  // Structural validation guarantees x lies at or after the first piece here.
  const RawPiece& p = *std::prev(it);
  return ExtValue::finite(p.intercept + p.slope * (x - p.start));
}

}  // namespace

EnergyFunction::EnergyFunction() : points_{Rational(0)}, values_{ExtValue::bottom()}, laws_{Law::bottom()} {}

EnergyFunction EnergyFunction::identity() {
  EnergyFunction f;
  f.values_[0] = ExtValue::finite(0);
  f.laws_[0] = Law::affine(1, 0);
  return f;
}

EnergyFunction EnergyFunction::shift(const Rational& delta) {
  RawEnergyFunction raw;
  if (delta >= 0) {
    raw.bottom_boundary = Rational(0);
    raw.pieces.push_back({0, delta, 1});
  } else {
    raw.bottom_boundary = Rational(-delta);
    raw.pieces.push_back({Rational(-delta), 0, 1});
  }
  return validate(raw);
}

EnergyFunction EnergyFunction::validate(const RawEnergyFunction& raw) {
  using K = ValidationError::Kind;
  if (!raw.bottom_boundary) {
    if (!raw.pieces.empty() || raw.top_boundary) {
      fail(K::MalformedPieces, "constant-bottom encoding must not carry pieces or a top boundary");
    }
    return EnergyFunction();
  }
  const Rational& b = *raw.bottom_boundary;
  if (b < 0) fail(K::MalformedPieces, "bottom boundary is negative");
  if (raw.top_boundary && *raw.top_boundary < b) fail(K::MalformedPieces, "top boundary lies below bottom boundary");

  if (raw.pieces.empty()) {
    bool ok = raw.top_boundary && *raw.top_boundary == b && (raw.bottom_at_boundary != raw.top_at_boundary);
    if (!ok) fail(K::MalformedPieces, "an empty piece list must leave no finite region");
  } else {
    if (raw.pieces.front().start != b) fail(K::MalformedPieces, "first piece must start at the bottom boundary");
    for (std::size_t i = 1; i < raw.pieces.size(); ++i) {
      if (!(raw.pieces[i - 1].start < raw.pieces[i].start)) {
        fail(K::MalformedPieces, "piece starts must be strictly increasing");
      }
    }
    if (raw.top_boundary) {
      const Rational& t = *raw.top_boundary;
      const Rational& last = raw.pieces.back().start;
      if (t < last) fail(K::MalformedPieces, "a piece starts above the top boundary");
      if (t == last && raw.top_at_boundary) fail(K::MalformedPieces, "last piece is empty");
      if (raw.pieces.size() == 1 && raw.bottom_at_boundary && t == b) {
        fail(K::MalformedPieces, "the only piece is empty");
      }
    }
  }
  for (const auto& p : raw.pieces) {
    if (p.slope < 1) fail(K::SlopeTooSmall, "slope " + format_rational(p.slope) + " < 1");
  }
  for (const auto& p : raw.pieces) {
    if (p.intercept < 0) fail(K::NegativeValue, "piece at " + format_rational(p.start) + " starts below 0");
  }
  for (std::size_t i = 1; i < raw.pieces.size(); ++i) {
    const auto& prev = raw.pieces[i - 1];
    const auto& cur = raw.pieces[i];
    Rational left_limit = prev.intercept + prev.slope * (cur.start - prev.start);
    if (cur.intercept < left_limit) {
      fail(K::NonMonotone, "downward jump at " + format_rational(cur.start));
    }
  }

  std::vector<Rational> candidates{Rational(0), b};
  for (const auto& p : raw.pieces) candidates.push_back(p.start);
  if (raw.top_boundary) candidates.push_back(*raw.top_boundary);
  return tabulate(std::move(candidates), [&raw](const Rational& x) { return eval_raw(raw, x); });
}

EnergyFunction EnergyFunction::tabulate(std::vector<Rational> candidates,
                                        const std::function<ExtValue(const Rational&)>& pointwise) {
  candidates.emplace_back(0);
  std::erase_if(candidates, [](const Rational& c) { return c < 0; });
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  EnergyFunction f;
  f.points_ = std::move(candidates);
  f.values_.clear();
  f.laws_.clear();
  const std::size_t m = f.points_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& lo = f.points_[i];
    f.values_.push_back(pointwise(lo));
    Rational x1, x2, x3;
    if (i + 1 < m) {
      Rational width = f.points_[i + 1] - lo;
      x1 = lo + width / 4;
      x2 = lo + width / 2;
      x3 = lo + width * 3 / 4;
    } else {
      x1 = lo + 1;
      x2 = lo + 2;
      x3 = lo + 3;
    }
    ExtValue v1 = pointwise(x1);
    Law law = law_from_samples(x1, v1, x2, pointwise(x2));
    if (!(law.at(x3) == pointwise(x3))) {
      throw std::logic_error("tabulate: interval is not governed by a single law");
    }
    f.laws_.push_back(std::move(law));
  }
  f.canonicalize();
  f.check_invariants();
  return f;
}

void EnergyFunction::canonicalize() {
  std::vector<Rational> points{points_[0]};
  std::vector<ExtValue> values{values_[0]};
  std::vector<Law> laws{laws_[0]};
  for (std::size_t i = 1; i < points_.size(); ++i) {
    bool removable = laws.back() == laws_[i] && values_[i] == laws_[i].at(points_[i]);
    if (removable) continue;
    points.push_back(points_[i]);
    values.push_back(values_[i]);
    laws.push_back(laws_[i]);
  }
  points_ = std::move(points);
  values_ = std::move(values);
  laws_ = std::move(laws);
}

void EnergyFunction::check_invariants() const {
  if (points_.empty() || points_[0] != 0 || values_.size() != points_.size() || laws_.size() != points_.size()) {
    throw std::logic_error("energy function: malformed breakpoint table");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0 && !(points_[i - 1] < points_[i])) throw std::logic_error("energy function: unsorted breakpoints");
    const Law& law = laws_[i];
    if (law.is_affine()) {
      if (law.slope() < 1) throw std::logic_error("energy function: slope below 1");
      if (law.slope() * points_[i] + law.offset() < 0) throw std::logic_error("energy function: negative value");
    }
    if (i > 0 && laws_[i - 1].at(points_[i]) > values_[i]) {
      throw std::logic_error("energy function: downward jump at breakpoint");
    }
    if (values_[i] > law.at(points_[i])) throw std::logic_error("energy function: downward jump after breakpoint");
  }
}

ExtValue EnergyFunction::at(const Rational& x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x);
  auto i = static_cast<std::size_t>(std::distance(points_.begin(), it)) - 1;
  if (points_[i] == x) return values_[i];
  return laws_[i].at(x);
}

ExtValue EnergyFunction::operator()(const ExtValue& x) const {
  switch (x.kind()) {
    case ExtValue::Kind::Bottom: return x;
    case ExtValue::Kind::Top: return is_bottom() ? ExtValue::bottom() : x;
    case ExtValue::Kind::Finite: break;
  }
  return at(x.value());
}

bool EnergyFunction::is_bottom() const {
  return points_.size() == 1 && values_[0].is_bottom() && laws_[0].kind() == Law::Kind::Bottom;
}

RawEnergyFunction EnergyFunction::to_raw() const {
  RawEnergyFunction raw;
  if (is_bottom()) return raw;

  // Cells alternate point i (index 2i) and interval i (index 2i+1).
  const std::size_t cells = 2 * points_.size();
  auto kind_of = [this](std::size_t k) {
    if (k % 2 == 0) return values_[k / 2].kind();
    switch (laws_[k / 2].kind()) {
      case Law::Kind::Bottom: return ExtValue::Kind::Bottom;
      case Law::Kind::Top: return ExtValue::Kind::Top;
      case Law::Kind::Affine: break;
    }
    return ExtValue::Kind::Finite;
  };
  std::size_t first = 0;
  while (kind_of(first) == ExtValue::Kind::Bottom) ++first;
  std::size_t last = cells - 1;
  while (last > first && kind_of(last) == ExtValue::Kind::Top) --last;

  raw.bottom_boundary = points_[first / 2];
  raw.bottom_at_boundary = first % 2 == 1;
  if (kind_of(last) == ExtValue::Kind::Top) {
    // Every live cell is top.
    raw.top_boundary = raw.bottom_boundary;
    raw.top_at_boundary = !raw.bottom_at_boundary;
    return raw;
  }
  if (last != cells - 1) {
    if (last % 2 == 1) {
      raw.top_boundary = points_[last / 2 + 1];
      raw.top_at_boundary = true;
    } else {
      raw.top_boundary = points_[last / 2];
      raw.top_at_boundary = false;
    }
  }
  for (std::size_t k = first; k <= last; ++k) {
    std::size_t i = k / 2;
    if (k % 2 == 1) {
      const Law& law = laws_[i];
      raw.pieces.push_back({points_[i], law.at(points_[i]).value(), law.slope()});
      continue;
    }
    const ExtValue& v = values_[i];
    bool right_continuous = k + 1 <= last && laws_[i].is_affine() && laws_[i].at(points_[i]) == v;
    if (right_continuous) continue;
    bool closes_last_piece = k == last && k > first && laws_[i - 1].is_affine() && laws_[i - 1].at(points_[i]) == v;
    if (closes_last_piece) continue;
    if (k == first && k == last) {
      raw.pieces.push_back({points_[i], v.value(), 1});
      continue;
    }
    throw std::logic_error("energy function has a point value the piece layout cannot express");
  }
  return raw;
}

ExtValue eval(const EnergyFunction& f, const ExtValue& x) { return f(x); }

EnergyFunction compose(const EnergyFunction& f, const EnergyFunction& g) {
  if (f.is_bottom()) return f;
  std::vector<Rational> candidates = f.breakpoints();
  const auto& fp = f.breakpoints();
  for (std::size_t i = 0; i < fp.size(); ++i) {
    const Law& law = f.laws()[i];
    if (!law.is_affine()) continue;
    for (const Rational& p : g.breakpoints()) {
      Rational x = (p - law.offset()) / law.slope();
      if (x > fp[i] && (i + 1 == fp.size() || x < fp[i + 1])) candidates.push_back(std::move(x));
    }
  }
  return EnergyFunction::tabulate(std::move(candidates), [&](const Rational& x) { return g(f.at(x)); });
}

EnergyFunction join(const EnergyFunction& f, const EnergyFunction& g) {
  std::vector<Rational> candidates = f.breakpoints();
  candidates.insert(candidates.end(), g.breakpoints().begin(), g.breakpoints().end());
  for (const Law& a : f.laws()) {
    if (!a.is_affine()) continue;
    for (const Law& b : g.laws()) {
      if (!b.is_affine() || a.slope() == b.slope()) continue;
      candidates.push_back((b.offset() - a.offset()) / (a.slope() - b.slope()));
    }
  }
  return EnergyFunction::tabulate(std::move(candidates),
                                  [&](const Rational& x) { return ext_join(f.at(x), g.at(x)); });
}

std::vector<Rational> diagonal_crossings(const EnergyFunction& f) {
  std::vector<Rational> out;
  for (const Law& law : f.laws()) {
    if (!law.is_affine() || law.slope() == 1) continue;
    Rational x = law.offset() / (1 - law.slope());
    if (x >= 0) out.push_back(std::move(x));
  }
  return out;
}

EnergyFunction star(const EnergyFunction& f) {
  std::vector<Rational> candidates = f.breakpoints();
  auto crossings = diagonal_crossings(f);
  candidates.insert(candidates.end(), crossings.begin(), crossings.end());
  return EnergyFunction::tabulate(std::move(candidates), [&](const Rational& x) {
    ExtValue here = ExtValue::finite(x);
    return f.at(x) <= here ? here : ExtValue::top();
  });
}

bool equal(const EnergyFunction& f, const EnergyFunction& g) { return f == g; }

EnergyFunction power(const EnergyFunction& f, unsigned n) {
  EnergyFunction out = EnergyFunction::identity();
  for (unsigned i = 0; i < n; ++i) out = compose(out, f);
  return out;
}

LocalFinitenessReport local_finiteness_witness(const EnergyFunction& f, const ExtValue& x, unsigned max_n) {
  using Outcome = LocalFinitenessReport::Outcome;
  ExtValue current = x;
  ExtValue sup = x;
  for (unsigned n = 0; n < max_n; ++n) {
    ExtValue next = f(current);
    if (next <= sup) return {Outcome::Stabilized, n, sup};
    if (next.is_top() || (current.is_finite() && next > current)) {
      return {Outcome::DivergesToTop, n, ExtValue::top()};
    }
    sup = ext_join(sup, next);
    current = std::move(next);
  }
  throw BudgetExceeded("local finiteness: no certificate within " + std::to_string(max_n) + " steps");
}

std::string describe(const EnergyFunction& f) {
  std::ostringstream os;
  const auto& pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) os << "; ";
    os << "f(" << format_rational(pts[i]) << ")=" << to_string(f.breakpoint_values()[i]) << "; ("
       << format_rational(pts[i]) << "," << (i + 1 < pts.size() ? format_rational(pts[i + 1]) : "inf") << "): ";
    const Law& law = f.laws()[i];
    switch (law.kind()) {
      case Law::Kind::Bottom: os << "bot"; break;
      case Law::Kind::Top: os << "top"; break;
      case Law::Kind::Affine:
        os << format_rational(law.slope()) << "x";
        if (law.offset() >= 0) os << "+";
        os << format_rational(law.offset());
        break;
    }
  }
  return os.str();
}

}  // namespace kleene
