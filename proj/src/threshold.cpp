#include "kleene/threshold.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleene {

namespace {

/// Least upward-closed set containing the finite x accepted by `member`,
/// given that membership can only change at a candidate point.
template <class Member>
ThresholdPredicate first_member(std::vector<Rational> candidates, Member member) {
  candidates.emplace_back(0);
  std::erase_if(candidates, [](const Rational& c) { return c < 0; });
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (member(candidates[i])) return ThresholdPredicate::from(candidates[i], true);
    Rational inside = i + 1 < candidates.size() ? (candidates[i] + candidates[i + 1]) / 2 : candidates[i] + 1;
    if (member(inside)) return ThresholdPredicate::from(candidates[i], false);
  }
  return ThresholdPredicate::never();
}

}  // namespace

ThresholdPredicate ThresholdPredicate::from(Rational threshold, bool inclusive) {
  if (threshold < 0) throw std::invalid_argument("threshold must be nonnegative");
  ThresholdPredicate v;
  v.never_ = false;
  v.threshold_ = std::move(threshold);
  v.inclusive_ = inclusive;
  return v;
}

bool ThresholdPredicate::operator()(const ExtValue& x) const {
  if (never_ || x.is_bottom()) return false;
  if (x.is_top()) return true;
  return x.value() > threshold_ || (inclusive_ && x.value() == threshold_);
}

bool apply(const ThresholdPredicate& v, const ExtValue& x) { return v(x); }

bool leq(const ThresholdPredicate& v, const ThresholdPredicate& w) { return vjoin(v, w) == w; }

ThresholdPredicate act(const EnergyFunction& f, const ThresholdPredicate& v) {
  if (v.is_never() || f.is_bottom()) return ThresholdPredicate::never();
  std::vector<Rational> candidates = f.breakpoints();
  const auto& pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Law& law = f.laws()[i];
    if (law.is_affine()) candidates.push_back((v.threshold() - law.offset()) / law.slope());
  }
  return first_member(std::move(candidates), [&](const Rational& x) { return v(f.at(x)); });
}

ThresholdPredicate vjoin(const ThresholdPredicate& v, const ThresholdPredicate& w) {
  if (v.is_never()) return w;
  if (w.is_never()) return v;
  if (v.threshold() < w.threshold()) return v;
  if (w.threshold() < v.threshold()) return w;
  return v.inclusive() ? v : w;
}

ThresholdPredicate omega(const EnergyFunction& f) {
  if (f.is_bottom()) return ThresholdPredicate::never();
  std::vector<Rational> candidates = f.breakpoints();
  auto crossings = diagonal_crossings(f);
  candidates.insert(candidates.end(), crossings.begin(), crossings.end());
  return first_member(std::move(candidates), [&](const Rational& x) {
    ExtValue y = f.at(x);
    return !y.is_bottom() && y >= ExtValue::finite(x);
  });
}

EnergyFunction compose_all(std::span<const EnergyFunction> fs) {
  EnergyFunction out = EnergyFunction::identity();
  for (const auto& f : fs) out = compose(out, f);
  return out;
}

ThresholdPredicate infinite_product_lasso(std::span<const EnergyFunction> prefix,
                                          std::span<const EnergyFunction> cycle) {
  if (cycle.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
  return act(compose_all(prefix), omega(compose_all(cycle)));
}

std::string to_string(const ThresholdPredicate& v) {
  if (v.is_never()) return "never";
  return std::string(v.inclusive() ? "from " : "above ") + format_rational(v.threshold());
}

}  // namespace kleene
