#pragma once

#include "kleene/energy_function.hpp"
#include "kleene/ext_value.hpp"

#include <span>
#include <string>

namespace kleene {

/// A top-continuous, finitely additive map from the energy lattice to {bot, top}.
///
/// Such a map is the indicator of an upward-closed set of energies: either
/// nothing (Never) or every x >= t (inclusive) / x > t (exclusive), plus top.
/// A map that is true only at top is not top-continuous and has no encoding.
class ThresholdPredicate {
 public:
  /// Never.
  ThresholdPredicate() = default;

  static ThresholdPredicate never() { return ThresholdPredicate(); }
  /// Throws std::invalid_argument if `threshold` is negative.
  static ThresholdPredicate from(Rational threshold, bool inclusive);

  bool is_never() const { return never_; }
  /// Precondition: !is_never().
  const Rational& threshold() const { return threshold_; }
  bool inclusive() const { return inclusive_; }

  /// true means top.
  bool operator()(const ExtValue& x) const;

  friend bool operator==(const ThresholdPredicate& a, const ThresholdPredicate& b) {
    if (a.never_ || b.never_) return a.never_ == b.never_;
    return a.threshold_ == b.threshold_ && a.inclusive_ == b.inclusive_;
  }

 private:
  bool never_ = true;
  Rational threshold_;
  bool inclusive_ = false;
};

bool apply(const ThresholdPredicate& v, const ExtValue& x);

/// Pointwise order: v <= w.
bool leq(const ThresholdPredicate& v, const ThresholdPredicate& w);

/// Left action by precomposition: x -> v(f(x)).
ThresholdPredicate act(const EnergyFunction& f, const ThresholdPredicate& v);

ThresholdPredicate vjoin(const ThresholdPredicate& v, const ThresholdPredicate& w);

/// The infinite product f f f ...: true exactly at the live x with f(x) >= x.
ThresholdPredicate omega(const EnergyFunction& f);

/// Infinite product of prefix . cycle . cycle . ...; `cycle` must be nonempty.
ThresholdPredicate infinite_product_lasso(std::span<const EnergyFunction> prefix,
                                          std::span<const EnergyFunction> cycle);

/// Composition of all functions in order (identity when empty).
EnergyFunction compose_all(std::span<const EnergyFunction> fs);

std::string to_string(const ThresholdPredicate& v);

}  // namespace kleene
