#pragma once

#include "kleene/ext_value.hpp"
#include "kleene/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleene {

/// Behaviour of an energy function on an open interval between breakpoints.
class Law {
 public:
  enum class Kind : std::uint8_t { Bottom, Affine, Top };

  static Law bottom() { return Law(Kind::Bottom, 0, 0); }
  static Law top() { return Law(Kind::Top, 0, 0); }
  /// y = slope * x + offset
  static Law affine(Rational slope, Rational offset) {
    return Law(Kind::Affine, std::move(slope), std::move(offset));
  }

  Kind kind() const { return kind_; }
  bool is_affine() const { return kind_ == Kind::Affine; }
  const Rational& slope() const { return slope_; }
  const Rational& offset() const { return offset_; }

  /// Value of the law at x, or of its limit when x is an interval end.
  /// Negative affine values are reported as bottom.
  ExtValue at(const Rational& x) const;

  friend bool operator==(const Law& a, const Law& b) {
    return a.kind_ == b.kind_ && a.slope_ == b.slope_ && a.offset_ == b.offset_;
  }

 private:
  Law(Kind kind, Rational slope, Rational offset)
      : kind_(kind), slope_(std::move(slope)), offset_(std::move(offset)) {}

  Kind kind_;
  Rational slope_;
  Rational offset_;
};

/// A segment of the exchange layout: f(x) = intercept + slope * (x - start)
/// on [start, next start).
struct RawPiece {
  Rational start;
  Rational intercept;
  Rational slope;
};

/// The piece-list layout used by the JSON format.
///
/// f(x) is bottom below `bottom_boundary` (and at it when the flag is set),
/// top above `top_boundary` (and at it when the flag is set), and given by
/// the pieces in between. An absent bottom boundary encodes constant bottom.
struct RawEnergyFunction {
  std::optional<Rational> bottom_boundary;
  bool bottom_at_boundary = false;
  std::vector<RawPiece> pieces;
  std::optional<Rational> top_boundary;
  bool top_at_boundary = false;
};

class ValidationError : public std::invalid_argument {
 public:
  enum class Kind : std::uint8_t { SlopeTooSmall, NonMonotone, NegativeValue, MalformedPieces };

  ValidationError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(ValidationError::Kind kind);

/// A piecewise-affine energy function on [0, top] with bottom, in canonical form.
///
/// Internally the finite domain [0, inf) is split at breakpoints
/// 0 = c_0 < c_1 < ... < c_m. Each breakpoint carries its exact value and each
/// open interval (c_i, c_{i+1}) (with c_{m+1} = inf) carries a Law. A
/// breakpoint is kept only if removing it would change the function, so two
/// canonical functions are extensionally equal iff they are structurally equal.
///
/// Invariants: affine slopes are >= 1, values are nonnegative, and the value
/// sequence left-limit <= point value <= right-limit holds at every breakpoint
/// (upward jumps only). The values at bottom and top are derived: f(bot) = bot,
/// f(top) = top unless f is constant bottom.
class EnergyFunction {
 public:
  /// Constant bottom (the semiring zero).
  EnergyFunction();

  static EnergyFunction bottom() { return EnergyFunction(); }
  /// The semiring one.
  static EnergyFunction identity();
  /// x + delta where that is >= 0, bottom below.
  static EnergyFunction shift(const Rational& delta);
  /// Canonicalizes and checks the exchange layout.
  static EnergyFunction validate(const RawEnergyFunction& raw);

  /// Builds a function from an exact pointwise description.
  ///
  /// `candidates` must contain every point where the described function can
  /// change its law; extra candidates are harmless. Between candidates the
  /// function is sampled and its law recovered exactly. Throws std::logic_error
  /// if the samples are inconsistent with a single law (a missing candidate) or
  /// the result violates an energy-function invariant.
  static EnergyFunction tabulate(std::vector<Rational> candidates,
                                 const std::function<ExtValue(const Rational&)>& pointwise);

  ExtValue operator()(const ExtValue& x) const;
  ExtValue at(const Rational& x) const;

  bool is_bottom() const;

  const std::vector<Rational>& breakpoints() const { return points_; }
  const std::vector<ExtValue>& breakpoint_values() const { return values_; }
  /// laws()[i] holds on (breakpoints()[i], breakpoints()[i+1]).
  const std::vector<Law>& laws() const { return laws_; }
  /// Behaviour on the unbounded final interval.
  const Law& asymptotic_law() const { return laws_.back(); }

  RawEnergyFunction to_raw() const;

  friend bool operator==(const EnergyFunction& a, const EnergyFunction& b) {
    return a.points_ == b.points_ && a.values_ == b.values_ && a.laws_ == b.laws_;
  }

 private:
  void canonicalize();
  void check_invariants() const;

  std::vector<Rational> points_;
  std::vector<ExtValue> values_;
  std::vector<Law> laws_;
};

ExtValue eval(const EnergyFunction& f, const ExtValue& x);

/// Diagrammatic composition: x -> g(f(x)).
EnergyFunction compose(const EnergyFunction& f, const EnergyFunction& g);

/// Pointwise supremum.
EnergyFunction join(const EnergyFunction& f, const EnergyFunction& g);

/// Identity where f(x) <= x, top where f(x) > x.
EnergyFunction star(const EnergyFunction& f);

bool equal(const EnergyFunction& f, const EnergyFunction& g);

/// f composed with itself n times (identity for n = 0).
EnergyFunction power(const EnergyFunction& f, unsigned n);

/// Points x >= 0 where some affine law of f meets the diagonal.
std::vector<Rational> diagonal_crossings(const EnergyFunction& f);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalFinitenessReport {
  enum class Outcome : std::uint8_t { Stabilized, DivergesToTop };
  Outcome outcome;
  /// Number of applications of f before the certificate was observed.
  unsigned steps;
  /// The stabilized partial supremum (top for divergence).
  ExtValue value;
};

/// Iterates x, xf, xf^2, ... and returns the first certificate found: either
/// the next iterate is below the running supremum (monotonicity then bounds
/// every later iterate) or two consecutive live finite iterates strictly
/// increase (gain monotonicity then makes the orbit unbounded).
LocalFinitenessReport local_finiteness_witness(const EnergyFunction& f, const ExtValue& x,
                                               unsigned max_n);

std::string describe(const EnergyFunction& f);

}  // namespace kleene
