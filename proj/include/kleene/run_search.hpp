#pragma once

#include "kleene/energy_function.hpp"
#include "kleene/ext_value.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kleene {

/// Energy level used by the brute-force run oracles.
///
/// Besides bottom, exact finite values and top, a level may be `a*W + b` with
/// a > 0, standing for "an arbitrarily large finite energy W" pushed through
/// affine laws. This is how the oracles realize top-continuity: asking whether
/// a run survives from top means asking whether it survives from every large
/// enough finite energy.
class SymbolicEnergy {
 public:
  enum class Kind : std::uint8_t { Bottom, Level, Top };

  SymbolicEnergy() = default;

  static SymbolicEnergy bottom() { return {}; }
  static SymbolicEnergy top();
  static SymbolicEnergy finite(Rational value);
  /// W itself.
  static SymbolicEnergy unbounded();
  static SymbolicEnergy level(Rational coefficient, Rational constant);
  /// Literal embedding: top stays top.
  static SymbolicEnergy from(const ExtValue& x);

  Kind kind() const { return kind_; }
  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_finite() const { return kind_ == Kind::Level && coefficient_ == 0; }
  const Rational& coefficient() const { return coefficient_; }
  const Rational& constant() const { return constant_; }

  /// Collapses unbounded levels to top.
  ExtValue to_ext() const;

  friend std::strong_ordering operator<=>(const SymbolicEnergy& a, const SymbolicEnergy& b);
  friend bool operator==(const SymbolicEnergy& a, const SymbolicEnergy& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Kind kind_ = Kind::Bottom;
  Rational coefficient_;
  Rational constant_;
};

SymbolicEnergy apply(const EnergyFunction& f, const SymbolicEnergy& e);

std::string to_string(const SymbolicEnergy& e);

struct Transition {
  std::size_t from;
  std::size_t to;
  EnergyFunction fn;
};

/// A finite graph of energy transitions; parallel edges are kept apart.
struct TransitionGraph {
  std::size_t states = 0;
  std::vector<Transition> edges;
};

struct EnergySeed {
  std::size_t state;
  SymbolicEnergy energy;
};

struct EnergySearchResult {
  /// Supremum of energies reachable at each state (top when unbounded).
  std::vector<SymbolicEnergy> best;
  /// Edge that last improved each state.
  std::vector<std::optional<std::size_t>> via;
};

/// Maximal reachable energy per state over all finite walks from the seeds.
///
/// Keeping only the best energy per state is sound because every transition
/// is monotone. After `states` relaxation rounds every simple walk has been
/// seen, so any later improvement must come from a cycle that strictly gains
/// energy at a reachable entry; such states (and everything downstream) are
/// set to top, repeating until nothing changes.
EnergySearchResult max_energies(const TransitionGraph& graph, std::span<const EnergySeed> seeds);

/// Best-effort walk from a seed to `target` along the edges recorded in `result`.
/// Returned only if replaying it from the seed energy stays alive.
std::optional<std::vector<std::size_t>> trace_path(const TransitionGraph& graph, const EnergySearchResult& result,
                                                   std::span<const EnergySeed> seeds, std::size_t target);

struct Lasso {
  std::vector<std::size_t> prefix;  ///< states from a seed up to the loop state
  std::vector<std::size_t> cycle;   ///< states after the loop state, ending at it
};

struct LassoSearchResult {
  bool found = false;
  std::optional<Lasso> witness;
};

/// Decides whether some infinite run from the seeds visits an accepting state
/// infinitely often while staying alive.
///
/// For each accepting state q with maximal reachable energy z the search asks
/// whether some closed walk through q returns with energy >= z. Checking only
/// the maximal z suffices because energy functions have nondecreasing gain.
/// Seeds at top, and states whose supremum is top, are treated as arbitrarily
/// large finite energies.
LassoSearchResult find_accepting_lasso(const TransitionGraph& graph, const std::vector<bool>& accepting,
                                       std::span<const EnergySeed> seeds);

/// Seed energy for a Buchi question asked at initial energy x.
SymbolicEnergy buchi_seed(const ExtValue& x);

}  // namespace kleene
