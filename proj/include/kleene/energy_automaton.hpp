#pragma once

#include "kleene/energy_algebra.hpp"
#include "kleene/run_search.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kleene {

/// A finite automaton whose transitions transform energy.
///
/// The initial vector has identity entries on `initial` states and bottom
/// elsewhere; absent transitions are constant bottom.
class EnergyAutomaton {
 public:
  /// Throws std::invalid_argument on duplicate or missing states, or a
  /// transition matrix of the wrong size.
  EnergyAutomaton(std::vector<std::string> state_names, std::vector<bool> initial, std::vector<bool> accepting,
                  EnergyMatrix transitions);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& state_names() const { return names_; }
  const std::vector<bool>& initial() const { return initial_; }
  const std::vector<bool>& accepting() const { return accepting_; }
  const EnergyMatrix& transitions() const { return transitions_; }

  std::size_t index_of(const std::string& name) const;
  TransitionGraph graph() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> initial_;
  std::vector<bool> accepting_;
  EnergyMatrix transitions_;
};

struct PermutedAutomaton {
  EnergyAutomaton automaton;
  /// order[new_index] == old_index
  std::vector<std::size_t> order;
  std::size_t accepting_count;
};

/// Reorders states so the accepting ones come first (stable otherwise).
PermutedAutomaton canonical_permute(const EnergyAutomaton& a);

/// Relabels states: result state i is input state order[i].
EnergyAutomaton permute(const EnergyAutomaton& a, const std::vector<std::size_t>& order);

struct Witness {
  std::vector<std::string> path;   ///< reach: initial..accepting; Buchi: initial..loop state
  std::vector<std::string> cycle;  ///< Buchi only: states after the loop state, back to it
};

struct QueryResult {
  bool answer = false;
  std::variant<ExtValue, ThresholdPredicate> value;
  std::optional<Witness> witness;
};

/// alpha M* zeta: supremum over paths from an initial to an accepting state.
EnergyFunction reach_value(const EnergyAutomaton& a);

QueryResult reachable(const EnergyAutomaton& a, const ExtValue& x0);

/// alpha ((a + b d* c)^w ; d* c (a + b d* c)^w) after moving accepting states first.
ThresholdPredicate buchi_value(const EnergyAutomaton& a);

QueryResult buchi(const EnergyAutomaton& a, const ExtValue& x0);

struct OracleOptions {
  std::size_t max_states = 16;
};

/// Combinatorial reachability by maximal-energy search.
/// Throws BudgetExceeded when the automaton is larger than the oracle allows.
QueryResult oracle_reach(const EnergyAutomaton& a, const ExtValue& x0, OracleOptions options = {});

/// Combinatorial Buchi acceptance by accepting-lasso search.
QueryResult oracle_buchi(const EnergyAutomaton& a, const ExtValue& x0, OracleOptions options = {});

}  // namespace kleene
