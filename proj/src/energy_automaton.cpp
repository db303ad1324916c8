#include "kleene/energy_automaton.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kleene {

EnergyAutomaton::EnergyAutomaton(std::vector<std::string> state_names, std::vector<bool> initial,
                                 std::vector<bool> accepting, EnergyMatrix transitions)
    : names_(std::move(state_names)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("automaton needs at least one state");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw std::invalid_argument("duplicate state name");
  }
  if (initial_.size() != n || accepting_.size() != n) throw std::invalid_argument("state flag vector has wrong size");
  if (transitions_.rows() != n || transitions_.cols() != n) {
    throw std::invalid_argument("transition matrix has wrong size");
  }
}

std::size_t EnergyAutomaton::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown state '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

TransitionGraph EnergyAutomaton::graph() const {
  TransitionGraph g;
  g.states = size();
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (!transitions_(i, j).is_bottom()) g.edges.push_back({i, j, transitions_(i, j)});
    }
  }
  return g;
}

EnergyAutomaton permute(const EnergyAutomaton& a, const std::vector<std::size_t>& order) {
  const std::size_t n = a.size();
  if (order.size() != n) throw std::invalid_argument("permutation has wrong size");
  std::vector<bool> seen(n, false);
  for (auto o : order) {
    if (o >= n || seen[o]) throw std::invalid_argument("not a permutation");
    seen[o] = true;
  }
  std::vector<std::string> names(n);
  std::vector<bool> initial(n), accepting(n);
  EnergyMatrix m(n, n, EnergyFunction::bottom());
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = a.state_names()[order[i]];
    initial[i] = a.initial()[order[i]];
    accepting[i] = a.accepting()[order[i]];
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a.transitions()(order[i], order[j]);
  }
  return EnergyAutomaton(std::move(names), std::move(initial), std::move(accepting), std::move(m));
}

PermutedAutomaton canonical_permute(const EnergyAutomaton& a) {
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return a.accepting()[i]; });
  auto k = static_cast<std::size_t>(std::count(a.accepting().begin(), a.accepting().end(), true));
  return {permute(a, order), order, k};
}

EnergyFunction reach_value(const EnergyAutomaton& a) {
  EnergyAlgebra alg;
  EnergyMatrix closure = mat_star(alg, a.transitions());
  EnergyFunction out = EnergyFunction::bottom();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.initial()[i]) continue;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.accepting()[j]) out = join(out, closure(i, j));
    }
  }
  return out;
}

namespace {

std::vector<std::string> names_of(const EnergyAutomaton& a, const std::vector<std::size_t>& states) {
  std::vector<std::string> out;
  out.reserve(states.size());
  for (auto s : states) out.push_back(a.state_names()[s]);
  return out;
}

std::vector<EnergySeed> seeds_for(const EnergyAutomaton& a, const SymbolicEnergy& energy) {
  std::vector<EnergySeed> seeds;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.initial()[i]) seeds.push_back({i, energy});
  }
  return seeds;
}

void check_budget(const EnergyAutomaton& a, const OracleOptions& options) {
  if (a.size() > options.max_states) {
    throw BudgetExceeded("oracle limited to " + std::to_string(options.max_states) + " states, automaton has " +
                         std::to_string(a.size()));
  }
}

}  // namespace

QueryResult reachable(const EnergyAutomaton& a, const ExtValue& x0) {
  ExtValue value = reach_value(a)(x0);
  return {!value.is_bottom(), value, std::nullopt};
}

ThresholdPredicate buchi_value(const EnergyAutomaton& a) {
  EnergyAlgebra alg;
  PermutedAutomaton p = canonical_permute(a);
  ColumnVector<ThresholdPredicate> stacked = mat_omega_k(alg, p.automaton.transitions(), p.accepting_count);
  ThresholdPredicate out;
  for (std::size_t i = 0; i < p.automaton.size(); ++i) {
    if (p.automaton.initial()[i]) out = vjoin(out, stacked[i]);
  }
  return out;
}

QueryResult buchi(const EnergyAutomaton& a, const ExtValue& x0) {
  ThresholdPredicate value = buchi_value(a);
  return {apply(value, x0), value, std::nullopt};
}

QueryResult oracle_reach(const EnergyAutomaton& a, const ExtValue& x0, OracleOptions options) {
  check_budget(a, options);
  TransitionGraph g = a.graph();
  auto seeds = seeds_for(a, SymbolicEnergy::from(x0));
  EnergySearchResult r = max_energies(g, seeds);
  QueryResult out{false, ExtValue::bottom(), std::nullopt};
  ExtValue best = ExtValue::bottom();
  std::optional<std::size_t> target;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!a.accepting()[j] || r.best[j].is_bottom()) continue;
    ExtValue here = r.best[j].to_ext();
    if (!target || best < here) {
      best = here;
      target = j;
    }
  }
  if (!target) return out;
  out.answer = true;
  out.value = best;
  if (auto path = trace_path(g, r, seeds, *target)) out.witness = Witness{names_of(a, *path), {}};
  return out;
}

QueryResult oracle_buchi(const EnergyAutomaton& a, const ExtValue& x0, OracleOptions options) {
  check_budget(a, options);
  TransitionGraph g = a.graph();
  auto seeds = seeds_for(a, buchi_seed(x0));
  LassoSearchResult r = find_accepting_lasso(g, a.accepting(), seeds);
  QueryResult out{r.found, x0, std::nullopt};
  if (r.witness) out.witness = Witness{names_of(a, r.witness->prefix), names_of(a, r.witness->cycle)};
  return out;
}

}  // namespace kleene
