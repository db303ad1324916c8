#include "kleene/run_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleene {

SymbolicEnergy SymbolicEnergy::top() {
  SymbolicEnergy e;
  e.kind_ = Kind::Top;
  return e;
}

SymbolicEnergy SymbolicEnergy::finite(Rational value) { return level(0, std::move(value)); }

SymbolicEnergy SymbolicEnergy::unbounded() { return level(1, 0); }

SymbolicEnergy SymbolicEnergy::level(Rational coefficient, Rational constant) {
  if (coefficient < 0 || (coefficient == 0 && constant < 0)) {
    throw std::invalid_argument("symbolic energy level must be nonnegative");
  }
  SymbolicEnergy e;
  e.kind_ = Kind::Level;
  e.coefficient_ = std::move(coefficient);
  e.constant_ = std::move(constant);
  return e;
}

SymbolicEnergy SymbolicEnergy::from(const ExtValue& x) {
  switch (x.kind()) {
    case ExtValue::Kind::Bottom: return bottom();
    case ExtValue::Kind::Top: return top();
    case ExtValue::Kind::Finite: break;
  }
  return finite(x.value());
}

ExtValue SymbolicEnergy::to_ext() const {
  switch (kind_) {
    case Kind::Bottom: return ExtValue::bottom();
    case Kind::Top: return ExtValue::top();
    case Kind::Level: break;
  }
  return coefficient_ == 0 ? ExtValue::finite(constant_) : ExtValue::top();
}

std::strong_ordering operator<=>(const SymbolicEnergy& a, const SymbolicEnergy& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != SymbolicEnergy::Kind::Level) return std::strong_ordering::equal;
  auto c = compare(a.coefficient_, b.coefficient_);
  return c != std::strong_ordering::equal ? c : compare(a.constant_, b.constant_);
}

SymbolicEnergy apply(const EnergyFunction& f, const SymbolicEnergy& e) {
  switch (e.kind()) {
    case SymbolicEnergy::Kind::Bottom: return e;
    case SymbolicEnergy::Kind::Top: return f.is_bottom() ? SymbolicEnergy::bottom() : e;
    case SymbolicEnergy::Kind::Level: break;
  }
  if (e.is_finite()) return SymbolicEnergy::from(f.at(e.constant()));
  if (f.is_bottom()) return SymbolicEnergy::bottom();
  // Large inputs fall in the final interval, which is top or affine for a live f.
  const Law& law = f.asymptotic_law();
  if (!law.is_affine()) return SymbolicEnergy::top();
  return SymbolicEnergy::level(law.slope() * e.coefficient(), law.slope() * e.constant() + law.offset());
}

std::string to_string(const SymbolicEnergy& e) {
  switch (e.kind()) {
    case SymbolicEnergy::Kind::Bottom: return "bot";
    case SymbolicEnergy::Kind::Top: return "top";
    case SymbolicEnergy::Kind::Level: break;
  }
  if (e.coefficient() == 0) return format_rational(e.constant());
  return format_rational(e.coefficient()) + "W" + (e.constant() >= 0 ? "+" : "") + format_rational(e.constant());
}

EnergySearchResult max_energies(const TransitionGraph& graph, std::span<const EnergySeed> seeds) {
  EnergySearchResult r;
  r.best.assign(graph.states, SymbolicEnergy::bottom());
  r.via.assign(graph.states, std::nullopt);
  for (const auto& seed : seeds) {
    if (seed.state >= graph.states) throw std::out_of_range("seed state out of range");
    if (seed.energy > r.best[seed.state]) r.best[seed.state] = seed.energy;
  }
  auto relax = [&](bool saturate) {
    bool changed = false;
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      const auto& t = graph.edges[e];
      if (r.best[t.from].is_bottom()) continue;
      SymbolicEnergy candidate = apply(t.fn, r.best[t.from]);
      if (candidate > r.best[t.to]) {
        r.best[t.to] = saturate ? SymbolicEnergy::top() : std::move(candidate);
        r.via[t.to] = e;
        changed = true;
      }
    }
    return changed;
  };
  bool changed = true;
  for (std::size_t round = 0; round < graph.states && changed; ++round) changed = relax(false);
  while (changed) changed = relax(true);
  return r;
}

namespace {

/// Follows `via` back from `target` until a state satisfying `is_start`.
std::optional<std::vector<std::size_t>> trace_back(const TransitionGraph& graph, const EnergySearchResult& r,
                                                   std::size_t target, auto is_start, bool need_step) {
  std::vector<std::size_t> states{target};
  std::size_t cur = target;
  for (std::size_t guard = 0; guard <= graph.states; ++guard) {
    if (is_start(cur) && (!need_step || states.size() > 1)) {
      std::reverse(states.begin(), states.end());
      return states;
    }
    if (!r.via[cur]) return std::nullopt;
    cur = graph.edges[*r.via[cur]].from;
    states.push_back(cur);
  }
  return std::nullopt;
}

/// Best energy along a state sequence, using the best parallel edge per step.
SymbolicEnergy replay(const TransitionGraph& graph, const std::vector<std::size_t>& states, SymbolicEnergy e) {
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    SymbolicEnergy best = SymbolicEnergy::bottom();
    for (const auto& t : graph.edges) {
      if (t.from == states[i] && t.to == states[i + 1]) best = std::max(best, apply(t.fn, e));
    }
    e = best;
  }
  return e;
}

}  // namespace

std::optional<std::vector<std::size_t>> trace_path(const TransitionGraph& graph, const EnergySearchResult& result,
                                                   std::span<const EnergySeed> seeds, std::size_t target) {
  auto is_seed = [&](std::size_t s) {
    return std::any_of(seeds.begin(), seeds.end(), [&](const EnergySeed& sd) { return sd.state == s; });
  };
  auto path = trace_back(graph, result, target, is_seed, false);
  if (!path) return std::nullopt;
  SymbolicEnergy start = SymbolicEnergy::bottom();
  for (const auto& sd : seeds) {
    if (sd.state == path->front()) start = std::max(start, sd.energy);
  }
  if (start.is_bottom() || replay(graph, *path, start).is_bottom()) return std::nullopt;
  return path;
}

SymbolicEnergy buchi_seed(const ExtValue& x) {
  return x.is_top() ? SymbolicEnergy::unbounded() : SymbolicEnergy::from(x);
}

LassoSearchResult find_accepting_lasso(const TransitionGraph& graph, const std::vector<bool>& accepting,
                                       std::span<const EnergySeed> seeds) {
  LassoSearchResult out;
  auto reach = max_energies(graph, seeds);
  for (std::size_t q = 0; q < graph.states; ++q) {
    if (!accepting[q] || reach.best[q].is_bottom()) continue;
    SymbolicEnergy start = reach.best[q].is_top() ? SymbolicEnergy::unbounded() : reach.best[q];
    std::vector<EnergySeed> loop_seeds;
    for (const auto& t : graph.edges) {
      if (t.from == q) loop_seeds.push_back({t.to, apply(t.fn, start)});
    }
    auto back = max_energies(graph, loop_seeds);
    if (back.best[q] < start) continue;
    out.found = true;

    // Witness reconstruction is best-effort and kept only if it replays.
    auto is_seed = [&](std::size_t s) {
      return std::any_of(seeds.begin(), seeds.end(), [&](const EnergySeed& sd) { return sd.state == s; });
    };
    auto prefix = trace_back(graph, reach, q, is_seed, false);
    auto is_loop_entry = [&](std::size_t s) {
      return std::any_of(loop_seeds.begin(), loop_seeds.end(), [&](const EnergySeed& sd) { return sd.state == s; });
    };
    auto loop = trace_back(graph, back, q, is_loop_entry, false);
    if (prefix && loop) {
      Lasso lasso{*prefix, *loop};
      SymbolicEnergy seed_energy = SymbolicEnergy::bottom();
      for (const auto& sd : seeds) {
        if (sd.state == prefix->front()) seed_energy = std::max(seed_energy, sd.energy);
      }
      SymbolicEnergy at_q = replay(graph, lasso.prefix, seed_energy);
      if (at_q.is_top()) at_q = SymbolicEnergy::unbounded();
      std::vector<std::size_t> around{q};
      around.insert(around.end(), lasso.cycle.begin(), lasso.cycle.end());
      if (!at_q.is_bottom() && replay(graph, around, at_q) >= at_q) out.witness = std::move(lasso);
    }
    return out;
  }
  return out;
}

}  // namespace kleene
