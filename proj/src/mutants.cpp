#include "kleene/energy_algebra.hpp"

namespace kleene::mutants {

EnergyFunction star_excluding_fixed_points(const EnergyFunction& f) {
  std::vector<Rational> candidates = f.breakpoints();
  auto crossings = diagonal_crossings(f);
  candidates.insert(candidates.end(), crossings.begin(), crossings.end());
  return EnergyFunction::tabulate(std::move(candidates), [&](const Rational& x) {
    ExtValue here = ExtValue::finite(x);
    return f.at(x) < here ? here : ExtValue::top();
  });
}

}  // namespace kleene::mutants
