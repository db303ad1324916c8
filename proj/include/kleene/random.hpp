#pragma once

#include "kleene/energy_automaton.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace kleene {

/// Seeded generator for test corpora. `below` is defined by the engine's raw
/// output, so corpora are identical across standard libraries.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  /// p/q with 1 <= q <= max_den and 0 <= p/q <= max.
  Rational rational(unsigned max, unsigned max_den = 4);

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// 1 to 4 affine pieces with slopes in {1, 3/2, 2} and breakpoints of
/// denominator at most 4, optional bottom and top regions, and now and then
/// the identity, constant bottom or a plain shift.
EnergyFunction random_energy_function(Random& rng);

ThresholdPredicate random_threshold(Random& rng);

/// Each entry is nonbottom with probability density_num/density_den.
EnergyMatrix random_energy_matrix(Random& rng, std::size_t n, unsigned density_num = 1, unsigned density_den = 2);

EnergyAutomaton random_automaton(Random& rng, std::size_t n);

/// Random regex over `alphabet` in the syntax of RegularLang::parse.
std::string random_regex(Random& rng, const std::string& alphabet, unsigned depth = 3);

/// Sample energies: bottom, top, every breakpoint and diagonal crossing of the
/// given functions, points just beside them, and random extras, up to `count`
/// (bottom and top always included).
std::vector<ExtValue> sample_points(const std::vector<EnergyFunction>& fs, Random& rng, std::size_t count);

}  // namespace kleene
