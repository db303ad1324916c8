#include "kleene/random.hpp"

#include <algorithm>
#include <set>

namespace kleene {

Rational Random::rational(unsigned max, unsigned max_den) {
  auto den = static_cast<long long>(1 + below(max_den));
  auto num = static_cast<long long>(below(static_cast<std::uint64_t>(den) * max + 1));
  return Rational(num) / den;
}

EnergyFunction random_energy_function(Random& rng) {
  switch (rng.below(12)) {
    case 0:
      return EnergyFunction::identity();
    case 1:
      return EnergyFunction::bottom();
    case 2: {
      Rational d = rng.rational(3);
      return EnergyFunction::shift(rng.chance(1, 2) ? d : Rational(-d));
    }
    default:
      break;
  }
  static const std::vector<Rational> slopes{Rational(1), Rational(3) / 2, Rational(2)};
  RawEnergyFunction raw;
  Rational start = rng.chance(1, 2) ? Rational(0) : rng.rational(3);
  raw.bottom_boundary = start;
  raw.bottom_at_boundary = start > 0 && rng.chance(1, 3);
  std::size_t count = 1 + rng.below(4);
  Rational limit = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Rational slope = rng.pick(slopes);
    Rational intercept;
    if (i == 0) {
      intercept = rng.rational(static_cast<unsigned>(start) + 3);
    } else {
      intercept = rng.chance(1, 2) ? limit : limit + rng.rational(2);
    }
    raw.pieces.push_back({start, intercept, slope});
    Rational length = 1 + rng.rational(2);
    limit = intercept + slope * length;
    start += length;
  }
  if (rng.chance(1, 4)) {
    raw.top_boundary = start;
    raw.top_at_boundary = rng.chance(1, 2);
  }
  return EnergyFunction::validate(raw);
}

ThresholdPredicate random_threshold(Random& rng) {
  if (rng.chance(1, 5)) return ThresholdPredicate::never();
  return ThresholdPredicate::from(rng.rational(6), rng.chance(1, 2));
}

EnergyMatrix random_energy_matrix(Random& rng, std::size_t n, unsigned density_num, unsigned density_den) {
  EnergyMatrix m(n, n, EnergyFunction::bottom());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.chance(density_num, density_den)) m(i, j) = random_energy_function(rng);
    }
  }
  return m;
}

EnergyAutomaton random_automaton(Random& rng, std::size_t n) {
  std::vector<std::string> names;
  std::vector<bool> initial(n), accepting(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("q" + std::to_string(i));
    initial[i] = rng.chance(1, 3);
    accepting[i] = rng.chance(1, 3);
  }
  initial[rng.below(n)] = true;
  return EnergyAutomaton(std::move(names), std::move(initial), std::move(accepting), random_energy_matrix(rng, n, 1, 2));
}

std::string random_regex(Random& rng, const std::string& alphabet, unsigned depth) {
  if (depth == 0 || rng.chance(1, 4)) {
    std::uint64_t pick = rng.below(alphabet.size() + 2);
    if (pick < alphabet.size()) return std::string(1, alphabet[pick]);
    return rng.chance(1, 3) ? "0" : "1";
  }
  switch (rng.below(3)) {
    case 0:
      return "(" + random_regex(rng, alphabet, depth - 1) + "|" + random_regex(rng, alphabet, depth - 1) + ")";
    case 1:
      return "(" + random_regex(rng, alphabet, depth - 1) + random_regex(rng, alphabet, depth - 1) + ")";
    default:
      return "(" + random_regex(rng, alphabet, depth - 1) + ")*";
  }
}

std::vector<ExtValue> sample_points(const std::vector<EnergyFunction>& fs, Random& rng, std::size_t count) {
  std::set<Rational> interesting;
  for (const auto& f : fs) {
    for (const auto& c : f.breakpoints()) interesting.insert(c);
    for (const auto& c : diagonal_crossings(f)) interesting.insert(c);
  }
  std::vector<Rational> pool;
  for (const auto& c : interesting) {
    pool.push_back(c);
    pool.push_back(c + Rational(1) / 8);
    if (c > 0) pool.push_back(c - Rational(1) / 8 > 0 ? Rational(c - Rational(1) / 8) : Rational(c / 2));
  }
  std::vector<ExtValue> out{ExtValue::bottom(), ExtValue::top()};
  std::set<Rational> chosen;
  while (out.size() < count && !pool.empty()) {
    std::size_t at = rng.below(pool.size());
    if (chosen.insert(pool[at]).second) out.push_back(ExtValue::finite(pool[at]));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  for (int guard = 0; out.size() < count && guard < 1000; ++guard) {
    Rational x = rng.rational(12, 8);
    if (chosen.insert(x).second) out.push_back(ExtValue::finite(x));
  }
  return out;
}

}  // namespace kleene
