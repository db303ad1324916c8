#pragma once

#include "kleene/energy_function.hpp"
#include "kleene/threshold.hpp"

#include <optional>
#include <vector>

namespace testing_support {

using kleene::EnergyFunction;
using kleene::ExtValue;
using kleene::Rational;

inline Rational q(long long p, long long d = 1) { return Rational(p) / d; }
inline ExtValue fin(long long p, long long d = 1) { return ExtValue::finite(q(p, d)); }
inline const ExtValue bot = ExtValue::bottom();
inline const ExtValue top = ExtValue::top();

/// x + d, bottom where negative.
inline EnergyFunction plus(long long d) { return EnergyFunction::shift(Rational(d)); }

/// Bottom below b (and at b when flagged), then the given pieces, optional top region.
inline EnergyFunction piecewise(Rational b, std::vector<kleene::RawPiece> pieces, bool bottom_at_b = false,
                                std::optional<Rational> t = std::nullopt, bool top_at_t = false) {
  kleene::RawEnergyFunction raw;
  raw.bottom_boundary = b;
  raw.bottom_at_boundary = bottom_at_b;
  raw.pieces = std::move(pieces);
  raw.top_boundary = t;
  raw.top_at_boundary = top_at_t;
  return EnergyFunction::validate(raw);
}

/// x - 1 from 1 on, bottom below.
inline EnergyFunction dec() { return piecewise(1, {{1, 0, 1}}); }

/// Top on all finite energies, bottom at bottom.
inline EnergyFunction all_top() {
  kleene::RawEnergyFunction raw;
  raw.bottom_boundary = 0;
  raw.top_boundary = 0;
  raw.top_at_boundary = true;
  return EnergyFunction::validate(raw);
}

}  // namespace testing_support
