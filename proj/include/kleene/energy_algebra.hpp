#pragma once

#include "kleene/energy_function.hpp"
#include "kleene/matrix.hpp"
#include "kleene/threshold.hpp"

namespace kleene {

/// Energy functions with threshold predicates as the semimodule. Product is
/// diagrammatic composition (left factor applied first).
///
/// The star operation is a member so a deliberately broken variant can be
/// swapped in when checking that the law suite notices.
struct EnergyAlgebra {
  using Element = EnergyFunction;
  using Vector = ThresholdPredicate;
  using StarFn = EnergyFunction (*)(const EnergyFunction&);

  StarFn star_fn = &::kleene::star;

  Element zero() const { return EnergyFunction::bottom(); }
  Element one() const { return EnergyFunction::identity(); }
  Element join(const Element& x, const Element& y) const { return ::kleene::join(x, y); }
  Element multiply(const Element& x, const Element& y) const { return compose(x, y); }
  Element star(const Element& x) const { return star_fn(x); }
  bool equal(const Element& x, const Element& y) const { return x == y; }

  Vector vzero() const { return ThresholdPredicate::never(); }
  Vector vjoin(const Vector& v, const Vector& w) const { return ::kleene::vjoin(v, w); }
  Vector act(const Element& x, const Vector& v) const { return ::kleene::act(x, v); }
  Vector omega(const Element& x) const { return ::kleene::omega(x); }
  bool vequal(const Vector& v, const Vector& w) const { return v == w; }
};

static_assert(OmegaAlgebra<EnergyAlgebra>);

using EnergyMatrix = Matrix<EnergyFunction>;

namespace mutants {

/// Star that wrongly sends fixed points (f(x) == x) to top.
EnergyFunction star_excluding_fixed_points(const EnergyFunction& f);

}  // namespace mutants

}  // namespace kleene
