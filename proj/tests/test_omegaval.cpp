#include <doctest.h>

#include "kleene/random.hpp"
#include "support.hpp"

#include <array>

using namespace kleene;
using namespace testing_support;

namespace {

using TP = ThresholdPredicate;

/// Iterates f from x until the orbit dies or reaches z with f(z) >= z.
bool survives(const EnergyFunction& f, ExtValue x) {
  for (int step = 0; step < 100000; ++step) {
    if (x.is_bottom()) return false;
    ExtValue y = f(x);
    if (!y.is_bottom() && y >= x) return true;
    x = y;
  }
  FAIL("orbit oracle did not terminate");
  return false;
}

/// At top: survives from large finite energies past every breakpoint.
bool survives_at(const EnergyFunction& f, const ExtValue& x) {
  if (!x.is_top()) return survives(f, x);
  Rational far = f.breakpoints().back() + 64;
  return survives(f, ExtValue::finite(far)) && survives(f, ExtValue::finite(far * 3));
}

}  // namespace

TEST_CASE("apply") {
  CHECK_FALSE(apply(TP::never(), top));
  CHECK(apply(TP::from(5, true), fin(5)));
  CHECK_FALSE(apply(TP::from(5, false), fin(5)));
  CHECK(apply(TP::from(5, false), top));
  CHECK_FALSE(apply(TP::from(0, true), bot));
}

TEST_CASE("act") {
  CHECK(act(plus(2), TP::from(5, true)) == TP::from(3, true));
  CHECK(act(plus(2), TP::never()) == TP::never());
  CHECK(act(EnergyFunction::bottom(), TP::from(0, true)) == TP::never());
  CHECK(act(dec(), TP::from(0, true)) == TP::from(1, true));
  CHECK(act(all_top(), TP::from(7, false)) == TP::from(0, true));
}

TEST_CASE("vjoin") {
  CHECK(vjoin(TP::from(2, true), TP::from(5, true)) == TP::from(2, true));
  CHECK(vjoin(TP::from(2, false), TP::from(2, true)) == TP::from(2, true));
  CHECK(vjoin(TP::never(), TP::from(4, false)) == TP::from(4, false));
  CHECK(leq(TP::from(4, false), TP::from(4, true)));
  CHECK_FALSE(leq(TP::from(4, true), TP::from(4, false)));
}

TEST_CASE("omega") {
  CHECK(omega(EnergyFunction::identity()) == TP::from(0, true));
  CHECK(omega(dec()) == TP::never());
  CHECK(omega(piecewise(2, {{2, 2, 2}})) == TP::from(2, true));
  CHECK(omega(EnergyFunction::bottom()) == TP::never());
  CHECK(omega(plus(1)) == TP::from(0, true));
}

TEST_CASE("infinite product of a lasso") {
  std::array<EnergyFunction, 1> up{plus(2)}, down{dec()}, id{EnergyFunction::identity()},
      none{EnergyFunction::bottom()};
  CHECK(infinite_product_lasso(up, down) == TP::never());
  CHECK(infinite_product_lasso({}, id) == TP::from(0, true));
  CHECK(infinite_product_lasso(none, id) == TP::never());
  CHECK_THROWS_AS(infinite_product_lasso(up, {}), std::invalid_argument);
}

TEST_CASE("predicates are finitely additive") {
  Random rng(21);
  for (int i = 0; i < 300; ++i) {
    TP v = random_threshold(rng);
    auto xs = sample_points({}, rng, 10);
    for (const auto& x : xs) {
      for (const auto& y : xs) CHECK(apply(v, ext_join(x, y)) == (apply(v, x) || apply(v, y)));
    }
  }
}

TEST_CASE("act agrees with pointwise evaluation") {
  Random rng(22);
  for (int i = 0; i < 300; ++i) {
    EnergyFunction f = random_energy_function(rng);
    TP v = random_threshold(rng);
    TP w = act(f, v);
    std::vector<EnergyFunction> fs{f};
    if (!v.is_never()) fs.push_back(EnergyFunction::shift(-v.threshold()));
    for (const auto& x : sample_points(fs, rng, 20)) CHECK(apply(w, x) == apply(v, f(x)));
  }
}

TEST_CASE("action laws") {
  Random rng(23);
  for (int i = 0; i < 200; ++i) {
    EnergyFunction f = random_energy_function(rng), g = random_energy_function(rng);
    TP v = random_threshold(rng), w = random_threshold(rng);
    CHECK(act(compose(f, g), v) == act(f, act(g, v)));
    CHECK(act(EnergyFunction::identity(), v) == v);
    CHECK(act(f, vjoin(v, w)) == vjoin(act(f, v), act(f, w)));
    CHECK(act(join(f, g), v) == vjoin(act(f, v), act(g, v)));
  }
}

TEST_CASE("omega identities") {
  Random rng(24);
  for (int i = 0; i < 200; ++i) {
    EnergyFunction f = random_energy_function(rng), g = random_energy_function(rng);
    CHECK(act(f, omega(f)) == omega(f));
    CHECK(omega(compose(f, g)) == act(f, omega(compose(g, f))));
    CHECK(omega(f) == omega(compose(f, f)));
    CHECK(omega(f) == omega(compose(f, compose(f, f))));
  }
}

TEST_CASE("omega closed form agrees with the orbit oracle") {
  Random rng(25);
  for (int i = 0; i < 300; ++i) {
    EnergyFunction f = random_energy_function(rng);
    TP w = omega(f);
    for (const auto& x : sample_points({f}, rng, 20)) CHECK(apply(w, x) == survives_at(f, x));
  }
}

TEST_CASE("star action is the join of powers") {
  Random rng(26);
  for (int i = 0; i < 150; ++i) {
    EnergyFunction f = random_energy_function(rng), g = random_energy_function(rng);
    TP v = random_threshold(rng);
    TP lhs = act(f, act(star(g), v));
    for (const auto& x : sample_points({f, g}, rng, 12)) {
      bool r = false;
      ExtValue y = f(x);
      for (int n = 0; n < 2000 && !r && !y.is_bottom(); ++n) {
        r = apply(v, y);
        y = g(y);
      }
      CHECK(apply(lhs, x) == r);
    }
  }
}
