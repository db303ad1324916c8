#include <doctest.h>

#include "kleene/random.hpp"
#include "support.hpp"

using namespace kleene;
using namespace testing_support;

namespace {

ValidationError::Kind rejection(const RawEnergyFunction& raw) {
  try {
    EnergyFunction::validate(raw);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("accepted");
  return ValidationError::Kind::MalformedPieces;
}

RawEnergyFunction raw_of(Rational b, std::vector<RawPiece> pieces) {
  RawEnergyFunction raw;
  raw.bottom_boundary = b;
  raw.pieces = std::move(pieces);
  return raw;
}

std::vector<ExtValue> grid() {
  std::vector<ExtValue> xs{bot, top};
  for (int i = 0; i <= 80; ++i) xs.push_back(fin(i, 8));
  return xs;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(EnergyFunction::validate(raw_of(0, {{0, 0, 1}})) == EnergyFunction::identity());
  CHECK(rejection(raw_of(0, {{0, 0, q(1, 2)}})) == ValidationError::Kind::SlopeTooSmall);
  EnergyFunction f = EnergyFunction::validate(raw_of(1, {{1, 0, 1}}));
  CHECK(f(fin(3)) == fin(2));
  CHECK(f(fin(1)) == fin(0));
  CHECK(f(fin(1, 2)) == bot);
  CHECK(rejection(raw_of(0, {{0, 3, 1}, {1, 2, 1}})) == ValidationError::Kind::NonMonotone);
  CHECK(rejection(raw_of(0, {{0, 3, 1}, {0, 5, 1}})) == ValidationError::Kind::MalformedPieces);
  CHECK(rejection(raw_of(2, {{1, 3, 1}})) == ValidationError::Kind::MalformedPieces);
  CHECK(rejection(raw_of(0, {{0, -1, 2}})) == ValidationError::Kind::NegativeValue);
  CHECK(rejection(raw_of(0, {})) == ValidationError::Kind::MalformedPieces);
}

TEST_CASE("mergeable pieces canonicalize") {
  EnergyFunction split = piecewise(0, {{0, 1, 1}, {2, 3, 1}});
  CHECK(split == plus(1));
  CHECK(equal(split, plus(1)));
  CHECK_FALSE(equal(plus(1), plus(2)));
}

TEST_CASE("eval") {
  CHECK(plus(2)(fin(0)) == fin(2));
  CHECK(dec()(fin(1, 2)) == bot);
  CHECK(EnergyFunction::bottom()(top) == bot);
  CHECK(dec()(top) == top);
  CHECK(plus(5)(bot) == bot);
  EnergyFunction f = piecewise(1, {{1, 2, 2}, {3, 7, 1}}, true, q(5), false);
  CHECK(f(fin(1)) == bot);
  CHECK(f(fin(2)) == fin(4));
  CHECK(f(fin(3)) == fin(7));
  CHECK(f(fin(5)) == fin(9));
  CHECK(f(fin(6)) == top);
}

TEST_CASE("compose") {
  CHECK(compose(plus(2), dec()) == plus(1));
  for (const auto& g : {dec(), plus(3), all_top(), EnergyFunction::bottom()}) {
    CHECK(compose(EnergyFunction::identity(), g) == g);
    CHECK(compose(EnergyFunction::bottom(), g) == EnergyFunction::bottom());
  }
  EnergyFunction f = plus(2), g = dec();
  EnergyFunction h = compose(f, g);
  for (const auto& x : grid()) CHECK(h(x) == g(f(x)));
}

TEST_CASE("join") {
  CHECK(join(dec(), dec()) == dec());
  CHECK(join(EnergyFunction::identity(), dec()) == EnergyFunction::identity());
  EnergyFunction g = piecewise(2, {{2, 5, 1}});
  EnergyFunction expected = piecewise(0, {{0, 1, 1}, {2, 5, 1}});
  CHECK(join(plus(1), g) == expected);
}

TEST_CASE("star") {
  CHECK(star(dec()) == EnergyFunction::identity());
  CHECK(star(plus(2)) == all_top());
  CHECK(star(EnergyFunction::bottom()) == EnergyFunction::identity());
  EnergyFunction f = piecewise(0, {{0, 0, 2}});
  EnergyFunction s = star(f);
  CHECK(s(fin(0)) == fin(0));
  CHECK(s(fin(1, 100)) == top);
}

TEST_CASE("local finiteness witness") {
  auto r = local_finiteness_witness(dec(), fin(5), 64);
  CHECK(r.outcome == LocalFinitenessReport::Outcome::Stabilized);
  CHECK(r.steps == 0);
  CHECK(r.value == fin(5));
  r = local_finiteness_witness(plus(1), fin(0), 64);
  CHECK(r.outcome == LocalFinitenessReport::Outcome::DivergesToTop);
  CHECK(r.steps == 0);
  r = local_finiteness_witness(EnergyFunction::identity(), fin(3), 64);
  CHECK(r.outcome == LocalFinitenessReport::Outcome::Stabilized);
  CHECK(r.value == fin(3));
}

TEST_CASE("layout round trip") {
  Random rng(3);
  for (int i = 0; i < 300; ++i) {
    EnergyFunction f = random_energy_function(rng);
    CHECK(EnergyFunction::validate(f.to_raw()) == f);
  }
  CHECK(EnergyFunction::validate(all_top().to_raw()) == all_top());
}

TEST_CASE("random functions satisfy the defining inequality and gain monotonicity") {
  Random rng(4);
  for (int i = 0; i < 300; ++i) {
    EnergyFunction f = random_energy_function(rng);
    auto xs = sample_points({f}, rng, 16);
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        if (!x.is_finite() || !y.is_finite() || !(x < y)) continue;
        ExtValue fx = f(x), fy = f(y);
        if (!fx.is_finite() || !fy.is_finite()) continue;
        CHECK(fy.value() >= fx.value() + y.value() - x.value());
        CHECK(fy.value() - y.value() >= fx.value() - x.value());
      }
    }
  }
}

TEST_CASE("top continuity: large finite energies reach any bound") {
  Random rng(5);
  for (int i = 0; i < 200; ++i) {
    EnergyFunction f = random_energy_function(rng);
    if (f.is_bottom()) continue;
    Rational bound = 50;
    bool reached = false;
    for (int n = 0; n <= 80 && !reached; ++n) reached = f(fin(n)) >= ExtValue::finite(bound);
    CHECK(reached);
  }
}

TEST_CASE("semiring laws") {
  Random rng(6);
  const EnergyFunction zero = EnergyFunction::bottom(), one = EnergyFunction::identity();
  for (int i = 0; i < 150; ++i) {
    EnergyFunction f = random_energy_function(rng), g = random_energy_function(rng), h = random_energy_function(rng);
    CHECK(join(f, g) == join(g, f));
    CHECK(join(join(f, g), h) == join(f, join(g, h)));
    CHECK(join(f, f) == f);
    CHECK(join(f, zero) == f);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, one) == f);
    CHECK(compose(one, f) == f);
    CHECK(compose(f, join(g, h)) == join(compose(f, g), compose(f, h)));
    CHECK(compose(join(f, g), h) == join(compose(f, h), compose(g, h)));
    CHECK(compose(zero, f) == zero);
    CHECK(compose(f, zero) == zero);
  }
}

TEST_CASE("star unfolding and Conway identities") {
  Random rng(7);
  for (int i = 0; i < 150; ++i) {
    EnergyFunction f = random_energy_function(rng), g = random_energy_function(rng);
    CHECK(star(f) == join(EnergyFunction::identity(), compose(f, star(f))));
    CHECK(star(join(f, g)) == compose(star(compose(star(f), g)), star(f)));
    CHECK(star(compose(f, g)) == join(EnergyFunction::identity(), compose(compose(f, star(compose(g, f))), g)));
  }
}

TEST_CASE("star agrees with the partial suprema of the orbit") {
  Random rng(8);
  for (int i = 0; i < 200; ++i) {
    EnergyFunction f = random_energy_function(rng);
    EnergyFunction s = star(f);
    for (const auto& x : sample_points({f}, rng, 12)) {
      auto r = local_finiteness_witness(f, x, 64);
      CHECK(s(x) == r.value);
    }
  }
}

TEST_CASE("compose and join agree with pointwise evaluation") {
  Random rng(9);
  for (int i = 0; i < 200; ++i) {
    EnergyFunction f = random_energy_function(rng), g = random_energy_function(rng);
    EnergyFunction c = compose(f, g), j = join(f, g);
    for (const auto& x : sample_points({f, g, c, j}, rng, 24)) {
      CHECK(c(x) == g(f(x)));
      CHECK(j(x) == ext_join(f(x), g(x)));
    }
  }
}
