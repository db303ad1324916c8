#include <doctest.h>

#include "kleene/energy_algebra.hpp"
#include "kleene/random.hpp"
#include "kleene/run_search.hpp"
#include "support.hpp"

using namespace kleene;
using namespace testing_support;

namespace {

using TP = ThresholdPredicate;
const EnergyAlgebra alg;

EnergyMatrix from_rows(std::vector<std::vector<EnergyFunction>> rows) {
  EnergyMatrix m(rows.size(), rows.size(), EnergyFunction::bottom());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

TransitionGraph graph_of(const EnergyMatrix& m) {
  TransitionGraph g{m.rows(), {}};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_bottom()) g.edges.push_back({i, j, m(i, j)});
    }
  }
  return g;
}

/// Supremum over walks i -> j of length < `rounds`, by per-length maxima.
ExtValue bounded_path_sup(const EnergyMatrix& m, std::size_t i, std::size_t j, const ExtValue& x, int rounds) {
  std::vector<ExtValue> layer(m.rows(), ExtValue::bottom());
  layer[i] = x;
  ExtValue best = layer[j];
  for (int r = 0; r < rounds; ++r) {
    std::vector<ExtValue> next(m.rows(), ExtValue::bottom());
    for (std::size_t a = 0; a < m.rows(); ++a) {
      for (std::size_t b = 0; b < m.rows(); ++b) next[b] = ext_join(next[b], m(a, b)(layer[a]));
    }
    layer = std::move(next);
    best = ext_join(best, layer[j]);
  }
  return best;
}

}  // namespace

TEST_CASE("mat_mul") {
  Random rng(31);
  EnergyMatrix m = random_energy_matrix(rng, 3);
  CHECK(mat_equal(alg, mat_mul(alg, identity_matrix(alg, 3), m), m));
  CHECK(mat_equal(alg, mat_mul(alg, zero_matrix(alg, 3, 3), m), zero_matrix(alg, 3, 3)));
  EnergyFunction f = plus(2), g = dec(), z = EnergyFunction::bottom();
  EnergyMatrix sq = mat_mul(alg, from_rows({{z, f}, {g, z}}), from_rows({{z, f}, {g, z}}));
  CHECK(mat_equal(alg, sq, from_rows({{compose(f, g), z}, {z, compose(g, f)}})));
  CHECK_THROWS_AS(mat_mul(alg, m, identity_matrix(alg, 2)), DimensionMismatch);
}

TEST_CASE("mat_star examples") {
  EnergyFunction f = plus(2), g = dec(), z = EnergyFunction::bottom();
  CHECK(mat_star(alg, from_rows({{f}}))(0, 0) == all_top());
  EnergyMatrix s = mat_star(alg, from_rows({{z, f}, {g, z}}));
  EnergyFunction expected = piecewise(0, {{0, 0, 1}}, false, q(1), true);
  CHECK(s(1, 1) == expected);
  CHECK(s(1, 1)(fin(1, 2)) == fin(1, 2));
  CHECK(s(1, 1)(fin(1)) == top);
}

TEST_CASE("mat_omega examples") {
  CHECK(mat_omega(alg, from_rows({{EnergyFunction::identity()}}))[0] == TP::from(0, true));
  CHECK(mat_omega(alg, from_rows({{dec()}}))[0] == TP::never());
  EnergyFunction f = plus(2), g = dec(), z = EnergyFunction::bottom();
  EnergyMatrix m = from_rows({{z, f}, {g, z}});
  auto v = mat_omega_k(alg, m, 1);
  CHECK(v[0] == TP::from(0, true));
  CHECK(v[1] == TP::from(1, true));
  CHECK(vec_equal(alg, mat_omega_k(alg, m, 0), ColumnVector<TP>(2, TP::never())));
  CHECK(vec_equal(alg, mat_omega_k(alg, m, 2), mat_omega(alg, m)));
  CHECK_THROWS_AS(mat_omega_k(alg, m, 3), BadAcceptingCount);
}

TEST_CASE("mat_vec_act") {
  ColumnVector<TP> v{TP::from(1, true), TP::from(4, false)};
  CHECK(vec_equal(alg, mat_vec_act(alg, identity_matrix(alg, 2), v), v));
  CHECK(vec_equal(alg, mat_vec_act(alg, zero_matrix(alg, 2, 2), v), ColumnVector<TP>(2, TP::never())));
  CHECK(mat_vec_act(alg, from_rows({{plus(2)}}), {TP::from(5, true)})[0] == TP::from(3, true));
  CHECK_THROWS_AS(mat_vec_act(alg, identity_matrix(alg, 3), v), DimensionMismatch);
}

TEST_CASE("star unfolding and omega fixed point on random matrices") {
  Random rng(32);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + rng.below(4);
    EnergyMatrix m = random_energy_matrix(rng, n);
    EnergyMatrix s = mat_star(alg, m);
    CHECK(mat_equal(alg, s, mat_join(alg, identity_matrix(alg, n), mat_mul(alg, m, s))));
    auto w = mat_omega(alg, m);
    CHECK(vec_equal(alg, w, mat_vec_act(alg, m, w)));
  }
}

TEST_CASE("split independence") {
  Random rng(33);
  for (int i = 0; i < 30; ++i) {
    for (std::size_t n : {3, 4}) {
      EnergyMatrix m = random_energy_matrix(rng, n);
      EnergyMatrix ref = mat_star_split(alg, m, 1);
      auto wref = mat_omega_split(alg, m, 1);
      for (std::size_t k = 2; k < n; ++k) {
        CHECK(mat_equal(alg, ref, mat_star_split(alg, m, k)));
        CHECK(vec_equal(alg, wref, mat_omega_split(alg, m, k)));
      }
    }
  }
}

TEST_CASE("mat_star agrees with path suprema") {
  Random rng(34);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng.below(2);
    EnergyMatrix m = random_energy_matrix(rng, n);
    EnergyMatrix s = mat_star(alg, m);
    TransitionGraph g = graph_of(m);
    std::vector<EnergyFunction> entries(m.data().begin(), m.data().end());
    for (const auto& x : sample_points(entries, rng, 8)) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<EnergySeed> seeds{{i, SymbolicEnergy::from(x)}};
        auto best = max_energies(g, seeds).best;
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(s(i, j)(x) == best[j].to_ext());
          ExtValue walked = bounded_path_sup(m, i, j, x, 12);
          if (!best[j].is_top()) CHECK(walked == best[j].to_ext());
        }
      }
    }
  }
}

TEST_CASE("mat_omega agrees with lasso search") {
  Random rng(35);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng.below(3);
    EnergyMatrix m = random_energy_matrix(rng, n);
    auto w = mat_omega(alg, m);
    TransitionGraph g = graph_of(m);
    std::vector<EnergyFunction> entries(m.data().begin(), m.data().end());
    for (const auto& x : sample_points(entries, rng, 8)) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<EnergySeed> seeds{{i, buchi_seed(x)}};
        CHECK(apply(w[i], x) == find_accepting_lasso(g, std::vector<bool>(n, true), seeds).found);
      }
    }
  }
}
