#include <doctest.h>

#include "kleene/json_io.hpp"
#include "kleene/random.hpp"
#include "support.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

using namespace kleene;
using namespace testing_support;

namespace {

using TP = ThresholdPredicate;

EnergyAutomaton load(const std::string& name) {
  std::ifstream in(std::string(KLEENE_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return automaton_from_json(parse_json_text(ss.str()));
}

EnergyAutomaton make(std::vector<std::string> names, std::vector<bool> initial, std::vector<bool> accepting,
                     std::vector<std::tuple<std::size_t, std::size_t, EnergyFunction>> edges) {
  std::size_t n = names.size();
  EnergyMatrix m(n, n, EnergyFunction::bottom());
  for (auto& [i, j, f] : edges) m(i, j) = join(m(i, j), f);
  return EnergyAutomaton(std::move(names), std::move(initial), std::move(accepting), std::move(m));
}

EnergyAutomaton pump(std::vector<bool> accepting) {
  return make({"s0", "s1"}, {true, false}, std::move(accepting), {{0, 1, plus(2)}, {1, 0, dec()}});
}

}  // namespace

TEST_CASE("canonical_permute") {
  auto p = canonical_permute(pump({false, true}));
  CHECK(p.automaton.state_names() == std::vector<std::string>{"s1", "s0"});
  CHECK(p.order == std::vector<std::size_t>{1, 0});
  CHECK(p.accepting_count == 1);
  CHECK(p.automaton.transitions()(0, 1) == dec());
  CHECK(p.automaton.transitions()(1, 0) == plus(2));
  CHECK(canonical_permute(pump({true, false})).order == std::vector<std::size_t>{0, 1});
  auto all = canonical_permute(pump({true, true}));
  CHECK(all.order == std::vector<std::size_t>{0, 1});
  CHECK(all.accepting_count == 2);
}

TEST_CASE("reach_value") {
  auto lone = make({"s"}, {true}, {false}, {});
  CHECK(reach_value(lone) == EnergyFunction::bottom());
  auto accept = make({"s"}, {true}, {true}, {});
  CHECK(reach_value(accept) == EnergyFunction::identity());
  CHECK(reach_value(pump({false, true})) == all_top());
}

TEST_CASE("reachable") {
  auto accept = make({"s"}, {true}, {true}, {});
  CHECK(reachable(accept, fin(0)).answer);
  CHECK(reachable(pump({false, true}), fin(0)).answer);
  auto gate = make({"a", "b"}, {true, false}, {false, true}, {{0, 1, dec()}});
  CHECK_FALSE(reachable(gate, fin(1, 2)).answer);
  CHECK(reachable(gate, fin(1)).answer);
  CHECK_FALSE(oracle_reach(gate, fin(1, 2)).answer);
  CHECK_FALSE(oracle_reach(accept, bot).answer);
  auto split = make({"a", "b", "c"}, {true, false, false}, {false, false, true}, {{0, 1, plus(1)}});
  CHECK_FALSE(oracle_reach(split, fin(3)).answer);
  auto r = oracle_reach(pump({false, true}), fin(0));
  CHECK(r.answer);
  REQUIRE(r.witness);
  CHECK(r.witness->path.front() == "s0");
  CHECK(r.witness->path.back() == "s1");
}

TEST_CASE("buchi") {
  CHECK(buchi_value(pump({false, false})) == TP::never());
  auto id_loop = make({"s"}, {true}, {true}, {{0, 0, EnergyFunction::identity()}});
  CHECK(buchi_value(id_loop) == TP::from(0, true));
  CHECK(buchi_value(pump({true, false})) == TP::from(0, true));
  CHECK(buchi(id_loop, fin(0)).answer);
  auto down = make({"s"}, {true}, {true}, {{0, 0, dec()}});
  CHECK_FALSE(buchi(down, fin(100)).answer);
  CHECK_FALSE(buchi(down, top).answer);
  CHECK_FALSE(buchi(pump({false, false}), top).answer);
  CHECK_FALSE(oracle_buchi(down, fin(100)).answer);
  CHECK(oracle_buchi(id_loop, fin(0)).answer);
  CHECK_FALSE(oracle_buchi(make({"s"}, {true}, {true}, {}), top).answer);
  auto r = oracle_buchi(pump({true, false}), fin(0));
  CHECK(r.answer);
  REQUIRE(r.witness);
  CHECK(r.witness->path.back() == "s0");
  CHECK(r.witness->cycle == std::vector<std::string>{"s1", "s0"});
}

TEST_CASE("fixtures") {
  CHECK(reachable(load("pump.json"), fin(0)).answer);
  CHECK(buchi(load("pump_buchi.json"), fin(0)).answer);
  CHECK_FALSE(buchi(load("decreasing_loop.json"), fin(100)).answer);
  CHECK(buchi(load("identity_loop.json"), fin(0)).answer);
  CHECK_FALSE(reachable(load("no_accepting.json"), top).answer);
  CHECK_THROWS_AS(load("malformed.json"), ParseError);
}

TEST_CASE("oracle budget") {
  Random rng(41);
  CHECK_THROWS_AS(oracle_reach(random_automaton(rng, 5), fin(0), {4}), BudgetExceeded);
}

TEST_CASE("algebraic answers agree with the oracles") {
  Random rng(42);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng.below(4);
    EnergyAutomaton a = random_automaton(rng, n);
    std::vector<EnergyFunction> entries(a.transitions().data().begin(), a.transitions().data().end());
    for (const auto& x : sample_points(entries, rng, 6)) {
      CHECK(reachable(a, x).answer == oracle_reach(a, x).answer);
      CHECK(buchi(a, x).answer == oracle_buchi(a, x).answer);
    }
  }
}

TEST_CASE("answers are invariant under relabeling and monotone in energy") {
  Random rng(43);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng.below(3);
    EnergyAutomaton a = random_automaton(rng, n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
    EnergyAutomaton b = permute(a, order);
    CHECK(reach_value(a) == reach_value(b));
    CHECK(buchi_value(a) == buchi_value(b));
    TP v = buchi_value(a);
    CHECK(apply(v, top) == !v.is_never());
    auto xs = sample_points({reach_value(a)}, rng, 8);
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        if (!(x <= y)) continue;
        if (reachable(a, x).answer) CHECK(reachable(a, y).answer);
        if (buchi(a, x).answer) CHECK(buchi(a, y).answer);
      }
    }
  }
}

TEST_CASE("json round trips") {
  Random rng(44);
  for (int t = 0; t < 100; ++t) {
    EnergyFunction f = random_energy_function(rng);
    CHECK(energy_function_from_json(to_json(f)) == f);
    TP v = random_threshold(rng);
    CHECK(threshold_from_json(to_json(v)) == v);
  }
  EnergyAutomaton a = random_automaton(rng, 3);
  EnergyAutomaton b = automaton_from_json(to_json(a));
  CHECK(b.state_names() == a.state_names());
  CHECK(mat_equal(EnergyAlgebra{}, a.transitions(), b.transitions()));
  CHECK(to_json(EnergyFunction::bottom()).dump() == R"({"bottom":{"boundary":"inf"}})");
}

TEST_CASE("json errors") {
  using nlohmann::json;
  CHECK_THROWS_AS(automaton_from_json(json::parse(R"({"states":["a"],"initial":["b"],"accepting":[]})")), ParseError);
  CHECK_THROWS_AS(automaton_from_json(json::parse(R"({"states":["a"],"initial":[{"state":"a"}],"accepting":[]})")),
                  ParseError);
  CHECK_THROWS_AS(energy_function_from_json(json::parse(R"({"bottom":{"boundary":"inf"},"pieces":[{"start":"0","intercept":"0","slope":"1"}]})")),
                  ParseError);
  CHECK_THROWS_AS(energy_function_from_json(json::parse(R"({"bottom":{"boundary":"0"},"pieces":[]})")), ValidationError);
  CHECK_THROWS_AS(energy_function_from_json(json::parse(R"({"bottom":{"boundary":"0"},"pieces":[{"start":"0","intercept":"0","slope":"1/2"}]})")),
                  ValidationError);
  auto two = automaton_from_json(json::parse(R"({"states":["a"],"initial":["a"],"accepting":["a"],"edges":[
    {"from":"a","to":"a","fn":{"bottom":{"boundary":"0"},"pieces":[{"start":"0","intercept":"1","slope":"1"}]}},
    {"from":"a","to":"a","fn":{"bottom":{"boundary":"0"},"pieces":[{"start":"0","intercept":"0","slope":"2"}]}}]})"));
  CHECK(two.transitions()(0, 0) == join(plus(1), piecewise(0, {{0, 0, 2}})));
}
