#include <doctest.h>

#include "kleene/energy_function.hpp"
#include "kleene/random.hpp"
#include "kleene/wordmodel.hpp"

using namespace kleene;

namespace {

RegularLang re(const char* text, const char* alphabet = "ab") { return RegularLang::parse(alphabet, text); }

LassoLang lasso(const char* u, const char* v) { return LassoLang("ab", {{re(u), re(v)}}); }

/// Brute-force membership of u v^w in U V^w: unroll the word and look for a
/// U-prefix followed by V-blocks that return to the same phase of the period.
bool brute_member(const std::string& u, const std::string& v, const RegularLang& pu, const RegularLang& pv) {
  std::string w = u;
  for (int i = 0; i < 8; ++i) w += v;
  // Positions reachable after U then a sequence of V-blocks.
  std::vector<bool> after(w.size() + 1, false);
  for (std::size_t i = 0; i <= w.size(); ++i) after[i] = pu.accepts(w.substr(0, i));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!after[i]) continue;
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      if (pv.accepts(w.substr(i, j - i))) after[j] = true;
    }
  }
  // Some reached position in the periodic part returns to its phase one or
  // more periods later via V-blocks.
  for (std::size_t p = u.size(); p < u.size() + 4 * v.size(); ++p) {
    if (!after[p]) continue;
    std::vector<bool> from(w.size() + 1, false);
    from[p] = true;
    for (std::size_t i = p; i < w.size(); ++i) {
      if (!from[i]) continue;
      for (std::size_t j = i + 1; j <= w.size(); ++j) {
        if (pv.accepts(w.substr(i, j - i))) from[j] = true;
      }
    }
    for (std::size_t k = 1; p + k * v.size() <= w.size(); ++k) {
      if (from[p + k * v.size()]) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("language constructions") {
  auto words = lang_star(re("a")).enumerate(3);
  CHECK(words == std::vector<std::string>{"", "a", "aa", "aaa"});
  CHECK(lang_concat(re("a"), re("b")).enumerate(3) == std::vector<std::string>{"ab"});
  CHECK(lang_equal(lang_union(re("0"), re("ab*")), re("ab*")));
  CHECK(re("0").enumerate(4).empty());
  CHECK(re("1").enumerate(4) == std::vector<std::string>{""});
  CHECK(re("(a|b).a*").accepts("baaa"));
  CHECK_FALSE(re("(a|b).a*").accepts("ab"));
  CHECK(re("a**").accepts(""));
  CHECK_THROWS_AS(lang_union(re("a"), re("a", "abc")), AlphabetMismatch);
}

TEST_CASE("regex syntax errors") {
  CHECK_THROWS_AS(re("(a"), RegexSyntaxError);
  CHECK_THROWS_AS(re("a|"), RegexSyntaxError);
  CHECK_THROWS_AS(re("*a"), RegexSyntaxError);
  CHECK_THROWS_AS(re("c"), RegexSyntaxError);
  CHECK_THROWS_AS(re("a)"), RegexSyntaxError);
}

TEST_CASE("lang_equal") {
  CHECK(lang_equal(re("(a|b)*"), re("(a*b)*a*")));
  CHECK(lang_equal(re("(ab)*a"), re("a(ba)*")));
  CHECK_FALSE(lang_equal(re("a*"), re("b*")));
  CHECK_FALSE(lang_equal(re("(a|b)*"), re("(ab)*")));
}

TEST_CASE("lang_equal agrees with enumeration") {
  Random rng(51);
  for (int i = 0; i < 200; ++i) {
    RegularLang x = re(random_regex(rng, "ab").c_str()), y = re(random_regex(rng, "ab").c_str());
    bool same = x.enumerate(7) == y.enumerate(7);
    if (lang_equal(x, y)) CHECK(same);
    CHECK(lang_equal(x, x));
    CHECK(lang_equal(lang_union(x, y), lang_union(y, x)));
  }
}

TEST_CASE("constructions agree with enumeration") {
  Random rng(52);
  for (int i = 0; i < 150; ++i) {
    RegularLang x = re(random_regex(rng, "ab").c_str()), y = re(random_regex(rng, "ab").c_str());
    auto xs = x.enumerate(5), ys = y.enumerate(5);
    for (const auto& w : lang_concat(x, y).enumerate(5)) {
      bool split = false;
      for (std::size_t k = 0; k <= w.size() && !split; ++k) split = x.accepts(w.substr(0, k)) && y.accepts(w.substr(k));
      CHECK(split);
    }
    for (const auto& a : xs) {
      for (const auto& b : ys) CHECK(lang_concat(x, y).accepts(a + b));
      CHECK(lang_star(x).accepts(a + a));
      CHECK(lang_union(x, y).accepts(a));
    }
    CHECK_FALSE(without_epsilon(x).accepts(""));
    for (const auto& a : xs) {
      if (!a.empty()) CHECK(without_epsilon(x).accepts(a));
    }
  }
}

TEST_CASE("lasso membership") {
  CHECK(lasso_member("a", "ba", lasso("a", "ba")));
  CHECK(lasso_member("", "ab", lasso("a", "ba")));
  CHECK_FALSE(lasso_member("", "a", lasso("b", "a")));
  CHECK(lasso_member("", "a", lasso("1", "a")));
  CHECK(lasso_member("b", "a", lasso("b", "a")));
  CHECK(lasso_member("", "ab", lasso("1", "a*b(a|b)")));
  CHECK_FALSE(lasso_member("", "ab", lasso("1", "a*bb")));
  CHECK(lasso_member("", "aab", lasso("1", "a*b")));
  CHECK_THROWS_AS(lasso_member("a", "", lasso("a", "b")), std::invalid_argument);
}

TEST_CASE("lasso membership agrees with unrolling") {
  Random rng(53);
  std::vector<std::string> words{"", "a", "b", "ab", "ba", "aab", "abb", "bab"};
  for (int i = 0; i < 80; ++i) {
    std::string ru = random_regex(rng, "ab", 2), rv = random_regex(rng, "ab", 2);
    RegularLang u = re(ru.c_str());
    RegularLang v = without_epsilon(re(rv.c_str()));
    CAPTURE(ru);
    CAPTURE(rv);
    LassoLang l("ab", {{u, v}});
    for (const auto& p : words) {
      for (const auto& c : words) {
        if (c.empty()) continue;
        CAPTURE(p);
        CAPTURE(c);
        CHECK(lasso_member(p, c, l) == brute_member(p, c, u, v));
      }
    }
  }
}

TEST_CASE("bounded lasso equality") {
  LassoLang l = lasso("a|b", "ab");
  CHECK(lasso_equal_bounded(l, l, 4).equal);
  auto v = lasso_equal_bounded(omega_power(re("a")), omega_power(re("aa")), 6);
  CHECK(v.equal);
  CHECK(v.bound == 6);
  v = lasso_equal_bounded(omega_power(re("a")), omega_power(re("b")), 6);
  CHECK_FALSE(v.equal);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->first.empty());
  CHECK(v.counterexample->second == "a");
}

TEST_CASE("omega power and action") {
  LassoLang w = omega_power(re("ab"));
  REQUIRE(w.parts().size() == 1);
  CHECK(lang_equal(w.parts()[0].first, re("1")));
  LassoLang acted = lasso_action(re("a"), omega_power(re("b")));
  CHECK(lang_equal(acted.parts()[0].first, re("a")));
  CHECK(lasso_member("a", "b", acted));
  CHECK_THROWS_AS(omega_power(re("1|a")), EpsilonInOmegaBase);
  CHECK_THROWS_AS(omega_power(re("a*")), EpsilonInOmegaBase);
}

TEST_CASE("word matrices") {
  WordAlgebra alg;
  Matrix<RegularLang> m(2, 2, re("0"));
  m(0, 0) = re("a");
  m(0, 1) = re("b");
  m(1, 0) = re("b");
  m(1, 1) = re("a");
  auto s = mat_star(alg, m);
  CHECK(lang_equal(lang_union(s(0, 0), s(0, 1)), re("(a|b)*")));
  CHECK(lang_equal(s(0, 0), re("(a|ba*b)*")));
}
