#include "kleene/laws.hpp"

#include "kleene/json_io.hpp"
#include "kleene/run_search.hpp"

#include <algorithm>
#include <numeric>

namespace kleene {

using nlohmann::json;

namespace {

constexpr std::size_t kStoredFailures = 10;

std::string show(const ExtValue& x) { return to_string(x); }
std::string show(const ThresholdPredicate& v) { return to_string(v); }
std::string show(const EnergyFunction& f) { return describe(f); }
std::string show(bool b) { return b ? "top" : "bot"; }

json functions_json(const std::vector<EnergyFunction>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(to_json(f));
  return out;
}

json lasso_json(const LassoSeq& seq) {
  return json{{"prefix", functions_json(seq.prefix)}, {"cycle", functions_json(seq.cycle)}};
}

LawReport report(std::string law, std::string instance) {
  LawReport r;
  r.law = std::move(law);
  r.instance = std::move(instance);
  r.cases = 1;
  return r;
}

const EnergyFunction& element(const LassoSeq& seq, std::size_t i) {
  if (i < seq.prefix.size()) return seq.prefix[i];
  return seq.cycle[(i - seq.prefix.size()) % seq.cycle.size()];
}

ThresholdPredicate product(const LassoSeq& seq) { return infinite_product_lasso(seq.prefix, seq.cycle); }

void require_cycle(const LassoSeq& seq, const char* who) {
  if (seq.cycle.empty()) throw std::invalid_argument(std::string(who) + ": lasso cycle must be nonempty");
}

/// Positions of a lasso sequence as graph nodes, with the successor map.
struct LassoPositions {
  std::size_t count;
  std::size_t loop;
  std::size_t next(std::size_t i) const { return i + 1 == count ? loop : i + 1; }
};

LassoPositions positions(const LassoSeq& seq) { return {seq.prefix.size() + seq.cycle.size(), seq.prefix.size()}; }

bool some_run(const TransitionGraph& g, const std::vector<bool>& accepting, const ExtValue& x) {
  std::vector<EnergySeed> seeds{{0, buchi_seed(x)}};
  return find_accepting_lasso(g, accepting, seeds).found;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

Verdict LawReport::verdict() const {
  if (failure_count > 0) return Verdict::Fail;
  if (unknown > 0) return Verdict::Unknown;
  return Verdict::Pass;
}

void LawReport::fail(LawFailure failure) {
  ++failure_count;
  if (failures.size() < kStoredFailures) failures.push_back(std::move(failure));
}

void LawReport::merge(const LawReport& other) {
  cases += other.cases;
  unknown += other.unknown;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() < kStoredFailures) failures.push_back(f);
  }
  bound = std::max(bound, other.bound);
}

json to_json(const LawReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"sample", f.sample}});
  }
  json out{{"law", r.law},
           {"instance", r.instance},
           {"cases", r.cases},
           {"verdict", to_string(r.verdict())},
           {"failure_count", r.failure_count},
           {"unknown", r.unknown},
           {"seed", r.seed},
           {"failures", std::move(failures)}};
  if (r.bound > 0) out["bound"] = r.bound;
  return out;
}

LassoSeq regroup(const LassoSeq& seq, const Regrouping& r) {
  if (seq.cycle.empty()) throw InvalidRegrouping("regroup: lasso cycle must be nonempty");
  if (r.period == 0) throw InvalidRegrouping("regroup: period blocks must be nonempty");
  for (auto b : r.head) {
    if (b == 0) throw InvalidRegrouping("regroup: head blocks must be nonempty");
  }
  auto block = [&](std::size_t start, std::size_t size) {
    EnergyFunction out = EnergyFunction::identity();
    for (std::size_t i = 0; i < size; ++i) out = compose(out, element(seq, start + i));
    return out;
  };
  LassoSeq out;
  std::size_t at = 0;
  for (auto b : r.head) {
    out.prefix.push_back(block(at, b));
    at += b;
  }
  while (at < seq.prefix.size()) {
    out.prefix.push_back(block(at, r.period));
    at += r.period;
  }
  // Blocks starting inside the cycle repeat once the cycle phase repeats.
  std::size_t c = seq.cycle.size();
  std::size_t blocks = c / std::gcd(c, r.period);
  for (std::size_t k = 0; k < blocks; ++k) out.cycle.push_back(block(at + k * r.period, r.period));
  return out;
}

LawReport check_ax0(const EnergyAlgebra& alg, const EnergyFunction& f, const EnergyFunction& g, const EnergyFunction& h,
                    const std::vector<ExtValue>& samples, unsigned budget) {
  if (budget < 1) throw std::invalid_argument("check_ax0: budget must be at least 1");
  LawReport r = report("ax0", "energy");
  EnergyFunction lhs_fn = alg.multiply(f, alg.multiply(alg.star(g), h));
  for (const auto& x : samples) {
    ExtValue lhs = lhs_fn(x);
    // Partial joins of x f g^n h along the orbit y_n = x f g^n.
    ExtValue y = f(x), y_max = y, rhs = h(y);
    bool decided = false;
    for (unsigned n = 0; n < budget && !decided; ++n) {
      ExtValue next = g(y);
      if (next <= y_max) {
        decided = true;
      } else if (next.is_top() || (y.is_finite() && next > y)) {
        // Unbounded orbit: the joins reach h at top.
        rhs = h(ExtValue::top());
        decided = true;
      } else {
        rhs = ext_join(rhs, h(next));
        y_max = ext_join(y_max, next);
        y = next;
      }
    }
    if (!decided) {
      ++r.unknown;
      continue;
    }
    if (lhs != rhs) {
      r.fail({{{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}}, show(lhs), show(rhs), show(x)});
    }
  }
  return r;
}

LawReport check_ax1_ax2(const LassoSeq& seq, const Regrouping& regrouping) {
  LawReport r = report("ax1-ax2", "energy");
  LassoSeq grouped = regroup(seq, regrouping);
  ThresholdPredicate original = product(seq);
  json inputs{{"lasso", lasso_json(seq)}, {"head", regrouping.head}, {"period", regrouping.period}};

  // Head peeled off: x_0 (x_1 x_2 ...).
  LassoSeq tail;
  if (!seq.prefix.empty()) {
    tail.prefix.assign(seq.prefix.begin() + 1, seq.prefix.end());
    tail.cycle = seq.cycle;
  } else {
    tail.cycle.assign(seq.cycle.begin() + 1, seq.cycle.end());
    tail.cycle.push_back(seq.cycle.front());
  }
  ThresholdPredicate peeled = act(element(seq, 0), product(tail));
  if (peeled != original) r.fail({inputs, show(original), show(peeled), "ax1"});
  ThresholdPredicate regrouped = product(grouped);
  if (regrouped != original) r.fail({inputs, show(original), show(regrouped), "ax2"});
  return r;
}

LawReport check_ax3(const LassoSeq& seq, const EnergyFunction& y, const EnergyFunction& z,
                    const std::vector<ExtValue>& samples) {
  require_cycle(seq, "check_ax3");
  LawReport r = report("ax3", "energy");
  EnergyFunction yz = join(y, z);
  LassoSeq joined;
  for (const auto& f : seq.prefix) joined.prefix.push_back(compose(f, yz));
  for (const auto& f : seq.cycle) joined.cycle.push_back(compose(f, yz));
  ThresholdPredicate lhs = product(joined);

  // Every choice sequence is a run through the positions, choosing y or z at each.
  LassoPositions pos = positions(seq);
  TransitionGraph g{pos.count, {}};
  for (std::size_t i = 0; i < pos.count; ++i) {
    g.edges.push_back({i, pos.next(i), compose(element(seq, i), y)});
    g.edges.push_back({i, pos.next(i), compose(element(seq, i), z)});
  }
  std::vector<bool> accepting(pos.count, true);
  for (const auto& x : samples) {
    bool rhs = some_run(g, accepting, x);
    if (apply(lhs, x) != rhs) {
      r.fail({{{"lasso", lasso_json(seq)}, {"y", to_json(y)}, {"z", to_json(z)}}, show(apply(lhs, x)), show(rhs),
              show(x)});
    }
  }
  return r;
}

LawReport check_ax4(const EnergyAlgebra& alg, const EnergyFunction& f, const LassoSeq& ys,
                    const std::vector<ExtValue>& samples) {
  require_cycle(ys, "check_ax4");
  LawReport r = report("ax4", "energy");
  EnergyFunction fs = alg.star(f);
  LassoSeq starred;
  for (const auto& y : ys.prefix) starred.prefix.push_back(alg.multiply(fs, y));
  for (const auto& y : ys.cycle) starred.cycle.push_back(alg.multiply(fs, y));
  ThresholdPredicate lhs = product(starred);

  // Position j waits at p_j looping on f, then takes y_j into the accepting
  // a_{j+1}; accepting infinitely often forces infinitely many y-steps.
  LassoPositions pos = positions(ys);
  const std::size_t n = pos.count;
  TransitionGraph g{2 * n, {}};
  std::vector<bool> accepting(2 * n, false);
  for (std::size_t j = 0; j < n; ++j) {
    g.edges.push_back({j, j, f});
    g.edges.push_back({j, n + pos.next(j), element(ys, j)});
    g.edges.push_back({n + j, j, EnergyFunction::identity()});
    accepting[n + j] = true;
  }
  for (const auto& x : samples) {
    bool rhs = some_run(g, accepting, x);
    if (apply(lhs, x) != rhs) {
      r.fail({{{"f", to_json(f)}, {"ys", lasso_json(ys)}}, show(apply(lhs, x)), show(rhs), show(x)});
    }
  }
  return r;
}

LawReport check_conway_star(const EnergyAlgebra& alg, const EnergyFunction& f, const EnergyFunction& g) {
  LawReport r = report("conway-star", "energy");
  json inputs{{"f", to_json(f)}, {"g", to_json(g)}};
  EnergyFunction sum_lhs = alg.star(alg.join(f, g));
  EnergyFunction sum_rhs = alg.multiply(alg.star(alg.multiply(alg.star(f), g)), alg.star(f));
  if (sum_lhs != sum_rhs) r.fail({inputs, show(sum_lhs), show(sum_rhs), "sum"});
  EnergyFunction prod_lhs = alg.star(alg.multiply(f, g));
  EnergyFunction prod_rhs = alg.join(alg.one(), alg.multiply(alg.multiply(f, alg.star(alg.multiply(g, f))), g));
  if (prod_lhs != prod_rhs) r.fail({inputs, show(prod_lhs), show(prod_rhs), "product"});
  return r;
}

LawReport check_conway_omega(const EnergyAlgebra& alg, const EnergyFunction& f, const EnergyFunction& g) {
  LawReport r = report("conway-omega", "energy");
  json inputs{{"f", to_json(f)}, {"g", to_json(g)}};
  ThresholdPredicate sum_lhs = alg.omega(alg.join(f, g));
  EnergyFunction fsg = alg.multiply(alg.star(f), g);
  ThresholdPredicate sum_rhs = alg.vjoin(alg.act(alg.star(fsg), alg.omega(f)), alg.omega(fsg));
  if (sum_lhs != sum_rhs) r.fail({inputs, show(sum_lhs), show(sum_rhs), "sum"});
  ThresholdPredicate prod_lhs = alg.omega(alg.multiply(f, g));
  ThresholdPredicate prod_rhs = alg.act(f, alg.omega(alg.multiply(g, f)));
  if (prod_lhs != prod_rhs) r.fail({inputs, show(prod_lhs), show(prod_rhs), "product"});
  return r;
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return t;
}

GroupTable klein_four_group() {
  GroupTable t(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  }
  return t;
}

void validate_group(const GroupTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidGroupTable("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidGroupTable("group table is not square");
    for (auto v : row) {
      if (v >= n) throw InvalidGroupTable("group table entry out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i) throw InvalidGroupTable("0 is not the identity");
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      row[table[i][j]] = true;
      col[table[j][i]] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() || std::find(col.begin(), col.end(), false) != col.end()) {
      throw InvalidGroupTable("group table is not a latin square");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw InvalidGroupTable("group table is not associative");
      }
    }
  }
}

namespace {

/// M_G with (M_G)_{g,h} = x_{g^-1 h}.
template <class T>
Matrix<T> group_matrix(const GroupTable& table, const std::vector<T>& elements, const T& fill) {
  validate_group(table);
  const std::size_t n = table.size();
  if (elements.size() != n) throw InvalidGroupTable("need one element per group member");
  std::vector<std::size_t> inverse(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] == 0) inverse[g] = h;
    }
  }
  Matrix<T> m(n, n, fill);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) m(g, h) = elements[table[inverse[g]][h]];
  }
  return m;
}

}  // namespace

LawReport check_group_identity(const EnergyAlgebra& alg, const GroupTable& table,
                               const std::vector<EnergyFunction>& elements, const std::string& group_name) {
  LawReport r = report("group-" + group_name, "energy");
  EnergyMatrix m = group_matrix(table, elements, alg.zero());
  EnergyFunction sum = alg.zero();
  for (const auto& x : elements) sum = alg.join(sum, x);
  json inputs{{"elements", functions_json(elements)}};

  EnergyMatrix s = mat_star(alg, m);
  for (std::size_t row = 0; row < m.rows(); ++row) {
    EnergyFunction row_sum = alg.zero();
    for (std::size_t j = 0; j < m.cols(); ++j) row_sum = alg.join(row_sum, s(row, j));
    EnergyFunction expected = alg.star(sum);
    if (row_sum != expected) r.fail({inputs, show(row_sum), show(expected), "star row " + std::to_string(row)});
  }
  ThresholdPredicate first = mat_omega(alg, m)[0];
  ThresholdPredicate expected = alg.omega(sum);
  if (first != expected) r.fail({inputs, show(first), show(expected), "omega"});
  return r;
}

LawReport check_bi_inductive(const EnergyAlgebra& alg, const EnergyFunction& f, const ThresholdPredicate& v,
                             const std::vector<ThresholdPredicate>& candidates, const std::vector<ExtValue>& samples) {
  LawReport r = report("bi-inductive", "energy");
  json inputs{{"f", to_json(f)}, {"v", to_json(v)}};
  ThresholdPredicate w = alg.vjoin(alg.omega(f), alg.act(alg.star(f), v));
  ThresholdPredicate image = alg.vjoin(alg.act(f, w), v);
  if (image != w) r.fail({inputs, show(image), show(w), "fixpoint"});
  for (const auto& u : candidates) {
    bool post_fixed = leq(u, alg.vjoin(alg.act(f, u), v));
    if (!post_fixed) continue;
    for (const auto& x : samples) {
      if (apply(u, x) && !apply(w, x)) {
        json with_u = inputs;
        with_u["u"] = to_json(u);
        r.fail({with_u, show(u), show(w), show(x)});
      }
    }
  }
  return r;
}

LawReport check_semiring(const EnergyAlgebra& alg, const EnergyFunction& f, const EnergyFunction& g,
                         const EnergyFunction& h) {
  LawReport r = report("semiring", "energy");
  json inputs{{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}};
  auto expect = [&](const char* name, const EnergyFunction& lhs, const EnergyFunction& rhs) {
    if (lhs != rhs) r.fail({inputs, show(lhs), show(rhs), name});
  };
  const EnergyFunction zero = alg.zero(), one = alg.one();
  expect("join-commutative", alg.join(f, g), alg.join(g, f));
  expect("join-associative", alg.join(alg.join(f, g), h), alg.join(f, alg.join(g, h)));
  expect("join-idempotent", alg.join(f, f), f);
  expect("join-unit", alg.join(f, zero), f);
  expect("product-associative", alg.multiply(alg.multiply(f, g), h), alg.multiply(f, alg.multiply(g, h)));
  expect("product-left-unit", alg.multiply(one, f), f);
  expect("product-right-unit", alg.multiply(f, one), f);
  expect("left-distributive", alg.multiply(f, alg.join(g, h)), alg.join(alg.multiply(f, g), alg.multiply(f, h)));
  expect("right-distributive", alg.multiply(alg.join(f, g), h), alg.join(alg.multiply(f, h), alg.multiply(g, h)));
  expect("left-zero", alg.multiply(zero, f), zero);
  expect("right-zero", alg.multiply(f, zero), zero);
  expect("star-unfold", alg.star(f), alg.join(one, alg.multiply(f, alg.star(f))));
  return r;
}

// Word instance.

namespace {

std::string distinguishing_word(const RegularLang& x, const RegularLang& y) {
  for (const auto& w : lang_union(x, y).enumerate(10)) {
    if (x.accepts(w) != y.accepts(w)) return w.empty() ? "1" : w;
  }
  return "?";
}

void expect_lang(LawReport& r, const json& inputs, const char* name, const RegularLang& lhs, const RegularLang& rhs) {
  if (lang_equal(lhs, rhs)) return;
  std::string w = distinguishing_word(lhs, rhs);
  r.fail({inputs, lhs.accepts(w == "1" ? "" : w) ? "contains " + w : "lacks " + w,
          rhs.accepts(w == "1" ? "" : w) ? "contains " + w : "lacks " + w, name});
}

void expect_lasso(LawReport& r, const json& inputs, const char* name, const LassoLang& lhs, const LassoLang& rhs,
                  unsigned bound) {
  r.bound = bound;
  BoundedVerdict v = lasso_equal_bounded(lhs, rhs, bound);
  if (v.equal) return;
  const auto& [u, p] = *v.counterexample;
  std::string word = u + "(" + p + ")^w";
  bool in_lhs = lasso_member(u, p, lhs);
  r.fail({inputs, in_lhs ? "contains " + word : "lacks " + word, in_lhs ? "lacks " + word : "contains " + word, name});
}

}  // namespace

LawReport check_word_semiring(const std::string& alphabet, const std::string& x, const std::string& y,
                              const std::string& z) {
  LawReport r = report("semiring", "word");
  json inputs{{"x", x}, {"y", y}, {"z", z}};
  WordAlgebra alg{alphabet};
  RegularLang a = RegularLang::parse(alphabet, x), b = RegularLang::parse(alphabet, y),
              c = RegularLang::parse(alphabet, z);
  expect_lang(r, inputs, "join-commutative", alg.join(a, b), alg.join(b, a));
  expect_lang(r, inputs, "join-associative", alg.join(alg.join(a, b), c), alg.join(a, alg.join(b, c)));
  expect_lang(r, inputs, "join-idempotent", alg.join(a, a), a);
  expect_lang(r, inputs, "join-unit", alg.join(a, alg.zero()), a);
  expect_lang(r, inputs, "product-associative", alg.multiply(alg.multiply(a, b), c),
              alg.multiply(a, alg.multiply(b, c)));
  expect_lang(r, inputs, "product-unit", alg.multiply(alg.one(), a), a);
  expect_lang(r, inputs, "left-distributive", alg.multiply(a, alg.join(b, c)),
              alg.join(alg.multiply(a, b), alg.multiply(a, c)));
  expect_lang(r, inputs, "right-distributive", alg.multiply(alg.join(a, b), c),
              alg.join(alg.multiply(a, c), alg.multiply(b, c)));
  expect_lang(r, inputs, "zero", alg.multiply(alg.zero(), a), alg.zero());
  expect_lang(r, inputs, "star-unfold", alg.star(a), alg.join(alg.one(), alg.multiply(a, alg.star(a))));
  return r;
}

LawReport check_word_conway_star(const std::string& alphabet, const std::string& x, const std::string& y) {
  LawReport r = report("conway-star", "word");
  json inputs{{"x", x}, {"y", y}};
  WordAlgebra alg{alphabet};
  RegularLang a = RegularLang::parse(alphabet, x), b = RegularLang::parse(alphabet, y);
  expect_lang(r, inputs, "sum", alg.star(alg.join(a, b)), alg.multiply(alg.star(alg.multiply(alg.star(a), b)), alg.star(a)));
  expect_lang(r, inputs, "product", alg.star(alg.multiply(a, b)),
              alg.join(alg.one(), alg.multiply(alg.multiply(a, alg.star(alg.multiply(b, a))), b)));
  return r;
}

LawReport check_word_omega_sum(const std::string& alphabet, const std::string& x, const std::string& y, unsigned bound) {
  LawReport r = report("omega-sum", "word");
  json inputs{{"x", x}, {"y", y}};
  RegularLang a = without_epsilon(RegularLang::parse(alphabet, x));
  RegularLang b = without_epsilon(RegularLang::parse(alphabet, y));
  RegularLang asb = lang_concat(lang_star(a), b);
  LassoLang lhs = omega_power(lang_union(a, b));
  LassoLang rhs = lasso_union(lasso_action(lang_star(asb), omega_power(a)), omega_power(asb));
  expect_lasso(r, inputs, "sum", lhs, rhs, bound);
  return r;
}

LawReport check_word_omega_product(const std::string& alphabet, const std::string& x, const std::string& y,
                                   unsigned bound) {
  LawReport r = report("omega-product", "word");
  json inputs{{"x", x}, {"y", y}};
  RegularLang a = without_epsilon(RegularLang::parse(alphabet, x));
  RegularLang b = without_epsilon(RegularLang::parse(alphabet, y));
  expect_lasso(r, inputs, "product", omega_power(lang_concat(a, b)), lasso_action(a, omega_power(lang_concat(b, a))),
               bound);
  return r;
}

LawReport check_word_omega_power(const std::string& alphabet, const std::string& x, unsigned bound) {
  LawReport r = report("omega-power", "word");
  json inputs{{"x", x}};
  RegularLang a = without_epsilon(RegularLang::parse(alphabet, x));
  expect_lasso(r, inputs, "square", omega_power(a), omega_power(lang_concat(a, a)), bound);
  bool rejected = false;
  try {
    omega_power(lang_union(a, RegularLang::epsilon(alphabet)));
  } catch (const EpsilonInOmegaBase&) {
    rejected = true;
  }
  if (!rejected) r.fail({inputs, "accepted", "EpsilonInOmegaBase", "empty word in base"});
  return r;
}

LawReport check_word_group_identity(const std::string& alphabet, const GroupTable& table,
                                    const std::vector<std::string>& elements, const std::string& group_name) {
  LawReport r = report("group-" + group_name, "word");
  json inputs{{"elements", elements}};
  WordAlgebra alg{alphabet};
  std::vector<RegularLang> langs;
  for (const auto& e : elements) langs.push_back(RegularLang::parse(alphabet, e));
  Matrix<RegularLang> m = group_matrix(table, langs, alg.zero());
  RegularLang sum = alg.zero();
  for (const auto& l : langs) sum = alg.join(sum, l);
  Matrix<RegularLang> s = mat_star(alg, m);
  RegularLang row = alg.zero();
  for (std::size_t j = 0; j < s.cols(); ++j) row = alg.join(row, s(0, j));
  expect_lang(r, inputs, "star row 0", row, alg.star(sum));
  return r;
}

// Suites.

namespace {

std::uint64_t case_seed(std::uint64_t seed, std::size_t law, std::size_t index) {
  return seed * 0x9E3779B97F4A7C15ULL + law * 0x100000001B3ULL + index;
}

LassoSeq random_lasso(Random& rng, std::size_t max_prefix, std::size_t max_cycle) {
  LassoSeq seq;
  std::size_t p = rng.below(max_prefix + 1), c = 1 + rng.below(max_cycle);
  for (std::size_t i = 0; i < p; ++i) seq.prefix.push_back(random_energy_function(rng));
  for (std::size_t i = 0; i < c; ++i) seq.cycle.push_back(random_energy_function(rng));
  return seq;
}

std::vector<EnergyFunction> all_of(const LassoSeq& seq) {
  std::vector<EnergyFunction> out = seq.prefix;
  out.insert(out.end(), seq.cycle.begin(), seq.cycle.end());
  return out;
}

template <class Check>
LawReport run_law(const std::string& law, const std::string& instance, const SuiteOptions& options,
                  std::size_t law_index, Check check) {
  LawReport total;
  total.law = law;
  total.instance = instance;
  total.seed = options.seed;
  for (std::size_t i = 0; i < options.cases; ++i) {
    std::uint64_t s = case_seed(options.seed, law_index, i);
    Random rng(s);
    LawReport one = check(rng);
    for (auto& f : one.failures) {
      f.inputs["case"] = i;
      f.inputs["case_seed"] = s;
    }
    total.merge(one);
  }
  return total;
}

}  // namespace

std::vector<LawReport> run_energy_suite(const SuiteOptions& options, const EnergyAlgebra& alg) {
  std::vector<LawReport> out;
  std::size_t law = 0;
  out.push_back(run_law("semiring", "energy", options, law++, [&](Random& rng) {
    return check_semiring(alg, random_energy_function(rng), random_energy_function(rng), random_energy_function(rng));
  }));
  out.push_back(run_law("ax0", "energy", options, law++, [&](Random& rng) {
    EnergyFunction f = random_energy_function(rng), g = random_energy_function(rng), h = random_energy_function(rng);
    return check_ax0(alg, f, g, h, sample_points({f, g, h, compose(f, g)}, rng, 16));
  }));
  out.push_back(run_law("ax1-ax2", "energy", options, law++, [&](Random& rng) {
    LassoSeq seq = random_lasso(rng, 2, 3);
    Regrouping regrouping;
    for (std::size_t i = rng.below(3); i > 0; --i) regrouping.head.push_back(1 + rng.below(3));
    regrouping.period = 1 + rng.below(3);
    return check_ax1_ax2(seq, regrouping);
  }));
  out.push_back(run_law("ax3", "energy", options, law++, [&](Random& rng) {
    LassoSeq seq = random_lasso(rng, 2, 2);
    EnergyFunction y = random_energy_function(rng), z = random_energy_function(rng);
    auto fs = all_of(seq);
    fs.push_back(y);
    fs.push_back(z);
    return check_ax3(seq, y, z, sample_points(fs, rng, 12));
  }));
  out.push_back(run_law("ax4", "energy", options, law++, [&](Random& rng) {
    EnergyFunction f = random_energy_function(rng);
    LassoSeq ys = random_lasso(rng, 1, 2);
    auto fs = all_of(ys);
    fs.push_back(f);
    return check_ax4(alg, f, ys, sample_points(fs, rng, 12));
  }));
  out.push_back(run_law("conway-star", "energy", options, law++, [&](Random& rng) {
    return check_conway_star(alg, random_energy_function(rng), random_energy_function(rng));
  }));
  out.push_back(run_law("conway-omega", "energy", options, law++, [&](Random& rng) {
    return check_conway_omega(alg, random_energy_function(rng), random_energy_function(rng));
  }));
  const std::vector<std::pair<std::string, GroupTable>> groups{
      {"c2", cyclic_group(2)}, {"c3", cyclic_group(3)}, {"c4", cyclic_group(4)}, {"klein4", klein_four_group()}};
  for (const auto& [name, table] : groups) {
    out.push_back(run_law("group-" + name, "energy", options, law++, [&](Random& rng) {
      std::vector<EnergyFunction> elements;
      for (std::size_t i = 0; i < table.size(); ++i) elements.push_back(random_energy_function(rng));
      return check_group_identity(alg, table, elements, name);
    }));
  }
  out.push_back(run_law("bi-inductive", "energy", options, law++, [&](Random& rng) {
    EnergyFunction f = random_energy_function(rng);
    ThresholdPredicate v = random_threshold(rng);
    std::vector<ThresholdPredicate> candidates{v, omega(f), ThresholdPredicate::from(0, true)};
    for (int i = 0; i < 6; ++i) candidates.push_back(random_threshold(rng));
    std::vector<EnergyFunction> fs{f};
    if (!v.is_never()) fs.push_back(EnergyFunction::shift(-v.threshold()));
    return check_bi_inductive(alg, f, v, candidates, sample_points(fs, rng, 12));
  }));
  return out;
}

const std::vector<std::string>& word_identity_names() {
  static const std::vector<std::string> names{"semiring",      "conway-star",   "group-c2",
                                              "omega-sum",     "omega-product", "omega-power"};
  return names;
}

LawReport run_word_identity(const std::string& name, const SuiteOptions& options) {
  const auto& names = word_identity_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw UnknownIdentity("unknown identity '" + name + "'");
  const std::size_t law = static_cast<std::size_t>(it - names.begin());
  const std::string& ab = options.alphabet;
  auto regex = [&](Random& rng) { return random_regex(rng, ab, 3); };
  auto small = [&](Random& rng) { return random_regex(rng, ab, 2); };
  LawReport r;
  if (name == "semiring") {
    r = run_law(name, "word", options, law,
                [&](Random& rng) { return check_word_semiring(ab, regex(rng), regex(rng), regex(rng)); });
  } else if (name == "conway-star") {
    r = run_law(name, "word", options, law,
                [&](Random& rng) { return check_word_conway_star(ab, regex(rng), regex(rng)); });
  } else if (name == "group-c2") {
    r = run_law(name, "word", options, law, [&](Random& rng) {
      return check_word_group_identity(ab, cyclic_group(2), {regex(rng), regex(rng)}, "c2");
    });
  } else if (name == "omega-sum") {
    r = run_law(name, "word", options, law,
                [&](Random& rng) { return check_word_omega_sum(ab, small(rng), small(rng), options.bound); });
  } else if (name == "omega-product") {
    r = run_law(name, "word", options, law,
                [&](Random& rng) { return check_word_omega_product(ab, small(rng), small(rng), options.bound); });
  } else {
    r = run_law(name, "word", options, law,
                [&](Random& rng) { return check_word_omega_power(ab, small(rng), options.bound); });
  }
  if (name.rfind("omega", 0) == 0) r.bound = options.bound;
  return r;
}

std::vector<LawReport> run_word_suite(const SuiteOptions& options) {
  std::vector<LawReport> out;
  for (const auto& name : word_identity_names()) {
    SuiteOptions o = options;
    // Bounded comparisons enumerate every lasso word, so they run on fewer cases.
    if (name.rfind("omega", 0) == 0) o.cases = (options.cases + 4) / 5;
    out.push_back(run_word_identity(name, o));
  }
  return out;
}

}  // namespace kleene
