#include "kleene/wordmodel.hpp"

#include "kleene/energy_function.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

namespace kleene {

namespace {

void require_same(const std::string& x, const std::string& y) {
  if (x != y) throw AlphabetMismatch("alphabets '" + x + "' and '" + y + "' differ");
}

std::string normalize_alphabet(std::string alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (char c : alphabet) {
    if (c < 'a' || c > 'z') throw std::invalid_argument(std::string("alphabet letter '") + c + "' is not in a-z");
  }
  return alphabet;
}

}  // namespace

RegularLang::RegularLang(std::string alphabet) : alphabet_(normalize_alphabet(std::move(alphabet))) {}

std::size_t RegularLang::symbol(char c) const {
  auto pos = alphabet_.find(c);
  if (pos == std::string::npos) throw AlphabetMismatch(std::string("letter '") + c + "' is not in alphabet " + alphabet_);
  return pos;
}

std::size_t RegularLang::add_state() {
  delta_.emplace_back(alphabet_.size());
  initial_.push_back(false);
  final_.push_back(false);
  return initial_.size() - 1;
}

RegularLang RegularLang::epsilon(const std::string& alphabet) {
  RegularLang l(alphabet);
  std::size_t s = l.add_state();
  l.initial_[s] = l.final_[s] = true;
  return l;
}

RegularLang RegularLang::letter(const std::string& alphabet, char c) { return word(alphabet, std::string(1, c)); }

RegularLang RegularLang::word(const std::string& alphabet, std::string_view w) {
  RegularLang l(alphabet);
  std::size_t cur = l.add_state();
  l.initial_[cur] = true;
  for (char c : w) {
    std::size_t next = l.add_state();
    l.delta_[cur][l.symbol(c)].push_back(next);
    cur = next;
  }
  l.final_[cur] = true;
  return l;
}

namespace {

class RegexParser {
 public:
  RegexParser(const std::string& alphabet, std::string_view text) : alphabet_(alphabet), text_(text) {}

  RegularLang run() {
    RegularLang out = alternation();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw RegexSyntaxError("regex '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '0' || c == '1' || (c >= 'a' && c <= 'z');
  }

  RegularLang alternation() {
    RegularLang out = concatenation();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      out = lang_union(out, concatenation());
      skip_space();
    }
    return out;
  }

  RegularLang concatenation() {
    RegularLang out = repetition();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        out = lang_concat(out, repetition());
      } else if (starts_atom()) {
        out = lang_concat(out, repetition());
      } else {
        return out;
      }
    }
  }

  RegularLang repetition() {
    RegularLang out = atom();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      out = lang_star(out);
      skip_space();
    }
    return out;
  }

  RegularLang atom() {
    if (!starts_atom()) error(pos_ < text_.size() ? "expected an expression" : "unexpected end");
    char c = text_[pos_++];
    if (c == '0') return RegularLang::empty(alphabet_);
    if (c == '1') return RegularLang::epsilon(alphabet_);
    if (c != '(') {
      if (alphabet_.find(c) == std::string::npos) error(std::string("letter '") + c + "' is not in the alphabet");
      return RegularLang::letter(alphabet_, c);
    }
    RegularLang inner = alternation();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') error("missing ')'");
    ++pos_;
    return inner;
  }

  const std::string& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RegularLang RegularLang::parse(const std::string& alphabet, std::string_view regex) {
  RegularLang probe(alphabet);
  return RegexParser(probe.alphabet(), regex).run();
}

bool RegularLang::accepts_epsilon() const {
  for (std::size_t s = 0; s < states(); ++s) {
    if (initial_[s] && final_[s]) return true;
  }
  return false;
}

bool RegularLang::accepts(std::string_view w) const {
  std::vector<bool> cur = initial_;
  for (char c : w) {
    std::size_t a = alphabet_.find(c);
    if (a == std::string::npos) return false;
    std::vector<bool> next(states(), false);
    for (std::size_t s = 0; s < states(); ++s) {
      if (!cur[s]) continue;
      for (auto t : delta_[s][a]) next[t] = true;
    }
    cur = std::move(next);
  }
  for (std::size_t s = 0; s < states(); ++s) {
    if (cur[s] && final_[s]) return true;
  }
  return false;
}

std::vector<std::string> RegularLang::enumerate(std::size_t max_len) const {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      if (accepts(w)) out.push_back(w);
      for (char c : alphabet_) next.push_back(w + c);
    }
    layer = std::move(next);
  }
  return out;
}

RegularLang RegularLang::trimmed() const {
  const std::size_t n = states();
  std::vector<bool> forward(n, false), backward(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (initial_[s]) {
      forward[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (const auto& targets : delta_[s]) {
      for (auto t : targets) {
        if (!forward[t]) {
          forward[t] = true;
          stack.push_back(t);
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& targets : delta_[s]) {
      for (auto t : targets) reverse[t].push_back(s);
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (final_[s]) {
      backward[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (auto p : reverse[s]) {
      if (!backward[p]) {
        backward[p] = true;
        stack.push_back(p);
      }
    }
  }
  RegularLang out(alphabet_);
  std::vector<std::size_t> index(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (forward[s] && backward[s]) index[s] = out.add_state();
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (index[s] == n) continue;
    out.initial_[index[s]] = initial_[s];
    out.final_[index[s]] = final_[s];
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
      std::set<std::size_t> targets;
      for (auto t : delta_[s][a]) {
        if (index[t] != n) targets.insert(index[t]);
      }
      out.delta_[index[s]][a].assign(targets.begin(), targets.end());
    }
  }
  return out;
}

RegularLang lang_union(const RegularLang& x, const RegularLang& y) {
  require_same(x.alphabet_, y.alphabet_);
  RegularLang out(x.alphabet_);
  for (const RegularLang* part : {&x, &y}) {
    std::size_t base = out.states();
    for (std::size_t s = 0; s < part->states(); ++s) out.add_state();
    for (std::size_t s = 0; s < part->states(); ++s) {
      out.initial_[base + s] = part->initial_[s];
      out.final_[base + s] = part->final_[s];
      for (std::size_t a = 0; a < out.alphabet_.size(); ++a) {
        for (auto t : part->delta_[s][a]) out.delta_[base + s][a].push_back(base + t);
      }
    }
  }
  return out.trimmed();
}

RegularLang lang_concat(const RegularLang& x, const RegularLang& y) {
  require_same(x.alphabet_, y.alphabet_);
  RegularLang out(x.alphabet_);
  const std::size_t nx = x.states(), ny = y.states();
  for (std::size_t s = 0; s < nx + ny; ++s) out.add_state();
  const bool x_eps = x.accepts_epsilon(), y_eps = y.accepts_epsilon();
  for (std::size_t s = 0; s < nx; ++s) {
    out.initial_[s] = x.initial_[s];
    out.final_[s] = x.final_[s] && y_eps;
    for (std::size_t a = 0; a < out.alphabet_.size(); ++a) {
      for (auto t : x.delta_[s][a]) {
        out.delta_[s][a].push_back(t);
        if (!x.final_[t]) continue;
        for (std::size_t i = 0; i < ny; ++i) {
          if (y.initial_[i]) out.delta_[s][a].push_back(nx + i);
        }
      }
    }
  }
  for (std::size_t s = 0; s < ny; ++s) {
    out.initial_[nx + s] = y.initial_[s] && x_eps;
    out.final_[nx + s] = y.final_[s];
    for (std::size_t a = 0; a < out.alphabet_.size(); ++a) {
      for (auto t : y.delta_[s][a]) out.delta_[nx + s][a].push_back(nx + t);
    }
  }
  return out.trimmed();
}

RegularLang lang_star(const RegularLang& x) {
  RegularLang out(x.alphabet_);
  const std::size_t n = x.states();
  for (std::size_t s = 0; s <= n; ++s) out.add_state();
  const std::size_t start = n;
  for (std::size_t s = 0; s < n; ++s) {
    out.final_[s] = x.final_[s];
    for (std::size_t a = 0; a < out.alphabet_.size(); ++a) {
      for (auto t : x.delta_[s][a]) {
        out.delta_[s][a].push_back(t);
        if (!x.final_[t]) continue;
        for (std::size_t i = 0; i < n; ++i) {
          if (x.initial_[i]) out.delta_[s][a].push_back(i);
        }
      }
    }
  }
  out.initial_[start] = out.final_[start] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x.initial_[i]) continue;
    for (std::size_t a = 0; a < out.alphabet_.size(); ++a) {
      for (auto t : out.delta_[i][a]) out.delta_[start][a].push_back(t);
    }
  }
  return out.trimmed();
}

RegularLang without_epsilon(const RegularLang& x) {
  if (!x.accepts_epsilon()) return x;
  // Fresh start state copying the initial states' moves but not their finality.
  RegularLang out = x;
  std::size_t start = out.add_state();
  for (std::size_t s = 0; s < x.states(); ++s) {
    if (!x.initial_[s]) continue;
    out.initial_[s] = false;
    for (std::size_t a = 0; a < out.alphabet_.size(); ++a) {
      for (auto t : x.delta_[s][a]) out.delta_[start][a].push_back(t);
    }
  }
  out.initial_[start] = true;
  return out.trimmed();
}

std::vector<bool> RegularLang::step(const std::vector<bool>& set, std::size_t a) const {
  std::vector<bool> next(states(), false);
  for (std::size_t s = 0; s < states(); ++s) {
    if (!set[s]) continue;
    for (auto t : delta_[s][a]) next[t] = true;
  }
  return next;
}

bool RegularLang::accepting(const std::vector<bool>& set) const {
  for (std::size_t s = 0; s < states(); ++s) {
    if (set[s] && final_[s]) return true;
  }
  return false;
}

bool lang_equal(const RegularLang& x, const RegularLang& y, std::size_t max_pairs) {
  require_same(x.alphabet(), y.alphabet());
  using Pair = std::pair<std::vector<bool>, std::vector<bool>>;
  std::set<Pair> seen;
  std::deque<Pair> queue;
  queue.emplace_back(x.start_set(), y.start_set());
  seen.insert(queue.front());
  while (!queue.empty()) {
    Pair cur = std::move(queue.front());
    queue.pop_front();
    if (x.accepting(cur.first) != y.accepting(cur.second)) return false;
    for (std::size_t a = 0; a < x.alphabet().size(); ++a) {
      Pair next{x.step(cur.first, a), y.step(cur.second, a)};
      if (seen.insert(next).second) {
        if (seen.size() > max_pairs) throw BudgetExceeded("lang_equal: subset construction exceeds budget");
        queue.push_back(std::move(next));
      }
    }
  }
  return true;
}


LassoLang::LassoLang(std::string alphabet, std::vector<std::pair<RegularLang, RegularLang>> parts)
    : alphabet_(normalize_alphabet(std::move(alphabet))), parts_(std::move(parts)) {
  for (const auto& [u, v] : parts_) {
    require_same(alphabet_, u.alphabet());
    require_same(alphabet_, v.alphabet());
    if (v.accepts_epsilon()) throw EpsilonInOmegaBase("omega base contains the empty word");
  }
}

LassoLang omega_power(const RegularLang& l) {
  return LassoLang(l.alphabet(), {{RegularLang::epsilon(l.alphabet()), l}});
}

LassoLang lasso_action(const RegularLang& x, const LassoLang& w) {
  require_same(x.alphabet(), w.alphabet());
  std::vector<std::pair<RegularLang, RegularLang>> parts;
  for (const auto& [u, v] : w.parts()) parts.emplace_back(lang_concat(x, u), v);
  return LassoLang(w.alphabet(), std::move(parts));
}

LassoLang lasso_union(const LassoLang& v, const LassoLang& w) {
  require_same(v.alphabet(), w.alphabet());
  auto parts = v.parts();
  parts.insert(parts.end(), w.parts().begin(), w.parts().end());
  return LassoLang(v.alphabet(), std::move(parts));
}

namespace {

/// Kosaraju's algorithm; returns a component id per node.
template <class Edge, class Target>
std::vector<std::size_t> strong_components(const std::vector<std::vector<Edge>>& adj, Target target) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& e : adj[s]) reverse[target(e)].push_back(s);
  }
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    visited[root] = true;
    while (!stack.empty()) {
      auto& [s, next] = stack.back();
      if (next < adj[s].size()) {
        std::size_t t = target(adj[s][next++]);
        if (!visited[t]) {
          visited[t] = true;
          stack.emplace_back(t, 0);
        }
      } else {
        order.push_back(s);
        stack.pop_back();
      }
    }
  }
  const std::size_t unset = n;
  std::vector<std::size_t> component(n, unset);
  std::size_t count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (component[*it] != unset) continue;
    std::vector<std::size_t> stack{*it};
    component[*it] = count;
    while (!stack.empty()) {
      std::size_t s = stack.back();
      stack.pop_back();
      for (auto p : reverse[s]) {
        if (component[p] == unset) {
          component[p] = count;
          stack.push_back(p);
        }
      }
    }
    ++count;
  }
  return component;
}

/// One part U V^w as a single automaton: U states, then V states. Moving
/// from a final V state back to an initial one completes a V-block.
class PartAutomaton {
 public:
  struct Move {
    std::size_t to;
    bool completes_block;
  };

  PartAutomaton(const RegularLang& u, const RegularLang& v) : nu_(u.states()), letters_(u.alphabet().size()) {
    const std::size_t nv = v.states();
    moves_.resize((nu_ + nv) * letters_);
    auto add = [&](std::size_t from, std::size_t a, std::size_t to, bool completes) {
      moves_[from * letters_ + a].push_back({to, completes});
    };
    for (std::size_t a = 0; a < letters_; ++a) {
      for (std::size_t p = 0; p < nu_; ++p) {
        for (auto q : u.successors(p, a)) {
          add(p, a, q, false);
          if (!u.is_final(q)) continue;
          for (std::size_t i = 0; i < nv; ++i) {
            if (v.is_initial(i)) add(p, a, nu_ + i, false);
          }
        }
      }
      for (std::size_t p = 0; p < nv; ++p) {
        for (auto q : v.successors(p, a)) {
          add(nu_ + p, a, nu_ + q, false);
          if (!v.is_final(q)) continue;
          for (std::size_t i = 0; i < nv; ++i) {
            if (v.is_initial(i)) add(nu_ + p, a, nu_ + i, true);
          }
        }
      }
    }
    start_.assign(nu_ + nv, false);
    for (std::size_t i = 0; i < nu_; ++i) start_[i] = u.is_initial(i);
    if (u.accepts_epsilon()) {
      for (std::size_t i = 0; i < nv; ++i) start_[nu_ + i] = v.is_initial(i);
    }
  }

  std::size_t states() const { return start_.size(); }
  const std::vector<bool>& start() const { return start_; }

  std::vector<bool> step(const std::vector<bool>& from, std::size_t a) const {
    std::vector<bool> out(states(), false);
    for (std::size_t s = 0; s < states(); ++s) {
      if (!from[s]) continue;
      for (const auto& m : moves_[s * letters_ + a]) out[m.to] = true;
    }
    return out;
  }

  /// States from which reading `period` forever (letter indices) completes
  /// infinitely many V-blocks. Searches the product with period positions: a
  /// completing edge is repeatable iff both ends share a strong component.
  std::vector<bool> good_for_period(const std::vector<std::size_t>& period) const {
    const std::size_t len = period.size(), n = states(), nodes = n * len;
    auto node = [&](std::size_t s, std::size_t pos) { return s * len + pos; };
    std::vector<std::vector<Move>> adj(nodes);
    for (std::size_t pos = 0; pos < len; ++pos) {
      std::size_t np = pos + 1 == len ? 0 : pos + 1;
      for (std::size_t s = 0; s < n; ++s) {
        for (const auto& m : moves_[s * letters_ + period[pos]]) {
          adj[node(s, pos)].push_back({node(m.to, np), m.completes_block});
        }
      }
    }
    std::vector<std::size_t> component = strong_components(adj, [](const Move& m) { return m.to; });
    // Nodes with a repeatable completing edge, then everything that reaches them.
    std::vector<std::vector<std::size_t>> reverse(nodes);
    std::vector<bool> good(nodes, false);
    std::vector<std::size_t> stack;
    for (std::size_t x = 0; x < nodes; ++x) {
      for (const auto& m : adj[x]) {
        reverse[m.to].push_back(x);
        if (m.completes_block && component[m.to] == component[x] && !good[x]) {
          good[x] = true;
          stack.push_back(x);
        }
      }
    }
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (auto p : reverse[x]) {
        if (!good[p]) {
          good[p] = true;
          stack.push_back(p);
        }
      }
    }
    std::vector<bool> out(n, false);
    for (std::size_t s = 0; s < n; ++s) out[s] = good[node(s, 0)];
    return out;
  }

 private:
  std::size_t nu_;
  std::size_t letters_;
  std::vector<std::vector<Move>> moves_;
  std::vector<bool> start_;
};

bool intersects(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return true;
  }
  return false;
}

/// Letter indices of `word`, or nothing when it leaves the alphabet.
std::optional<std::vector<std::size_t>> letter_indices(std::string_view word, const std::string& alphabet) {
  std::vector<std::size_t> out;
  for (char c : word) {
    std::size_t a = alphabet.find(c);
    if (a == std::string::npos) return std::nullopt;
    out.push_back(a);
  }
  return out;
}

/// Membership of u v^w for every pair of words from a fixed list, one part
/// at a time: states reached after each u, states good for each v.
class LassoTable {
 public:
  LassoTable(const LassoLang& l, const std::vector<std::vector<std::size_t>>& words) {
    for (const auto& [pu, pv] : l.parts()) {
      PartAutomaton part(pu, pv);
      std::vector<std::vector<bool>> reach, good;
      for (const auto& w : words) {
        std::vector<bool> set = part.start();
        for (auto a : w) set = part.step(set, a);
        reach.push_back(std::move(set));
        good.push_back(w.empty() ? std::vector<bool>(part.states(), false) : part.good_for_period(w));
      }
      reach_.push_back(std::move(reach));
      good_.push_back(std::move(good));
    }
  }

  bool member(std::size_t u, std::size_t v) const {
    for (std::size_t p = 0; p < reach_.size(); ++p) {
      if (intersects(reach_[p][u], good_[p][v])) return true;
    }
    return false;
  }

 private:
  std::vector<std::vector<std::vector<bool>>> reach_, good_;
};

}  // namespace

bool lasso_member(std::string_view u, std::string_view v, const LassoLang& l) {
  if (v.empty()) throw std::invalid_argument("lasso_member: period must be nonempty");
  auto iu = letter_indices(u, l.alphabet()), iv = letter_indices(v, l.alphabet());
  if (!iu || !iv) return false;
  return LassoTable(l, {*iu, *iv}).member(0, 1);
}

BoundedVerdict lasso_equal_bounded(const LassoLang& x, const LassoLang& y, unsigned bound) {
  require_same(x.alphabet(), y.alphabet());
  if (bound < 1) throw std::invalid_argument("lasso_equal_bounded: bound must be at least 1");
  std::vector<std::string> words{""};
  for (std::size_t i = 0, layer_start = 0; i < bound; ++i) {
    std::size_t layer_end = words.size();
    for (std::size_t w = layer_start; w < layer_end; ++w) {
      for (char c : x.alphabet()) words.push_back(words[w] + c);
    }
    layer_start = layer_end;
  }
  std::vector<std::vector<std::size_t>> indices;
  for (const auto& w : words) indices.push_back(*letter_indices(w, x.alphabet()));
  LassoTable tx(x, indices), ty(y, indices);
  BoundedVerdict verdict;
  verdict.bound = bound;
  for (std::size_t u = 0; u < words.size(); ++u) {
    for (std::size_t v = 1; v < words.size(); ++v) {
      if (tx.member(u, v) != ty.member(u, v)) {
        verdict.equal = false;
        verdict.counterexample = std::make_pair(words[u], words[v]);
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace kleene
