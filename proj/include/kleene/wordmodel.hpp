#pragma once

#include "kleene/matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kleene {

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RegexSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EpsilonInOmegaBase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A regular language over a small alphabet, held as an epsilon-free NFA.
class RegularLang {
 public:
  /// The empty language.
  explicit RegularLang(std::string alphabet = "ab");

  static RegularLang empty(const std::string& alphabet) { return RegularLang(alphabet); }
  static RegularLang epsilon(const std::string& alphabet);
  static RegularLang letter(const std::string& alphabet, char c);
  static RegularLang word(const std::string& alphabet, std::string_view w);

  /// Letters, '1' for the empty word, '0' for the empty set, '|', optional
  /// '.' for concatenation, postfix '*' and parentheses.
  static RegularLang parse(const std::string& alphabet, std::string_view regex);

  const std::string& alphabet() const { return alphabet_; }
  std::size_t states() const { return initial_.size(); }
  bool accepts(std::string_view w) const;
  bool accepts_epsilon() const;

  /// All words of length <= max_len, shortlex.
  std::vector<std::string> enumerate(std::size_t max_len) const;

  /// Drops states that are unreachable or cannot reach a final state.
  RegularLang trimmed() const;

  bool is_initial(std::size_t s) const { return initial_[s]; }
  bool is_final(std::size_t s) const { return final_[s]; }
  /// Successors of state s on the letter alphabet()[a].
  const std::vector<std::size_t>& successors(std::size_t s, std::size_t a) const { return delta_[s][a]; }

  /// Subset-construction view.
  const std::vector<bool>& start_set() const { return initial_; }
  std::vector<bool> step(const std::vector<bool>& set, std::size_t a) const;
  bool accepting(const std::vector<bool>& set) const;

  friend RegularLang lang_union(const RegularLang& x, const RegularLang& y);
  friend RegularLang lang_concat(const RegularLang& x, const RegularLang& y);
  friend RegularLang lang_star(const RegularLang& x);
  friend RegularLang without_epsilon(const RegularLang& x);

 private:
  std::size_t symbol(char c) const;
  std::size_t add_state();

  std::string alphabet_;
  // delta_[state][symbol] lists successor states.
  std::vector<std::vector<std::vector<std::size_t>>> delta_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
};

RegularLang lang_union(const RegularLang& x, const RegularLang& y);
RegularLang lang_concat(const RegularLang& x, const RegularLang& y);
RegularLang lang_star(const RegularLang& x);
RegularLang without_epsilon(const RegularLang& x);

/// Exact equality by a joint subset construction. Throws BudgetExceeded when
/// more than `max_pairs` subset pairs would be explored.
bool lang_equal(const RegularLang& x, const RegularLang& y, std::size_t max_pairs = 1 << 16);

/// Finite union of U_i V_i^w with the empty word excluded from every V_i.
class LassoLang {
 public:
  explicit LassoLang(std::string alphabet = "ab") : alphabet_(std::move(alphabet)) {}
  /// Throws EpsilonInOmegaBase if some V accepts the empty word.
  LassoLang(std::string alphabet, std::vector<std::pair<RegularLang, RegularLang>> parts);

  const std::string& alphabet() const { return alphabet_; }
  const std::vector<std::pair<RegularLang, RegularLang>>& parts() const { return parts_; }

 private:
  std::string alphabet_;
  std::vector<std::pair<RegularLang, RegularLang>> parts_;
};

/// ({1}, L); throws EpsilonInOmegaBase if L contains the empty word.
LassoLang omega_power(const RegularLang& l);
/// X W: prefixes every U-component with X.
LassoLang lasso_action(const RegularLang& x, const LassoLang& w);
LassoLang lasso_union(const LassoLang& v, const LassoLang& w);

/// Whether u v^w belongs to L. Throws std::invalid_argument if v is empty.
bool lasso_member(std::string_view u, std::string_view v, const LassoLang& l);

struct BoundedVerdict {
  bool equal = true;
  unsigned bound = 0;
  /// (u, v) with exactly one of the languages containing u v^w.
  std::optional<std::pair<std::string, std::string>> counterexample;
};

/// Compares membership of every u v^w with |u| <= bound and 1 <= |v| <= bound.
BoundedVerdict lasso_equal_bounded(const LassoLang& x, const LassoLang& y, unsigned bound);

/// Regular languages as a star algebra: union, concatenation, Kleene star.
struct WordAlgebra {
  using Element = RegularLang;

  std::string alphabet = "ab";

  Element zero() const { return RegularLang::empty(alphabet); }
  Element one() const { return RegularLang::epsilon(alphabet); }
  Element join(const Element& x, const Element& y) const { return lang_union(x, y); }
  Element multiply(const Element& x, const Element& y) const { return lang_concat(x, y); }
  Element star(const Element& x) const { return lang_star(x); }
  bool equal(const Element& x, const Element& y) const { return lang_equal(x, y); }
};

static_assert(StarAlgebra<WordAlgebra>);

}  // namespace kleene
