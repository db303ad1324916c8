#pragma once

#include "kleene/energy_algebra.hpp"
#include "kleene/random.hpp"
#include "kleene/wordmodel.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleene {

class InvalidRegrouping : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidGroupTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Verdict : std::uint8_t { Pass, Fail, Unknown };

const char* to_string(Verdict v);

struct LawFailure {
  nlohmann::json inputs;
  std::string lhs;
  std::string rhs;
  std::string sample;
};

struct LawReport {
  std::string law;
  std::string instance;
  std::size_t cases = 0;
  /// The first few failures; failure_count has the total.
  std::vector<LawFailure> failures;
  std::size_t failure_count = 0;
  /// Samples where the right-hand side could not be decided.
  std::size_t unknown = 0;
  std::uint64_t seed = 0;
  /// Word-length bound for bounded comparisons, 0 when exact.
  unsigned bound = 0;

  Verdict verdict() const;
  void fail(LawFailure failure);
  /// Folds another report for the same law into this one.
  void merge(const LawReport& other);
};

nlohmann::json to_json(const LawReport& r);

/// Lasso-shaped sequence x_0 x_1 ... = prefix cycle cycle ...
struct LassoSeq {
  std::vector<EnergyFunction> prefix;
  std::vector<EnergyFunction> cycle;
};

/// Regrouping of a lasso sequence: first blocks of the listed sizes, then
/// blocks of `period` elements forever.
struct Regrouping {
  std::vector<std::size_t> head;
  std::size_t period = 1;
};

/// Regroups `seq` into the lasso of block products. Throws InvalidRegrouping
/// for empty blocks or an empty cycle.
LassoSeq regroup(const LassoSeq& seq, const Regrouping& r);

// Energy instance. Every checker evaluates stars through `alg`, so a broken
// star plugged into the algebra shows up as failures.

/// f g* h against the partial joins of f g^n h at each sample.
LawReport check_ax0(const EnergyAlgebra& alg, const EnergyFunction& f, const EnergyFunction& g, const EnergyFunction& h,
                    const std::vector<ExtValue>& samples, unsigned budget = 64);

/// Infinite product of the lasso against its head-peeled and regrouped forms.
LawReport check_ax1_ax2(const LassoSeq& seq, const Regrouping& regrouping);

/// prod x_n (y v z) against the supremum over all choice sequences.
LawReport check_ax3(const LassoSeq& seq, const EnergyFunction& y, const EnergyFunction& z,
                    const std::vector<ExtValue>& samples);

/// prod f* y_n against the supremum over all exponent sequences.
LawReport check_ax4(const EnergyAlgebra& alg, const EnergyFunction& f, const LassoSeq& ys,
                    const std::vector<ExtValue>& samples);

/// Sum and product star identities.
LawReport check_conway_star(const EnergyAlgebra& alg, const EnergyFunction& f, const EnergyFunction& g);
/// Sum and product omega identities.
LawReport check_conway_omega(const EnergyAlgebra& alg, const EnergyFunction& f, const EnergyFunction& g);

/// Multiplication table of a finite group on 0..n-1 with identity 0.
using GroupTable = std::vector<std::vector<std::size_t>>;

GroupTable cyclic_group(std::size_t n);
GroupTable klein_four_group();
/// Throws InvalidGroupTable unless `table` is a group with identity 0.
void validate_group(const GroupTable& table);

/// Row join of M_G* against (x_1 v ... v x_n)*, and the first entry of M_G^w
/// against (x_1 v ... v x_n)^w.
LawReport check_group_identity(const EnergyAlgebra& alg, const GroupTable& table,
                               const std::vector<EnergyFunction>& elements, const std::string& group_name);

/// w = f^w v f* v is a fixed point of z -> f z v v and lies above every
/// post-fixed point among `candidates`.
LawReport check_bi_inductive(const EnergyAlgebra& alg, const EnergyFunction& f, const ThresholdPredicate& v,
                             const std::vector<ThresholdPredicate>& candidates, const std::vector<ExtValue>& samples);

/// Idempotent semiring laws up to canonical equality.
LawReport check_semiring(const EnergyAlgebra& alg, const EnergyFunction& f, const EnergyFunction& g,
                         const EnergyFunction& h);

// Word instance.

LawReport check_word_semiring(const std::string& alphabet, const std::string& x, const std::string& y,
                              const std::string& z);
LawReport check_word_conway_star(const std::string& alphabet, const std::string& x, const std::string& y);
/// (x v y)^w = (x* y)* x^w v (x* y)^w, up to `bound`; x and y lose the empty word first.
LawReport check_word_omega_sum(const std::string& alphabet, const std::string& x, const std::string& y, unsigned bound);
/// (x y)^w = x (y x)^w, up to `bound`; x and y lose the empty word first.
LawReport check_word_omega_product(const std::string& alphabet, const std::string& x, const std::string& y,
                                   unsigned bound);
/// x^w = (x x)^w, up to `bound`.
LawReport check_word_omega_power(const std::string& alphabet, const std::string& x, unsigned bound);
LawReport check_word_group_identity(const std::string& alphabet, const GroupTable& table,
                                    const std::vector<std::string>& elements, const std::string& group_name);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 50;
  unsigned bound = 6;
  std::string alphabet = "ab";
};

/// One report per law, each over `cases` random instances.
std::vector<LawReport> run_energy_suite(const SuiteOptions& options, const EnergyAlgebra& alg = {});
std::vector<LawReport> run_word_suite(const SuiteOptions& options);

/// semiring, conway-star, group-c2, omega-sum, omega-product, omega-power.
const std::vector<std::string>& word_identity_names();
/// One word-instance law by name; throws UnknownIdentity for other names.
LawReport run_word_identity(const std::string& name, const SuiteOptions& options);

}  // namespace kleene
