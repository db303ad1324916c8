// Command-line front end for the energy Kleene omega-algebra library.

#include "kleene/json_io.hpp"
#include "kleene/laws.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace kleene;
using nlohmann::json;

enum Exit : int { Yes = 0, No = 1, Error = 2 };

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExtValue energy_arg(const std::string& text) {
  try {
    return parse_ext_value(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("--energy: ") + e.what());
  }
}

std::string path_text(const std::vector<std::string>& states) {
  std::string out;
  for (const auto& s : states) out += (out.empty() ? "" : " -> ") + s;
  return out;
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json out{{"path", w->path}};
  if (!w->cycle.empty()) out["cycle"] = w->cycle;
  return out;
}

struct QueryOptions {
  std::string file;
  std::string energy = "0";
  bool verify = false;
  bool as_json = false;
};

int run_query(const QueryOptions& o, bool buchi_query) {
  EnergyAutomaton a = automaton_from_json(parse_json_text(read_file(o.file)));
  ExtValue x = energy_arg(o.energy);
  QueryResult r = buchi_query ? buchi(a, x) : reachable(a, x);
  json out{{"query", buchi_query ? "buchi" : "reach"}, {"energy", to_string(x)}, {"answer", r.answer}};
  std::visit([&](const auto& v) { out["value"] = to_json(v); }, r.value);
  std::optional<QueryResult> check;
  if (o.verify) {
    check = buchi_query ? oracle_buchi(a, x) : oracle_reach(a, x);
    out["oracle"] = {{"answer", check->answer}, {"witness", witness_json(check->witness)}};
  }
  if (o.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (buchi_query ? "buchi: " : "reachable: ") << (r.answer ? "yes" : "no") << "\n";
    std::cout << "value: ";
    std::visit([](const auto& v) { std::cout << to_string(v); }, r.value);
    std::cout << "\n";
    if (check) {
      std::cout << "oracle: " << (check->answer ? "yes" : "no") << "\n";
      if (check->witness) {
        std::cout << "witness: " << path_text(check->witness->path);
        if (!check->witness->cycle.empty()) std::cout << " then (" << path_text(check->witness->cycle) << ")^w";
        std::cout << "\n";
      }
    }
  }
  if (check && check->answer != r.answer) {
    throw Failure("verification failed: algebraic answer " + std::string(r.answer ? "yes" : "no") + ", oracle " +
                  (check->answer ? "yes" : "no"));
  }
  return r.answer ? Yes : No;
}

EnergyFunction load_function(const std::string& file) {
  return energy_function_from_json(parse_json_text(read_file(file)));
}

int run_laws(const SuiteOptions& options, const std::string& instance, const std::string& mutant) {
  EnergyAlgebra alg;
  if (!mutant.empty()) {
    if (mutant != "star-boundary") throw ParseError("unknown mutant '" + mutant + "'");
    alg.star_fn = &mutants::star_excluding_fixed_points;
  }
  std::vector<LawReport> reports;
  if (instance == "energy") {
    reports = run_energy_suite(options, alg);
  } else {
    reports = run_word_suite(options);
  }
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << to_json(r).dump() << "\n";
    if (r.verdict() != Verdict::Pass) {
      ok = false;
      std::cerr << r.law << ": " << to_string(r.verdict()) << " (" << r.failure_count << " failures, " << r.unknown
                << " unknown)\n";
    }
  }
  return ok ? Yes : No;
}

int run_wordcheck(const std::string& identity, const SuiteOptions& options, bool as_json) {
  LawReport r = run_word_identity(identity, options);
  if (as_json) {
    std::cout << to_json(r).dump() << "\n";
  } else {
    std::cout << identity << ": ";
    if (r.verdict() == Verdict::Pass) {
      std::cout << (r.bound > 0 ? "Equal-up-to-" + std::to_string(r.bound) : std::string("Pass exact"));
    } else {
      std::cout << to_string(r.verdict());
    }
    std::cout << " (" << r.cases << " cases, alphabet " << options.alphabet << ")\n";
    for (const auto& f : r.failures) {
      std::cout << "  counterexample " << f.inputs.dump() << ": " << f.sample << ": " << f.lhs << " vs " << f.rhs << "\n";
    }
  }
  return r.verdict() == Verdict::Pass ? Yes : No;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy reachability and Buchi queries via matrix star and omega"};
  app.require_subcommand(1);

  QueryOptions reach_opts, buchi_opts;
  auto add_query = [&](const char* name, const char* about, QueryOptions& o) {
    auto* cmd = app.add_subcommand(name, about);
    cmd->add_option("file", o.file, "automaton JSON file, or - for stdin")->required();
    cmd->add_option("--energy,-e", o.energy, "initial energy: bot, top or a rational such as 3/2")->capture_default_str();
    cmd->add_flag("--verify", o.verify, "cross-check against the brute-force oracle");
    cmd->add_flag("--json", o.as_json, "machine-readable output");
    return cmd;
  };
  auto* reach_cmd = add_query("reach", "is an accepting state reachable alive", reach_opts);
  auto* buchi_cmd = add_query("buchi", "is there a live run visiting accepting states infinitely often", buchi_opts);

  std::string fn_file;
  bool describe_fn = false;
  auto* star_cmd = app.add_subcommand("star", "star of an energy function");
  star_cmd->add_option("file", fn_file, "energy function JSON file")->required();
  star_cmd->add_flag("--describe", describe_fn, "human-readable breakpoint table instead of JSON");
  auto* omega_cmd = app.add_subcommand("omega", "omega power of an energy function");
  omega_cmd->add_option("file", fn_file, "energy function JSON file")->required();

  std::string at = "0";
  bool eval_json = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an energy function");
  eval_cmd->add_option("file", fn_file, "energy function JSON file")->required();
  eval_cmd->add_option("--at", at, "energy to evaluate at")->capture_default_str();
  eval_cmd->add_flag("--json", eval_json, "machine-readable output");

  SuiteOptions laws_opts;
  std::string instance = "energy", mutant;
  auto* laws_cmd = app.add_subcommand("laws", "run the law suite, one JSON report per line");
  laws_cmd->add_option("--seed", laws_opts.seed, "random seed")->capture_default_str();
  laws_cmd->add_option("--cases", laws_opts.cases, "cases per law")->capture_default_str();
  laws_cmd->add_option("--instance", instance, "energy or word")
      ->check(CLI::IsMember({"energy", "word"}))
      ->capture_default_str();
  laws_cmd->add_option("--bound", laws_opts.bound, "lasso word bound for the word instance")->capture_default_str();
  laws_cmd->add_option("--inject-mutant", mutant)->group("");

  SuiteOptions word_opts;
  word_opts.cases = 20;
  std::string identity;
  bool word_json = false;
  auto* word_cmd = app.add_subcommand("wordcheck", "check one identity on regular languages");
  word_cmd->add_option("--identity", identity, "semiring, conway-star, group-c2, omega-sum, omega-product, omega-power")
      ->required();
  word_cmd->add_option("--alphabet", word_opts.alphabet, "letters a-z")->capture_default_str();
  word_cmd->add_option("--bound", word_opts.bound, "lasso word bound")->capture_default_str();
  word_cmd->add_option("--cases", word_opts.cases, "random cases")->capture_default_str();
  word_cmd->add_option("--seed", word_opts.seed, "random seed")->capture_default_str();
  word_cmd->add_flag("--json", word_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Error;
  }

  try {
    if (*reach_cmd) return run_query(reach_opts, false);
    if (*buchi_cmd) return run_query(buchi_opts, true);
    if (*star_cmd) {
      EnergyFunction s = star(load_function(fn_file));
      std::cout << (describe_fn ? describe(s) : to_json(s).dump(2)) << "\n";
      return Yes;
    }
    if (*omega_cmd) {
      std::cout << to_json(omega(load_function(fn_file))).dump(2) << "\n";
      return Yes;
    }
    if (*eval_cmd) {
      ExtValue x = energy_arg(at);
      ExtValue y = load_function(fn_file)(x);
      if (eval_json) {
        std::cout << json{{"at", to_string(x)}, {"value", to_string(y)}}.dump() << "\n";
      } else {
        std::cout << to_string(y) << "\n";
      }
      return Yes;
    }
    if (*laws_cmd) return run_laws(laws_opts, instance, mutant);
    if (*word_cmd) return run_wordcheck(identity, word_opts, word_json);
  } catch (const UnknownIdentity& e) {
    std::cerr << "error: UnknownIdentity: " << e.what() << "\n";
    return Error;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Error;
  }
  return Error;
}
