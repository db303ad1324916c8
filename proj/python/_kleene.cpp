// Python bindings. Structured values cross the boundary as JSON text; the
// kleene_energy package turns them into dicts.

#include "kleene/json_io.hpp"
#include "kleene/laws.hpp"
#include "kleene/wordmodel.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kleene;

namespace {

EnergyFunction function_of(const std::string& text) { return energy_function_from_json(parse_json_text(text)); }

std::string query(const std::string& automaton, const std::string& energy, bool buchi_query, bool verify) {
  EnergyAutomaton a = automaton_from_json(parse_json_text(automaton));
  ExtValue x = parse_ext_value(energy);
  QueryResult r = buchi_query ? buchi(a, x) : reachable(a, x);
  nlohmann::json out = to_json(r);
  if (verify) {
    QueryResult check = buchi_query ? oracle_buchi(a, x) : oracle_reach(a, x);
    out["oracle"] = to_json(check);
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_kleene, m) {
  m.doc() = "Energy functions, matrix star and omega, and the law suite";

  auto value_error = py::handle(PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", value_error);
  py::register_exception<ValidationError>(m, "ValidationError", value_error);
  py::register_exception<UnknownIdentity>(m, "UnknownIdentity", value_error);
  py::register_exception<RegexSyntaxError>(m, "RegexSyntaxError", value_error);
  py::register_exception<EpsilonInOmegaBase>(m, "EpsilonInOmegaBase", value_error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", py::handle(PyExc_RuntimeError));

  m.def("normalize_energy", [](const std::string& s) { return to_string(parse_ext_value(s)); },
        "Canonical string form of an energy such as '3/2', 'bot' or 'top'.");
  m.def("canonical", [](const std::string& f) { return to_json(function_of(f)).dump(); });
  m.def("eval", [](const std::string& f, const std::string& x) { return to_string(function_of(f)(parse_ext_value(x))); });
  m.def("star", [](const std::string& f) { return to_json(star(function_of(f))).dump(); });
  m.def("omega", [](const std::string& f) { return to_json(omega(function_of(f))).dump(); });
  m.def("compose", [](const std::string& f, const std::string& g) {
    return to_json(compose(function_of(f), function_of(g))).dump();
  });
  m.def("join", [](const std::string& f, const std::string& g) {
    return to_json(join(function_of(f), function_of(g))).dump();
  });
  m.def("reach", [](const std::string& a, const std::string& x, bool verify) { return query(a, x, false, verify); },
        py::arg("automaton"), py::arg("energy"), py::arg("verify") = false);
  m.def("buchi", [](const std::string& a, const std::string& x, bool verify) { return query(a, x, true, verify); },
        py::arg("automaton"), py::arg("energy"), py::arg("verify") = false);

  m.def(
      "laws",
      [](std::uint64_t seed, std::size_t cases, const std::string& instance, unsigned bound) {
        SuiteOptions options;
        options.seed = seed;
        options.cases = cases;
        options.bound = bound;
        std::vector<LawReport> reports;
        if (instance == "energy") {
          reports = run_energy_suite(options);
        } else if (instance == "word") {
          reports = run_word_suite(options);
        } else {
          throw std::invalid_argument("instance must be energy or word");
        }
        std::vector<std::string> out;
        for (const auto& r : reports) out.push_back(to_json(r).dump());
        return out;
      },
      py::arg("seed") = 1, py::arg("cases") = 50, py::arg("instance") = "energy", py::arg("bound") = 6);
  m.def(
      "wordcheck",
      [](const std::string& identity, const std::string& alphabet, unsigned bound, std::size_t cases,
         std::uint64_t seed) {
        SuiteOptions options;
        options.alphabet = alphabet;
        options.bound = bound;
        options.cases = cases;
        options.seed = seed;
        return to_json(run_word_identity(identity, options)).dump();
      },
      py::arg("identity"), py::arg("alphabet") = "ab", py::arg("bound") = 6, py::arg("cases") = 20,
      py::arg("seed") = 1);
  m.def("lang_equal", [](const std::string& alphabet, const std::string& x, const std::string& y) {
    return lang_equal(RegularLang::parse(alphabet, x), RegularLang::parse(alphabet, y));
  });
}
