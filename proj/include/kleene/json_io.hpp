#pragma once

#include "kleene/energy_automaton.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace kleene {

/// Malformed input document; the message names the offending field.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

nlohmann::json to_json(const ExtValue& x);
nlohmann::json to_json(const EnergyFunction& f);
nlohmann::json to_json(const ThresholdPredicate& v);
nlohmann::json to_json(const EnergyAutomaton& a);
nlohmann::json to_json(const QueryResult& r);

ExtValue ext_value_from_json(const nlohmann::json& j, const std::string& where = "value");
/// Throws ParseError for layout problems and ValidationError for functions
/// outside the energy class.
EnergyFunction energy_function_from_json(const nlohmann::json& j, const std::string& where = "fn");
ThresholdPredicate threshold_from_json(const nlohmann::json& j, const std::string& where = "predicate");
/// Parallel edges between the same pair of states are joined.
EnergyAutomaton automaton_from_json(const nlohmann::json& j);

/// Parses text, reporting syntax errors with line and column.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace kleene
