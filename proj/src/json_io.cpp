#include "kleene/json_io.hpp"

#include <map>
#include <utility>

namespace kleene {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string such as \"3/2\"");
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

bool bool_field(const json& j, const char* key, const std::string& where, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ParseError(where + "." + key + ": expected true or false");
  return it->get<bool>();
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const ExtValue& x) { return to_string(x); }

json to_json(const EnergyFunction& f) {
  RawEnergyFunction raw = f.to_raw();
  if (!raw.bottom_boundary) return json{{"bottom", {{"boundary", "inf"}}}};
  json pieces = json::array();
  for (const auto& p : raw.pieces) {
    pieces.push_back(
        {{"start", format_rational(p.start)}, {"intercept", format_rational(p.intercept)}, {"slope", format_rational(p.slope)}});
  }
  json top = nullptr;
  if (raw.top_boundary) {
    top = {{"boundary", format_rational(*raw.top_boundary)}, {"top_at_boundary", raw.top_at_boundary}};
  }
  return json{{"bottom", {{"boundary", format_rational(*raw.bottom_boundary)}, {"bottom_at_boundary", raw.bottom_at_boundary}}},
              {"pieces", std::move(pieces)},
              {"top", std::move(top)}};
}

json to_json(const ThresholdPredicate& v) {
  if (v.is_never()) return json{{"tag", "never"}};
  return json{{"tag", "from"}, {"threshold", format_rational(v.threshold())}, {"inclusive", v.inclusive()}};
}

json to_json(const EnergyAutomaton& a) {
  json states = a.state_names();
  json initial = json::array(), accepting = json::array(), edges = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.initial()[i]) initial.push_back(a.state_names()[i]);
    if (a.accepting()[i]) accepting.push_back(a.state_names()[i]);
    for (std::size_t j = 0; j < a.size(); ++j) {
      const EnergyFunction& f = a.transitions()(i, j);
      if (!f.is_bottom()) edges.push_back({{"from", a.state_names()[i]}, {"to", a.state_names()[j]}, {"fn", to_json(f)}});
    }
  }
  return json{{"states", std::move(states)}, {"initial", std::move(initial)}, {"accepting", std::move(accepting)},
              {"edges", std::move(edges)}};
}

json to_json(const QueryResult& r) {
  json out{{"answer", r.answer}};
  std::visit([&](const auto& v) { out["value"] = to_json(v); }, r.value);
  if (r.witness) {
    out["witness"] = {{"path", r.witness->path}};
    if (!r.witness->cycle.empty()) out["witness"]["cycle"] = r.witness->cycle;
  }
  return out;
}

ExtValue ext_value_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected \"bot\", \"top\" or a rational string");
  try {
    return parse_ext_value(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

EnergyFunction energy_function_from_json(const json& j, const std::string& where) {
  const json& bottom = member(j, "bottom", where);
  const json& boundary = member(bottom, "boundary", where + ".bottom");
  RawEnergyFunction raw;
  if (boundary.is_string() && boundary.get<std::string>() == "inf") {
    auto pieces = j.find("pieces");
    auto top = j.find("top");
    if ((pieces != j.end() && !(pieces->is_array() && pieces->empty())) || (top != j.end() && !top->is_null())) {
      throw ParseError(where + ": a constant-bottom function has no pieces and no top region");
    }
    return EnergyFunction::validate(raw);
  }
  raw.bottom_boundary = rational_field(boundary, where + ".bottom.boundary");
  raw.bottom_at_boundary = bool_field(bottom, "bottom_at_boundary", where + ".bottom", false);
  const json& pieces = member(j, "pieces", where);
  if (!pieces.is_array()) throw ParseError(where + ".pieces: expected an array");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::string at = where + ".pieces[" + std::to_string(i) + "]";
    raw.pieces.push_back({rational_field(member(pieces[i], "start", at), at + ".start"),
                          rational_field(member(pieces[i], "intercept", at), at + ".intercept"),
                          rational_field(member(pieces[i], "slope", at), at + ".slope")});
  }
  auto top = j.find("top");
  if (top != j.end() && !top->is_null()) {
    raw.top_boundary = rational_field(member(*top, "boundary", where + ".top"), where + ".top.boundary");
    raw.top_at_boundary = bool_field(*top, "top_at_boundary", where + ".top", false);
  }
  return EnergyFunction::validate(raw);
}

ThresholdPredicate threshold_from_json(const json& j, const std::string& where) {
  std::string tag = string_of(member(j, "tag", where), where + ".tag");
  if (tag == "never") return ThresholdPredicate::never();
  if (tag != "from") throw ParseError(where + ".tag: expected \"never\" or \"from\"");
  Rational t = rational_field(member(j, "threshold", where), where + ".threshold");
  const json& inclusive = member(j, "inclusive", where);
  if (!inclusive.is_boolean()) throw ParseError(where + ".inclusive: expected true or false");
  if (t < 0) throw ParseError(where + ".threshold: must be nonnegative");
  return ThresholdPredicate::from(t, inclusive.get<bool>());
}

EnergyAutomaton automaton_from_json(const json& j) {
  const json& states = member(j, "states", "automaton");
  if (!states.is_array() || states.empty()) throw ParseError("states: expected a nonempty array");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::string name = string_of(states[i], "states[" + std::to_string(i) + "]");
    if (!index.emplace(name, i).second) throw ParseError("states: duplicate state '" + name + "'");
    names.push_back(std::move(name));
  }
  auto lookup = [&](const json& entry, const std::string& where) {
    if (!entry.is_string()) throw ParseError(where + ": expected a state name (weighted entries are not supported)");
    auto it = index.find(entry.get<std::string>());
    if (it == index.end()) throw ParseError(where + ": unknown state '" + entry.get<std::string>() + "'");
    return it->second;
  };
  auto subset = [&](const char* key) {
    std::vector<bool> flags(names.size(), false);
    const json& list = member(j, key, "automaton");
    if (!list.is_array()) throw ParseError(std::string(key) + ": expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) flags[lookup(list[i], std::string(key) + "[" + std::to_string(i) + "]")] = true;
    return flags;
  };
  std::vector<bool> initial = subset("initial");
  std::vector<bool> accepting = subset("accepting");
  EnergyMatrix m(names.size(), names.size(), EnergyFunction::bottom());
  auto edges = j.find("edges");
  if (edges != j.end()) {
    if (!edges->is_array()) throw ParseError("edges: expected an array");
    for (std::size_t e = 0; e < edges->size(); ++e) {
      std::string at = "edges[" + std::to_string(e) + "]";
      const json& edge = (*edges)[e];
      std::size_t from = lookup(member(edge, "from", at), at + ".from");
      std::size_t to = lookup(member(edge, "to", at), at + ".to");
      EnergyFunction fn;
      try {
        fn = energy_function_from_json(member(edge, "fn", at), at + ".fn");
      } catch (const ValidationError& e) {
        throw ValidationError(e.kind(), at + ".fn: " + e.what());
      }
      m(from, to) = join(m(from, to), fn);
    }
  }
  return EnergyAutomaton(std::move(names), std::move(initial), std::move(accepting), std::move(m));
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace kleene
