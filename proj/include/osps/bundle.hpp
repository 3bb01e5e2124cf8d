#pragma once

#include <fstream>
#include <map>

#include <json.hpp>

#include "osps/ortho.hpp"

namespace osps {

// On-disk description of an ortho state property system. Field layout:
// states, properties, bottom, top, order ({"pairs": ...} or
// {"derive_from_xi": true}), xi, optional ortho ({"pairs", "include_bottom_pairs"}).
struct StructureBundle {
  std::vector<std::string> states;
  std::vector<std::string> properties;
  std::string bottom;
  std::string top;
  bool derive_order_from_xi = false;
  std::vector<std::pair<std::string, std::string>> order_pairs;
  std::map<std::string, std::vector<std::string>> xi;
  std::vector<std::pair<std::string, std::string>> ortho_pairs;
  bool include_bottom_pairs = true;
};

namespace detail {

inline void parse_check(bool cond, const std::string& field, const std::string& msg) {
  if (!cond) fail("E-PARSE", field + ": " + msg);
}

inline std::vector<std::string> string_list(const nlohmann::json& j, const std::string& field) {
  parse_check(j.is_array(), field, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    parse_check(v.is_string(), field, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> pair_list(const nlohmann::json& j,
                                                                  const std::string& field) {
  parse_check(j.is_array(), field, "expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : j) {
    parse_check(v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string(), field,
                "expected [name, name] pairs");
    out.emplace_back(v[0].get<std::string>(), v[1].get<std::string>());
  }
  return out;
}

}  // namespace detail

inline StructureBundle parse_bundle(const nlohmann::json& doc) {
  using detail::parse_check;
  parse_check(doc.is_object(), "$", "expected a JSON object");
  for (const auto& key : {"states", "properties", "bottom", "top", "order", "xi"})
    parse_check(doc.contains(key), key, "missing required field");

  StructureBundle b;
  b.states = detail::string_list(doc["states"], "states");
  b.properties = detail::string_list(doc["properties"], "properties");
  parse_check(doc["bottom"].is_string(), "bottom", "expected a string");
  parse_check(doc["top"].is_string(), "top", "expected a string");
  b.bottom = doc["bottom"].get<std::string>();
  b.top = doc["top"].get<std::string>();

  const auto& order = doc["order"];
  parse_check(order.is_object(), "order", "expected an object");
  if (order.contains("derive_from_xi")) {
    parse_check(order["derive_from_xi"].is_boolean() && order["derive_from_xi"].get<bool>(),
                "order.derive_from_xi", "must be true when present");
    b.derive_order_from_xi = true;
  } else {
    parse_check(order.contains("pairs"), "order", "needs either pairs or derive_from_xi");
    b.order_pairs = detail::pair_list(order["pairs"], "order.pairs");
  }

  parse_check(doc["xi"].is_object(), "xi", "expected an object");
  for (const auto& [state, props] : doc["xi"].items())
    b.xi[state] = detail::string_list(props, "xi." + state);

  if (doc.contains("ortho")) {
    const auto& ortho = doc["ortho"];
    parse_check(ortho.is_object(), "ortho", "expected an object");
    if (ortho.contains("pairs")) b.ortho_pairs = detail::pair_list(ortho["pairs"], "ortho.pairs");
    if (ortho.contains("include_bottom_pairs")) {
      parse_check(ortho["include_bottom_pairs"].is_boolean(), "ortho.include_bottom_pairs",
                  "expected a boolean");
      b.include_bottom_pairs = ortho["include_bottom_pairs"].get<bool>();
    }
  }

  // Name resolution, reported with field paths.
  auto known_prop = [&](const std::string& n) {
    return std::find(b.properties.begin(), b.properties.end(), n) != b.properties.end();
  };
  auto known_state = [&](const std::string& n) {
    return std::find(b.states.begin(), b.states.end(), n) != b.states.end();
  };
  parse_check(known_prop(b.bottom), "bottom", "unknown property '" + b.bottom + "'");
  parse_check(known_prop(b.top), "top", "unknown property '" + b.top + "'");
  for (const auto& [a, c] : b.order_pairs) {
    parse_check(known_prop(a), "order.pairs", "unknown property '" + a + "'");
    parse_check(known_prop(c), "order.pairs", "unknown property '" + c + "'");
  }
  for (const auto& [state, props] : b.xi) {
    parse_check(known_state(state), "xi", "unknown state '" + state + "'");
    for (const auto& p : props)
      parse_check(known_prop(p), "xi." + state, "unknown property '" + p + "'");
  }
  for (const auto& s : b.states)
    parse_check(b.xi.count(s) != 0, "xi", "missing entry for state '" + s + "'");
  for (const auto& [a, c] : b.ortho_pairs) {
    parse_check(known_prop(a), "ortho.pairs", "unknown property '" + a + "'");
    parse_check(known_prop(c), "ortho.pairs", "unknown property '" + c + "'");
  }
  return b;
}

inline StructureBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("E-PARSE", "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail("E-PARSE", path + ": " + e.what());
  }
  return parse_bundle(doc);
}

// Resolves a bundle into an OrthoSPS. With derive_from_xi the order is the
// Cartan-image inclusion order; declared bottom/top must agree with the
// computed ones.
inline OrthoSPS bundle_to_osps(const StructureBundle& b) {
  std::vector<std::string> states = b.states;
  std::sort(states.begin(), states.end());

  std::vector<std::pair<std::string, std::string>> pairs = b.order_pairs;
  if (b.derive_order_from_xi) {
    std::map<std::string, std::vector<std::string>> extent;  // property -> states
    for (const auto& p : b.properties) extent[p] = {};
    for (const auto& [state, props] : b.xi)
      for (const auto& p : props) extent[p].push_back(state);
    for (auto& [p, ext] : extent) std::sort(ext.begin(), ext.end());
    for (const auto& a : b.properties)
      for (const auto& c : b.properties)
        if (a != c && std::includes(extent[c].begin(), extent[c].end(), extent[a].begin(),
                                    extent[a].end()))
          pairs.emplace_back(a, c);
  }
  CompleteLattice lat = CompleteLattice::build(b.properties, pairs);
  detail::parse_check(lat.name(lat.bottom()) == b.bottom, "bottom",
                      "declared bottom '" + b.bottom + "' is not the lattice bottom");
  detail::parse_check(lat.name(lat.top()) == b.top, "top",
                      "declared top '" + b.top + "' is not the lattice top");

  StatePropertySystem sps{states, std::move(lat), {}};
  sps.xi.assign(states.size(), 0);
  for (const auto& [state, props] : b.xi) {
    Mask m = 0;
    for (const auto& p : props) m |= bit(sps.lattice.index(p));
    sps.xi[static_cast<std::size_t>(sps.state(state))] = m;
  }

  std::vector<std::pair<int, int>> rel_pairs;
  for (const auto& [a, c] : b.ortho_pairs)
    rel_pairs.emplace_back(sps.lattice.index(a), sps.lattice.index(c));
  if (b.include_bottom_pairs)
    for (int a = 0; a < sps.lattice.size(); ++a) rel_pairs.emplace_back(sps.lattice.bottom(), a);
  PropertyOrthoRelation rel = PropertyOrthoRelation::symmetric(sps.lattice.size(), rel_pairs);
  return OrthoSPS{std::move(sps), std::move(rel)};
}

// Canonical serialization: sorted keys (nlohmann objects sort by key),
// sorted lists, LF line endings, no trailing whitespace.
inline nlohmann::json bundle_to_json(const StructureBundle& b) {
  nlohmann::json doc;
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  doc["states"] = sorted(b.states);
  doc["properties"] = sorted(b.properties);
  doc["bottom"] = b.bottom;
  doc["top"] = b.top;
  if (b.derive_order_from_xi) {
    doc["order"] = {{"derive_from_xi", true}};
  } else {
    auto pairs = b.order_pairs;
    std::sort(pairs.begin(), pairs.end());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, c] : pairs) arr.push_back({a, c});
    doc["order"] = {{"pairs", arr}};
  }
  nlohmann::json xi = nlohmann::json::object();
  for (const auto& [state, props] : b.xi) xi[state] = sorted(props);
  doc["xi"] = xi;
  {
    auto pairs = b.ortho_pairs;
    std::sort(pairs.begin(), pairs.end());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, c] : pairs) arr.push_back({a, c});
    doc["ortho"] = {{"include_bottom_pairs", b.include_bottom_pairs}, {"pairs", arr}};
  }
  return doc;
}

inline std::string canonical_dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

// ---- Bundled fixtures -----------------------------------------------------

// Six states over the ten-element property lattice, with the two nontrivial
// orthogonal pairs (7,5) and (4,6).
inline StructureBundle example_bundle() {
  StructureBundle b;
  b.states = {"p", "q", "r", "s", "t", "u"};
  b.properties = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"};
  b.bottom = "1";
  b.top = "10";
  b.derive_order_from_xi = true;
  b.xi = {{"p", {"3", "6", "7", "9", "10"}}, {"q", {"2", "4", "5", "8", "10"}},
          {"r", {"6", "9", "10"}},           {"s", {"5", "8", "10"}},
          {"t", {"7", "9", "10"}},           {"u", {"4", "8", "10"}}};
  b.ortho_pairs = {{"7", "5"}, {"4", "6"}};
  b.include_bottom_pairs = true;
  return b;
}

// Two-element chain; the trivial ortho relation is just the bottom pairs.
inline StructureBundle triv2_bundle() {
  StructureBundle b;
  b.states = {"p", "q"};
  b.properties = {"0", "1"};
  b.bottom = "0";
  b.top = "1";
  b.order_pairs = {{"0", "1"}};
  b.xi = {{"p", {"1"}}, {"q", {"1"}}};
  b.include_bottom_pairs = true;
  return b;
}

inline StructureBundle diamond_bundle() {
  StructureBundle b;
  b.states = {"p", "q"};
  b.properties = {"0", "a", "b", "1"};
  b.bottom = "0";
  b.top = "1";
  b.order_pairs = {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
  b.xi = {{"p", {"a", "1"}}, {"q", {"b", "1"}}};
  b.ortho_pairs = {{"a", "b"}};
  b.include_bottom_pairs = true;
  return b;
}

// Three-element chain with bottom-only orthogonality: AO1 fails, so the
// eigenclosure and the orthoclosure disagree.
inline StructureBundle chain3_bundle() {
  StructureBundle b;
  b.states = {"p", "q"};
  b.properties = {"0", "a", "1"};
  b.bottom = "0";
  b.top = "1";
  b.order_pairs = {{"0", "a"}, {"a", "1"}};
  b.xi = {{"p", {"a", "1"}}, {"q", {"1"}}};
  b.include_bottom_pairs = true;
  return b;
}

inline std::map<std::string, StructureBundle> bundled_fixtures() {
  return {{"example.ossp", example_bundle()},
          {"triv2.ossp", triv2_bundle()},
          {"diamond.ossp", diamond_bundle()},
          {"chain3.ossp", chain3_bundle()}};
}

}  // namespace osps
