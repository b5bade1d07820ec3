#pragma once

// Diagram files (JSON) and JSON renderings of results.
//
//   {
//     "components": [ { "name": str, "tb": int, "rot": int, "coeff": 1|-1 }, ... ],
//     "linking": [[int, ...], ...],   // symmetric, diagonal ignored
//     "distinguished": { "tb0": int, "rot0": int, "lk": [int, ...] },
//     "groups": [[int, ...], ...]     // optional, 0-based
//   }

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "legendrian/diagram.hpp"
#include "legendrian/families.hpp"
#include "legendrian/invariants.hpp"
#include "legendrian/seifert.hpp"

namespace legendrian::io {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void parse_error(const std::string& message) {
  throw Error(ErrorKind::ParseError, message);
}

inline Int get_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) parse_error(where + ": missing \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) parse_error(where + ": \"" + key + "\" must be an integer");
  return v.get<Int>();
}

inline std::vector<Int> get_int_array(const json& v, const std::string& where) {
  if (!v.is_array()) parse_error(where + " must be an array of integers");
  std::vector<Int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) parse_error(where + " must be an array of integers");
    out.push_back(e.get<Int>());
  }
  return out;
}

inline json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<Int>::max() && v >= std::numeric_limits<Int>::min()) return v.convert_to<Int>();
  return v.str();
}

inline json optional_int(const std::optional<Int>& v) { return v ? json(*v) : json("Unknown"); }

}  // namespace detail

inline SurgeryDiagram diagram_from_json(const json& j) {
  using detail::parse_error;
  if (!j.is_object()) parse_error("diagram must be a JSON object");
  SurgeryDiagram d;
  if (!j.contains("components") || !j["components"].is_array()) parse_error("missing \"components\" array");
  std::size_t index = 0;
  for (const auto& c : j["components"]) {
    const std::string where = "component " + std::to_string(index++);
    if (!c.is_object()) parse_error(where + " must be an object");
    SurgeryComponent comp;
    comp.name = c.contains("name") && c["name"].is_string() ? c["name"].get<std::string>() : "L" + std::to_string(index);
    comp.tb = detail::get_int(c, "tb", where);
    comp.rot = detail::get_int(c, "rot", where);
    Int coeff = detail::get_int(c, "coeff", where);
    if (coeff != 1 && coeff != -1) parse_error(where + ": coeff must be 1 or -1");
    comp.coeff = static_cast<int>(coeff);
    d.components.push_back(comp);
  }
  const std::size_t n = d.components.size();
  if (!j.contains("linking") || !j["linking"].is_array()) parse_error("missing \"linking\" matrix");
  const json& rows = j["linking"];
  if (rows.size() != n) parse_error("\"linking\" must have one row per component");
  d.offdiag = IntMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> row = detail::get_int_array(rows[i], "\"linking\" row " + std::to_string(i));
    if (row.size() != n) parse_error("\"linking\" must be square");
    for (std::size_t c = 0; c < n; ++c) d.offdiag(i, c) = i == c ? 0 : row[c];
  }
  if (!j.contains("distinguished") || !j["distinguished"].is_object()) parse_error("missing \"distinguished\" object");
  const json& L = j["distinguished"];
  d.knot.tb0 = detail::get_int(L, "tb0", "distinguished");
  d.knot.rot0 = detail::get_int(L, "rot0", "distinguished");
  if (!L.contains("lk")) parse_error("distinguished: missing \"lk\"");
  d.knot.lk = detail::get_int_array(L["lk"], "distinguished.lk");
  if (j.contains("groups")) {
    if (!j["groups"].is_array()) parse_error("\"groups\" must be an array of arrays");
    DeflationGroups groups;
    for (const auto& g : j["groups"]) {
      std::vector<Int> members = detail::get_int_array(g, "group");
      std::vector<std::size_t> idx;
      for (Int v : members) {
        if (v < 0) parse_error("group indices must be non-negative");
        idx.push_back(static_cast<std::size_t>(v));
      }
      groups.push_back(idx);
    }
    d.groups = groups;
  }
  validate(d);
  if (d.groups) validate_groups(d, *d.groups);
  return d;
}

inline SurgeryDiagram parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

inline SurgeryDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_diagram(buffer.str());
}

inline json to_json(const SurgeryDiagram& d) {
  json j;
  j["components"] = json::array();
  for (const auto& c : d.components) j["components"].push_back({{"name", c.name}, {"tb", c.tb}, {"rot", c.rot}, {"coeff", c.coeff}});
  j["linking"] = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < d.size(); ++c) row.push_back(i == c ? json(0) : detail::big_to_json(d.offdiag(i, c)));
    j["linking"].push_back(row);
  }
  j["distinguished"] = {{"tb0", d.knot.tb0}, {"rot0", d.knot.rot0}, {"lk", d.knot.lk}};
  if (d.groups) j["groups"] = *d.groups;
  return j;
}

inline void save_diagram(const SurgeryDiagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << to_json(d).dump(2) << '\n';
}

inline json to_json(const InvariantReport& r) {
  return {{"tb", r.tb},
          {"rot_plus", r.rot_plus},
          {"rot_minus", r.rot_minus},
          {"d3", format_rational(r.d3)},
          {"detM", detail::big_to_json(r.detM)},
          {"detM0", detail::big_to_json(r.detM0)},
          {"sigma", r.sigma},
          {"chi", r.chi},
          {"c_squared", format_rational(r.c_squared)},
          {"q_plus", r.q_plus},
          {"is_homology_sphere", r.is_homology_sphere}};
}

inline json to_json(const SmallSeifert& s) {
  return {{"e0", detail::big_to_json(s.e0)},
          {"r1", format_rational(s.r1)},
          {"r2", format_rational(s.r2)},
          {"r3", format_rational(s.r3)}};
}

inline json to_json(const TightCount& t) {
  json j{{"p", t.knot.p},
         {"q", t.knot.q},
         {"tb", t.tb},
         {"slope", t.slope ? json(format_rational(*t.slope)) : json("infinite")},
         {"case", std::string(to_string(t.kase))},
         {"total", detail::optional_int(t.total)},
         {"std_count", detail::optional_int(t.std_count)},
         {"exceptional_upper_bound", detail::optional_int(t.exceptional_upper_bound)}};
  if (t.reduction) j["reduction"] = to_json(*t.reduction);
  if (!t.reason.empty()) j["reason"] = t.reason;
  return j;
}

inline json to_json(const FamilyParams& p) {
  return {{"p", p.p}, {"n", p.n}, {"k", p.k}, {"l", p.l}, {"u", p.u}, {"v", p.v}, {"m", p.m},
          {"variant", p.variant ? std::string(1, p.variant) : std::string()}};
}

inline json to_json(const RealizationRecord& r) {
  return {{"family", std::string(to_string(r.family))},
          {"params", to_json(r.params)},
          {"orientation", r.orientation},
          {"tb", r.tb},
          {"rot", r.rot},
          {"d3", format_rational(r.d3)},
          {"source", std::string(to_string(r.source))}};
}

inline json to_json(const FamilyRow& row) {
  return {{"computed", to_json(row.computed)},
          {"expected", to_json(row.expected)},
          {"agrees", row.agrees},
          {"orientations_coincide", row.orientations_coincide}};
}

}  // namespace legendrian::io
