#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "torspec/verify.hpp"

namespace torspec {

using Json = nlohmann::ordered_json;

inline Json to_json(const WeightMultiset& ms) {
  Json entries = Json::array();
  for (const auto& [w, m] : ms.sorted_entries()) entries.push_back(Json::array({format_coords(w), m}));
  return Json{{"highest", format_weight(ms.highest)},
              {"dim", ms.dim},
              {"entries", std::move(entries)},
              {"banner", kValidityBanner}};
}

inline Json to_json(const Spectrum& sp) {
  const SpectrumClass c = classify(sp);
  Json entries = Json::array();
  for (const auto& [v, m] : sp.entries) entries.push_back(Json::array({format_value(sp, v), m}));
  Json j{{"highest", sp.highest ? format_weight(*sp.highest) : ""},
         {"element", sp.source_label},
         {"dim", sp.total},
         {"entries", std::move(entries)},
         {"classification", to_string(c.kind)},
         {"heavy_value", c.heavy_value ? Json(format_value(sp, *c.heavy_value)) : Json(nullptr)},
         {"max_multiplicity", c.max_multiplicity},
         {"banner", kValidityBanner}};
  return j;
}

inline Json to_json(const TorusElement& s) {
  Json values = Json::array();
  for (const auto& v : s.assignments) values.push_back(Json{{"torsion", to_string(v.torsion)}, {"free", v.free}});
  Json j{{"omega_values", std::move(values)}, {"generators", s.generator_names}};
  if (s.free_denominator != 1) j["free_denominator"] = s.free_denominator;
  return j;
}

inline Json level_table_json(const RootDatum& d, const std::vector<LevelAssignment>& levels) {
  Json by_level = Json::object();
  for (const auto& la : levels) by_level[std::to_string(la.level)].push_back(format_coords(la.weight));
  return Json{{"family", std::string(1, family_char(d.family))},
              {"rank", d.rank},
              {"levels", std::move(by_level)},
              {"banner", kValidityBanner}};
}

inline Json to_json(const VerificationReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back(Json{{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"status", to_string(c.status)}});
  return Json{{"check_id", r.check_id},
              {"status", to_string(r.status)},
              {"notes", r.notes},
              {"cases", std::move(cases)},
              {"elapsed_seconds", r.elapsed_seconds},
              {"banner", kValidityBanner}};
}

namespace detail {

inline Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  if (!j.is_string()) throw InvalidInput(where + ": torsion must be a string like \"1/2\" or an integer");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const Int v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(v);
    }
    const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    const Int n = std::stoll(ns, &used);
    if (used != ns.size()) throw std::invalid_argument(s);
    const Int den = std::stoll(ds, &used);
    if (used != ds.size()) throw std::invalid_argument(s);
    if (den == 0) throw InvalidInput(where + ": zero denominator in \"" + s + "\"");
    return Rational(n, den);
  } catch (const std::logic_error&) {
    throw InvalidInput(where + ": malformed torsion \"" + s + "\"");
  }
}

}  // namespace detail

/// Reads {"omega_values":[{"torsion":"1/2","free":[1,0]},...]} with optional
/// "generators" names and "free_denominator".
inline TorusElement element_from_json(const RootDatum& d, const Json& j, std::string label = {}) {
  if (!j.is_object() || !j.contains("omega_values") || !j["omega_values"].is_array())
    throw InvalidInput("element JSON needs an \"omega_values\" array");
  const Json& vals = j["omega_values"];
  std::vector<ValueGroupElement> assignments;
  std::size_t k = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const std::string where = "omega_values[" + std::to_string(i) + "]";
    const Json& v = vals[i];
    if (!v.is_object()) throw InvalidInput(where + " must be an object");
    ValueGroupElement x;
    x.torsion = mod_one(v.contains("torsion") ? detail::parse_rational(v["torsion"], where) : Rational(0));
    if (v.contains("free")) {
      if (!v["free"].is_array()) throw InvalidInput(where + ".free must be an integer array");
      for (const auto& e : v["free"]) {
        if (!e.is_number_integer()) throw InvalidInput(where + ".free must be an integer array");
        x.free.push_back(e.get<Int>());
      }
    }
    if (i == 0) k = x.free.size();
    else if (x.free.size() != k) throw InvalidInput(where + ".free has " + std::to_string(x.free.size()) +
                                                    " entries, expected " + std::to_string(k));
    assignments.push_back(std::move(x));
  }
  TorusElement s = torus_element(d, std::move(assignments), label.empty() ? j.dump() : std::move(label));
  if (j.contains("generators")) {
    const auto names = j["generators"].get<std::vector<std::string>>();
    for (std::size_t i = 0; i < names.size() && i < s.generator_names.size(); ++i) s.generator_names[i] = names[i];
  }
  if (j.contains("free_denominator")) {
    const Int den = j["free_denominator"].get<Int>();
    if (den < 1) throw InvalidInput("free_denominator must be positive");
    s.free_denominator = den;
  }
  return s;
}

}  // namespace torspec
