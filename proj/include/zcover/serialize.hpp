#pragma once

// Canonical JSON form of building data:
//
//   {
//     "schema_version": 1,
//     "n": 3,
//     "group_spec": {"rank": r, "torsion": [m1, ...]},
//     "points_c":  {label: GroupElement, ...},
//     "points_p1": [label, ...],
//     "L": {"100": SurfaceClass, ...},
//     "D": {"111": [{"kind": "F", "label": "F_1"}, ...], ...}
//   }
//
// GroupElement:  {"rank": r, "torsion": [...], "free": [...], "tors": [...]}
// SurfaceClass:  {"a": int, "degree": int, "pic0": GroupElement}

#include <string>

#include <nlohmann/json.hpp>

#include "zcover/cover.hpp"

namespace zcover {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

inline json to_json(const GroupSpec& g) { return {{"rank", g.rank}, {"torsion", g.torsion}}; }

inline json to_json(const GroupElement& x) {
  return {{"rank", x.spec().rank},
          {"torsion", x.spec().torsion},
          {"free", std::vector<std::int64_t>(x.free().begin(), x.free().end())},
          {"tors", std::vector<std::int64_t>(x.tors().begin(), x.tors().end())}};
}

inline json to_json(const SurfaceClass& u) { return {{"a", u.a}, {"degree", u.c.degree}, {"pic0", to_json(u.c.pic0)}}; }

inline json to_json(const BranchComponent& c) {
  return {{"kind", c.kind == FiberKind::elliptic ? "E" : "F"}, {"label", c.label}};
}

inline json to_json(const BuildingData& bd) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = bd.n;
  j["group_spec"] = to_json(bd.group_spec);
  j["points_c"] = json::object();
  for (const auto& [label, aj] : bd.points_c) j["points_c"][label] = to_json(aj);
  j["points_p1"] = bd.points_p1;
  j["L"] = json::object();
  for (const auto& [chi, l] : bd.L) j["L"][chi.str()] = to_json(l);
  j["D"] = json::object();
  for (const auto& [sigma, comps] : bd.D) {
    json arr = json::array();
    for (const auto& c : comps) arr.push_back(to_json(c));
    j["D"][sigma.str()] = arr;
  }
  return j;
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::vector<std::int64_t> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

inline std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

template <class F>
auto rethrow_as_parse_error(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

inline GroupSpec group_spec_from_json(const json& j) {
  return detail::rethrow_as_parse_error([&] {
    return GroupSpec(static_cast<int>(detail::integer(detail::field(j, "rank"), "rank")),
                     detail::int_list(detail::field(j, "torsion"), "torsion"));
  });
}

inline GroupElement group_element_from_json(const json& j) {
  return detail::rethrow_as_parse_error([&] {
    return GroupElement(group_spec_from_json(j), detail::int_list(detail::field(j, "free"), "free"),
                        detail::int_list(detail::field(j, "tors"), "tors"));
  });
}

inline SurfaceClass surface_class_from_json(const json& j) {
  return SurfaceClass{detail::integer(detail::field(j, "a"), "a"),
                      {detail::integer(detail::field(j, "degree"), "degree"), group_element_from_json(detail::field(j, "pic0"))}};
}

inline BuildingData building_data_from_json(const json& j) {
  return detail::rethrow_as_parse_error([&] {
    if (detail::integer(detail::field(j, "schema_version"), "schema_version") != kSchemaVersion)
      throw ParseError("unsupported schema_version");
    BuildingData bd;
    bd.n = static_cast<int>(detail::integer(detail::field(j, "n"), "n"));
    bd.group_spec = group_spec_from_json(detail::field(j, "group_spec"));

    const auto& pc = detail::field(j, "points_c");
    if (!pc.is_object()) throw ParseError("points_c must be an object");
    for (const auto& [label, v] : pc.items()) bd.points_c[label] = group_element_from_json(v);

    const auto& pp = detail::field(j, "points_p1");
    if (!pp.is_array()) throw ParseError("points_p1 must be an array");
    for (const auto& v : pp) {
      if (!v.is_string()) throw ParseError("points_p1 entries must be strings");
      bd.points_p1.push_back(v.get<std::string>());
    }

    const auto& lj = detail::field(j, "L");
    if (!lj.is_object()) throw ParseError("L must be an object");
    for (const auto& [key, v] : lj.items()) bd.L[Character::parse(key)] = surface_class_from_json(v);

    const auto& dj = detail::field(j, "D");
    if (!dj.is_object()) throw ParseError("D must be an object");
    for (const auto& [key, v] : dj.items()) {
      if (!v.is_array()) throw ParseError("D entries must be arrays");
      auto& comps = bd.D[CoverElement::parse(key)];
      for (const auto& c : v) {
        const auto kind = detail::field(c, "kind");
        const auto label = detail::field(c, "label");
        if (!kind.is_string() || !label.is_string()) throw ParseError("component kind and label must be strings");
        if (kind == "E")
          comps.push_back(elliptic_fiber(label.get<std::string>()));
        else if (kind == "F")
          comps.push_back(rational_fiber(label.get<std::string>()));
        else
          throw ParseError("component kind must be \"E\" or \"F\"");
      }
    }
    validate_structure(bd);
    return bd;
  });
}

inline BuildingData parse_building_data(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return building_data_from_json(j);
}

inline std::string dump_building_data(const BuildingData& bd) { return to_json(bd).dump(2) + "\n"; }

}  // namespace zcover
