#pragma once

// Machine-readable reports for the command-line tool.  Every document
// carries "schema_version" and lists characters, elements and points in
// lexicographic order, so identical inputs give byte-identical output.

#include <optional>
#include <sstream>
#include <string>

#include "zcover/construction.hpp"
#include "zcover/curve_oracle.hpp"
#include "zcover/invariants.hpp"
#include "zcover/serialize.hpp"

namespace zcover {

struct OracleOptions {
  std::int64_t prime = 8311;  // y^2 = x^3 - x has group Z/2 + Z/4156 here
  std::int64_t a = -1;
  std::int64_t b = 0;
  std::uint64_t seed = 1;
};

inline json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"chi", f.chi.str()}, {"chi2", f.chi2.str()}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}});
  json trivial = json::array();
  for (const auto& c : r.trivial_L) trivial.push_back(c.str());
  return {{"ok", r.ok}, {"pairs_checked", r.pairs_checked}, {"failures", failures}, {"trivial_L", trivial}};
}

inline json to_json(const SmoothnessReport& r) {
  json repeated = json::array();
  for (const auto& c : r.repeated_components) repeated.push_back(to_json(c));
  json colliding = json::array();
  for (const auto& [x, y] : r.colliding_points) colliding.push_back({x, y});
  return {{"reduced", r.reduced},
          {"snc", r.snc},
          {"injective_points", r.injective_points},
          {"repeated_components", repeated},
          {"colliding_points", colliding}};
}

inline json to_json(const CoverInvariants& inv) {
  json h0s = json::object();
  for (const auto& [chi, h] : inv.h0_by_character) h0s[chi.str()] = h;
  return {{"k_squared", inv.k_squared}, {"p_g", inv.p_g}, {"chi", inv.chi}, {"q", inv.q}, {"h0_by_character", h0s}};
}

namespace detail {
template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}
}  // namespace detail

inline json to_json(const CanonicalMapReport& r) {
  return {{"factors_through_cover", r.factors_through_cover},
          {"ramification_obstructs", r.ramification_obstructs},
          {"degree", detail::optional_json(r.degree)},
          {"image_degree", detail::optional_json(r.image_degree)},
          {"base_point_free", detail::optional_json(r.base_point_free)}};
}

inline json to_json(const CanonicalSystemDescription& d) {
  json gens = json::array();
  for (const auto& g : d.generators) {
    json ram = json::array();
    for (auto s : g.ramification_elements) ram.push_back(s.str());
    gens.push_back({{"chi", g.chi.str()}, {"class", to_json(g.base_class)}, {"h0", g.h0}, {"ramification", ram}});
  }
  json contributing = json::array();
  for (auto c : d.contributing) contributing.push_back(c.str());
  return {{"contributing", contributing}, {"generators", gens}};
}

inline json to_json(const RealizationReport& r) {
  json rels = json::array();
  for (const auto& c : r.relations)
    rels.push_back({{"chi", c.chi.str()}, {"chi2", c.chi2.str()}, {"abstract", c.abstract_holds}, {"realized", c.realized_holds}});
  json pts = json::array();
  for (const auto& c : r.points) {
    json p = {{"name", c.name}, {"abstract", c.abstract_holds}, {"realized", c.realized_holds}};
    if (c.halves) p["halves"] = *c.halves;
    pts.push_back(p);
  }
  json coll = json::array();
  for (const auto& [x, y] : r.collisions) coll.push_back({x, y});
  return {{"prime", r.prime},     {"ok", r.ok()},          {"relations", rels},
          {"points", pts},        {"collisions", coll},    {"discrepancies", r.discrepancies}};
}

// Runs the oracle on `bd` with a searched assignment.  Family instances also
// get their point identities checked.
inline RealizationReport run_oracle(const BuildingData& bd, const OracleOptions& opt) {
  const CurveOverFp curve(opt.prime, opt.a, opt.b);
  const auto audit = audit_elements(bd);
  const auto asg = search_assignment(curve, bd.group_spec, audit, opt.seed);
  std::vector<PointRelation> rels;
  try {
    rels = family_point_relations(bd);
  } catch (const PreconditionError&) {
  }
  return realize(bd, curve, asg, rels);
}

struct VerifyOutcome {
  json report;
  bool passed = false;
};

inline VerifyOutcome verify_report(const BuildingData& bd, const std::optional<OracleOptions>& oracle = std::nullopt) {
  VerifyOutcome out;
  json& j = out.report;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify";

  const auto rel = verify_relations(bd);
  const auto smooth = verify_smoothness(bd);
  j["relations"] = to_json(rel);
  j["smoothness"] = to_json(smooth);
  out.passed = rel.ok && smooth.snc;

  if (rel.ok) {
    const auto inv = compute_invariants(bd);
    j["invariants"] = to_json(inv);
    j["canonical_system"] = to_json(canonical_system(bd));
    const auto ev = minimality_evidence(bd);
    j["minimality"] = {{"s_squared", ev.self_intersection}, {"big", ev.big}, {"nef_on_fibers", ev.nef_on_fibers}};
    if (inv.p_g >= 3)
      j["canonical_map"] = to_json(canonical_map_degree(bd));
    else
      j["canonical_map"] = nullptr;
  } else {
    j["invariants"] = nullptr;
    j["canonical_system"] = nullptr;
    j["minimality"] = nullptr;
    j["canonical_map"] = nullptr;
  }
  if (oracle) {
    const auto r = run_oracle(bd, *oracle);
    j["oracle"] = to_json(r);
    out.passed = out.passed && r.ok();
  }
  j["passed"] = out.passed;
  return out;
}

inline json table_report(const BuildingData& bd) {
  json rows = json::array();
  bool all = true;
  for (const auto& r : relations_table(bd)) {
    all = all && r.matches();
    rows.push_back({{"lhs_terms", "L_" + r.chi.str() + " + L_" + r.chi2.str()},
                    {"middle_terms", r.middle},
                    {"lhs", to_json(r.lhs)},
                    {"rhs", to_json(r.rhs)},
                    {"lhs_symbolic", r.lhs_symbolic ? json(r.lhs_symbolic->str()) : json(nullptr)},
                    {"rhs_symbolic", r.rhs_symbolic ? json(r.rhs_symbolic->str()) : json(nullptr)},
                    {"expected", r.expected.str()},
                    {"verdict", r.matches() ? "equal" : "unequal"}});
  }
  return {{"schema_version", kSchemaVersion}, {"command", "table"}, {"n", family_size(bd)}, {"rows", rows}, {"all_equal", all}};
}

inline std::string table_text(const json& t) {
  std::ostringstream os;
  for (const auto& r : t["rows"]) {
    std::string mid;
    for (const auto& m : r["middle_terms"]) mid += (mid.empty() ? "" : " + ") + m.get<std::string>();
    os << r["lhs_terms"].get<std::string>() << " ≡ " << mid << " ≡ "
       << (r["rhs_symbolic"].is_null() ? std::string("?") : r["rhs_symbolic"].get<std::string>()) << "   ["
       << r["verdict"].get<std::string>() << "]\n";
  }
  return os.str();
}

struct SweepRow {
  int n = 0;
  CoverInvariants invariants;
  CanonicalMapReport map;
};

inline SweepRow sweep_row(int n) {
  const auto bd = construct_family(n);
  return {n, compute_invariants(bd), canonical_map_degree(bd)};
}

inline json sweep_report(int n_min, int n_max) {
  if (n_min < 2 || n_max > 64 || n_min > n_max) throw PreconditionError("sweep: need 2 <= n_min <= n_max <= 64");
  json rows = json::array();
  for (int n = n_min; n <= n_max; ++n) {
    const auto r = sweep_row(n);
    rows.push_back({{"n", n},
                    {"k_squared", r.invariants.k_squared},
                    {"p_g", r.invariants.p_g},
                    {"q", r.invariants.q},
                    {"image_degree", detail::optional_json(r.map.image_degree)},
                    {"degree", detail::optional_json(r.map.degree)},
                    {"base_point_free", detail::optional_json(r.map.base_point_free)}});
  }
  return {{"schema_version", kSchemaVersion}, {"command", "sweep"}, {"rows", rows}};
}

inline std::string sweep_text(const json& s) {
  std::ostringstream os;
  os << "n\tK^2\tp_g\tq\tdeg(Im)\tdegree\tbpf\n";
  for (const auto& r : s["rows"])
    os << r["n"] << '\t' << r["k_squared"] << '\t' << r["p_g"] << '\t' << r["q"] << '\t' << r["image_degree"] << '\t'
       << r["degree"] << '\t' << r["base_point_free"] << '\n';
  return os.str();
}

inline std::string verify_text(const json& v) {
  std::ostringstream os;
  const auto& rel = v["relations"];
  os << "relations: " << (rel["ok"].get<bool>() ? "ok" : "FAILED") << " (" << rel["pairs_checked"] << " pairs)\n";
  for (const auto& f : rel["failures"])
    os << "  fails: L_" << f["chi"].get<std::string>() << " + L_" << f["chi2"].get<std::string>() << "\n";
  for (const auto& c : rel["trivial_L"]) os << "  trivial: L_" << c.get<std::string>() << "\n";
  const auto& sm = v["smoothness"];
  os << "smoothness: reduced=" << sm["reduced"] << " injective_points=" << sm["injective_points"] << " snc=" << sm["snc"]
     << "\n";
  if (!v["invariants"].is_null()) {
    const auto& inv = v["invariants"];
    os << "invariants: K^2=" << inv["k_squared"] << " p_g=" << inv["p_g"] << " chi=" << inv["chi"] << " q=" << inv["q"]
       << "\n";
  }
  if (!v["canonical_map"].is_null()) {
    const auto& m = v["canonical_map"];
    os << "canonical map: factors=" << m["factors_through_cover"] << " degree=" << m["degree"]
       << " image_degree=" << m["image_degree"] << " base_point_free=" << m["base_point_free"] << "\n";
  }
  if (v.contains("oracle")) {
    const auto& o = v["oracle"];
    os << "oracle (p=" << o["prime"] << "): " << (o["ok"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
    for (const auto& d : o["discrepancies"]) os << "  " << d.get<std::string>() << "\n";
  }
  os << (v["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace zcover
