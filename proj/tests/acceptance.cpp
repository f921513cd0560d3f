// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "zcover/construction.hpp"
#include "zcover/curve_oracle.hpp"
#include "zcover/invariants.hpp"

using namespace zcover;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

SurfaceClass torsion_shift(const BuildingData& bd, int code) { return SurfaceClass{0, {0, family::two_torsion(bd.group_spec, code)}}; }

Outcome theorem_table() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    const auto t0 = Clock::now();
    const auto bd = construct_family(n);
    const auto rel = verify_relations(bd);
    const auto smooth = verify_smoothness(bd);
    const auto tag = "n=" + std::to_string(n) + ": ";
    o.require(rel.ok && rel.pairs_checked == 28, tag + "relations");
    o.require(smooth.snc, tag + "smoothness");
    const auto inv = compute_invariants(bd);
    o.require(inv.k_squared == 16 * n && inv.p_g == 2 * n && inv.q == 1, tag + "invariants");
    const auto m = canonical_map_degree(bd);
    o.require(m.degree == 8 && m.image_degree == 2 * n && m.base_point_free == true, tag + "canonical map");
    const double dt = seconds_since(t0);
    o.require(dt < 1.0, tag + "took " + std::to_string(dt) + " s");
  }
  return o;
}

Outcome relations_table_n3() {
  Outcome o;
  const char* want[] = {"6E + 2ΣF_ii", "4E + 2ΣF_ii + η1", "4E + 2ΣF_ii + η2",
                        "2E + 2ΣF_ii", "2E + 2ΣF_ii + η3", "2E + 2ΣF_ii"};
  const auto rows = relations_table(construct_family(3));
  o.require(rows.size() == 6, "row count");
  for (std::size_t i = 0; i < rows.size() && i < 6; ++i) {
    o.require(rows[i].equal && rows[i].matches(), "row " + std::to_string(i + 1) + " unequal");
    o.require(rows[i].rhs_symbolic && rows[i].rhs_symbolic->str() == want[i], "row " + std::to_string(i + 1) + " symbol");
  }
  return o;
}

Outcome boundary_n2() {
  Outcome o;
  const auto bd = construct_family(2);
  o.require(verify_relations(bd).ok && verify_smoothness(bd).snc, "checks");
  const auto inv = compute_invariants(bd);
  o.require(inv.k_squared == 32 && inv.p_g == 4 && inv.q == 1, "invariants");
  const auto m = canonical_map_degree(bd);
  o.require(m.degree == 16 && m.image_degree == 2, "canonical map");
  return o;
}

Outcome degree_identity() {
  Outcome o;
  for (int n = 2; n <= 20; ++n) {
    const auto bd = construct_family(n);
    const auto m = canonical_map_degree(bd);
    o.require(m.degree && m.image_degree && *m.degree * *m.image_degree == compute_invariants(bd).k_squared,
              "n=" + std::to_string(n));
  }
  return o;
}

Outcome single_character() {
  Outcome o;
  const auto chi100 = Character::parse("100");
  for (int n = 2; n <= 20; ++n) {
    const auto inv = compute_invariants(construct_family(n));
    for (const auto& [chi, h] : inv.h0_by_character)
      o.require(h == (chi == chi100 ? 2 * n : 0), "n=" + std::to_string(n) + " chi=" + chi.str());
    o.require(inv.h0_by_character.size() == 7, "n=" + std::to_string(n) + " coverage");
  }
  return o;
}

Outcome mutations() {
  Outcome o;
  const auto good = construct_family(3);
  int rejected = 0;
  for (auto chi : nontrivial_characters(3))
    for (int code = 1; code <= 3; ++code) {
      auto bd = good;
      bd.L[chi] = bd.L[chi] + torsion_shift(bd, code);
      if (!verify_relations(bd).ok) ++rejected;
    }
  o.require(rejected == 21, std::to_string(21 - rejected) + " false passes");
  return o;
}

Outcome halving_invariance() {
  Outcome o;
  const auto base = compute_invariants(construct_family(3));
  int variants = 0;
  for (int k = 0; k < 64; ++k) {
    const auto bd = construct_family(3, {k % 4, (k / 4) % 4, k / 16});
    o.require(verify_relations(bd).ok && verify_smoothness(bd).snc, "choice " + std::to_string(k) + " checks");
    o.require(compute_invariants(bd) == base, "choice " + std::to_string(k) + " invariants");
    ++variants;
  }
  o.require(variants >= 16, "too few variants");
  return o;
}

Outcome oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  const CurveOverFp curve(8311, -1, 0);
  o.require(curve.has_full_two_torsion(), "curve lacks full 2-torsion");
  const auto pts = curve.points();
  const auto N = static_cast<std::int64_t>(pts.size());
  const auto g = group_structure(curve);
  o.require(g.order == N && g.d1 * g.d2 == N, "group structure");
  for (const auto& P : pts)
    if (!curve.multiply(N, P).infinity) {
      o.require(false, "N*P != O");
      break;
    }

  const auto good = construct_family(3);
  std::vector<BuildingData> mutants;
  for (auto chi : nontrivial_characters(3))
    for (int code = 1; code <= 3; ++code) {
      auto bd = good;
      bd.L[chi] = bd.L[chi] + torsion_shift(bd, code);
      mutants.push_back(bd);
    }
  auto audit = audit_elements(good);
  for (const auto& bd : mutants) {
    const auto a = audit_elements(bd);
    audit.insert(audit.end(), a.begin(), a.end());
  }
  const auto asg = search_assignment(curve, good.group_spec, audit);
  const auto rels = family_point_relations(good);
  const auto r = realize(good, curve, asg, rels);
  o.require(r.ok() && r.injective(), r.discrepancies.empty() ? "collision" : r.discrepancies.front());
  o.require(r.all_relations_realized(), "relation not realized");
  for (const auto& p : r.points) o.require(p.realized_holds && p.among_halves.value_or(true), p.name);
  for (std::size_t i = 0; i < mutants.size(); ++i) {
    const auto m = realize(mutants[i], curve, asg);
    o.require(m.ok() && !m.all_relations_realized(), "mutant " + std::to_string(i) + " accepted");
  }
  const double dt = seconds_since(t0);
  o.require(dt < 10.0, "took " + std::to_string(dt) + " s");
  return o;
}

Outcome etale() {
  Outcome o;
  const auto s = GroupSpec(0, {2, 2, 2});
  BuildingData bd;
  bd.n = 3;
  bd.group_spec = s;
  for (auto chi : nontrivial_characters(3))
    bd.L[chi] = SurfaceClass{0, {0, GroupElement(s, {}, {chi.bit(0), chi.bit(1), chi.bit(2)})}};
  o.require(verify_relations(bd).ok, "relations");
  const auto inv = compute_invariants(bd);
  o.require(inv.chi == 0 && inv.chi == 8 * kBaseChi, "chi");
  o.require(inv.k_squared == 0, "K^2");
  o.require(inv.q == 1, "q");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 family table n=3..10", theorem_table},
      {"2 relations table n=3", relations_table_n3},
      {"3 boundary case n=2", boundary_n2},
      {"4 degree * image_degree = K^2", degree_identity},
      {"5 single-character dominance", single_character},
      {"6 mutation sensitivity", mutations},
      {"7 halving-choice invariance", halving_invariance},
      {"8 oracle agreement", oracle},
      {"9 etale degenerate case", etale},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.ok) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    failed += !o.ok;
  }
  std::cout << (9 - failed) << "/9 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
