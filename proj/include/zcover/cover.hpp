#pragma once

// Building data {L_chi, D_sigma} of a Z_2^n-cover of Y = P^1 x C whose branch
// divisors are unions of fibers, and the checks that make it a cover:
//
//   L_chi + L_chi' == L_{chi chi'} + sum_{chi(s) = chi'(s) = -1} D_s
//
// for every pair of nontrivial characters, L_chi nontrivial, and a reduced
// branch divisor.  Smoothness follows from the branch locus being simple
// normal crossings.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zcover/abgroup.hpp"
#include "zcover/characters.hpp"
#include "zcover/picard.hpp"

namespace zcover {

enum class FiberKind {
  elliptic,  // E-type: fiber of Y -> P^1 over a point of P^1
  rational,  // F-type: fiber of Y -> C over a point of C
};

struct BranchComponent {
  FiberKind kind;
  std::string label;

  friend bool operator==(const BranchComponent&, const BranchComponent&) = default;
  friend auto operator<=>(const BranchComponent&, const BranchComponent&) = default;
};

inline BranchComponent elliptic_fiber(std::string label) { return {FiberKind::elliptic, std::move(label)}; }
inline BranchComponent rational_fiber(std::string label) { return {FiberKind::rational, std::move(label)}; }

struct BuildingData {
  int n = 3;
  GroupSpec group_spec;
  // Declared points of C (label -> Abel-Jacobi image) and of P^1.
  std::map<std::string, GroupElement> points_c;
  std::vector<std::string> points_p1;
  std::map<Character, SurfaceClass> L;
  // Absent or empty entries are the zero divisor.
  std::map<CoverElement, std::vector<BranchComponent>> D;

  SurfaceClass zero_class() const { return SurfaceClass::zero(group_spec); }

  // L_chi, with L_1 = 0.
  SurfaceClass line_class(Character chi) const {
    if (chi.is_zero()) return zero_class();
    auto it = L.find(chi);
    if (it == L.end()) throw ConsistencyError("building data: no L entry for character " + chi.str());
    return it->second;
  }

  std::span<const BranchComponent> branch(CoverElement sigma) const {
    auto it = D.find(sigma);
    if (it == D.end()) return {};
    return it->second;
  }

  SurfaceClass component_class(const BranchComponent& comp) const {
    if (comp.kind == FiberKind::elliptic) {
      if (std::find(points_p1.begin(), points_p1.end(), comp.label) == points_p1.end())
        throw ConsistencyError("building data: unknown point of P^1 '" + comp.label + "'");
      return SurfaceClass::elliptic_fiber(group_spec);
    }
    auto it = points_c.find(comp.label);
    if (it == points_c.end()) throw ConsistencyError("building data: unknown point of C '" + comp.label + "'");
    return SurfaceClass::rational_fiber(it->second);
  }

  SurfaceClass branch_class(std::span<const BranchComponent> comps) const {
    SurfaceClass s = zero_class();
    for (const auto& comp : comps) s += component_class(comp);
    return s;
  }

  // Sum of D_sigma over nontrivial sigma with chi(sigma) = chi'(sigma) = -1.
  SurfaceClass branch_sum(Character chi, Character chi2) const {
    SurfaceClass s = zero_class();
    for (auto sigma : nontrivial_elements(n))
      if (pair(chi, sigma) == -1 && pair(chi2, sigma) == -1) s += branch_class(branch(sigma));
    return s;
  }

  // Total branch divisor B = sum_sigma D_sigma, as a class.
  SurfaceClass total_branch_class() const {
    SurfaceClass s = zero_class();
    for (const auto& [sigma, comps] : D) s += branch_class(comps);
    return s;
  }
};

// Throws ConsistencyError unless every nontrivial character has an L entry
// over the declared group, every D key is a nontrivial element of Z_2^n and
// every component refers to a declared point.
inline void validate_structure(const BuildingData& bd) {
  if (bd.n < 1 || bd.n > kMaxCoverRank) throw ConsistencyError("building data: n out of range");
  for (const auto& [label, aj] : bd.points_c)
    if (aj.spec() != bd.group_spec) throw ConsistencyError("building data: point '" + label + "' lives in another group");
  for (auto chi : nontrivial_characters(bd.n)) {
    const auto l = bd.line_class(chi);
    if (l.spec() != bd.group_spec) throw ConsistencyError("building data: L_" + chi.str() + " lives in another group");
  }
  for (const auto& [chi, l] : bd.L)
    if (chi.n() != bd.n || chi.is_zero()) throw ConsistencyError("building data: bad character key " + chi.str());
  for (const auto& [sigma, comps] : bd.D) {
    if (sigma.n() != bd.n || sigma.is_zero()) throw ConsistencyError("building data: bad element key " + sigma.str());
    for (const auto& comp : comps) (void)bd.component_class(comp);
  }
}

struct RelationFailure {
  Character chi;
  Character chi2;
  SurfaceClass lhs;
  SurfaceClass rhs;
};

struct VerificationReport {
  bool ok = true;
  int pairs_checked = 0;
  std::vector<RelationFailure> failures;
  // Nontrivial characters whose L_chi is the trivial class.
  std::vector<Character> trivial_L;
};

// Checks every unordered pair {chi, chi'} of nontrivial characters,
// including chi = chi', in lexicographic order.
inline VerificationReport verify_relations(const BuildingData& bd) {
  validate_structure(bd);
  VerificationReport report;
  const auto chars = nontrivial_characters(bd.n);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (bd.line_class(chars[i]) == bd.zero_class()) report.trivial_L.push_back(chars[i]);
    for (std::size_t j = i; j < chars.size(); ++j) {
      const auto lhs = bd.line_class(chars[i]) + bd.line_class(chars[j]);
      const auto rhs = bd.line_class(mul(chars[i], chars[j])) + bd.branch_sum(chars[i], chars[j]);
      ++report.pairs_checked;
      if (lhs != rhs) report.failures.push_back({chars[i], chars[j], lhs, rhs});
    }
  }
  report.ok = report.failures.empty() && report.trivial_L.empty();
  return report;
}

struct SmoothnessReport {
  bool reduced = true;
  bool snc = true;
  bool injective_points = true;
  std::vector<BranchComponent> repeated_components;
  std::vector<std::pair<std::string, std::string>> colliding_points;
};

// Fibers of one ruling are disjoint once distinct, and fibers of the two
// rulings meet transversally in one point, so for fiber-type branch data
// simple normal crossings reduces to: no component repeated, and distinct
// points of C have distinct classes.
inline SmoothnessReport verify_smoothness(const BuildingData& bd) {
  SmoothnessReport report;

  std::set<BranchComponent> seen;
  for (const auto& [sigma, comps] : bd.D)
    for (const auto& comp : comps)
      if (!seen.insert(comp).second) report.repeated_components.push_back(comp);
  report.reduced = report.repeated_components.empty();

  std::map<GroupElement, std::string> by_class;
  for (const auto& [label, aj] : bd.points_c) {
    auto [it, inserted] = by_class.emplace(aj, label);
    if (!inserted) report.colliding_points.emplace_back(it->second, label);
  }
  std::set<std::string> p1_labels;
  for (const auto& label : bd.points_p1)
    if (!p1_labels.insert(label).second) report.colliding_points.emplace_back(label, label);
  report.injective_points = report.colliding_points.empty();

  report.snc = report.reduced && report.injective_points;
  return report;
}

// A linear relation among declared points of C, sum c_i [p_i] - offset,
// expected to vanish (or not) in Pic^0.  Used to hand construction-level
// identities such as 2 F_ii == F_i + F_i' to the curve oracle.
struct PointRelation {
  std::string name;
  std::vector<std::pair<std::int64_t, std::string>> terms;
  std::optional<GroupElement> offset;
  bool expect_zero = true;

  GroupElement evaluate(const BuildingData& bd) const {
    GroupElement sum(bd.group_spec);
    for (const auto& [coeff, label] : terms) {
      auto it = bd.points_c.find(label);
      if (it == bd.points_c.end()) throw ConsistencyError("point relation '" + name + "': unknown point '" + label + "'");
      sum += coeff * it->second;
    }
    if (offset) sum -= *offset;
    return sum;
  }
};

// Thrown by derive_from_generators when the completed data fails a relation.
struct RelationError : ConsistencyError {
  VerificationReport report;
  RelationError(const std::string& what, VerificationReport r) : ConsistencyError(what), report(std::move(r)) {}
};

// Completes building data from L on the n unit characters (100, 010, 001 for
// n = 3) and the branch divisors of `shell`.  Every other L_chi is forced by
// the mixed relations: writing chi = b * rest with b the leading unit
// character,
//
//   L_chi := L_b + L_rest - sum_{b(s) = rest(s) = -1} D_s.
//
// For n = 3 this gives L_110, L_101, L_011 from pairs of generators and
// L_111 from L_100 and L_011.  The result is re-verified in full.
inline BuildingData derive_from_generators(const BuildingData& shell, std::span<const SurfaceClass> generators) {
  if (generators.size() != static_cast<std::size_t>(shell.n))
    throw PreconditionError("derive_from_generators: need one class per unit character");

  BuildingData bd = shell;
  bd.L.clear();
  for (int i = 0; i < bd.n; ++i) {
    const auto b = Character::unit(bd.n, i);
    const auto twice = 2 * generators[i];
    const auto branch = bd.branch_sum(b, b);
    if (twice != branch)
      throw ConsistencyError("derive_from_generators: 2 L_" + b.str() + " = " + to_string(twice) +
                             " but the branch divisor is " + to_string(branch));
    bd.L[b] = generators[i];
  }

  for (auto chi : nontrivial_characters(bd.n)) {
    if (std::has_single_bit(chi.bits())) continue;
    const auto b = Character(bd.n, std::bit_floor(chi.bits()));
    const auto rest = chi ^ b;
    bd.L[chi] = bd.L.at(b) + bd.L.at(rest) - bd.branch_sum(b, rest);
  }

  auto report = verify_relations(bd);
  if (!report.ok) {
    std::string what = "derive_from_generators: residual relations fail:";
    for (const auto& f : report.failures) what += " (" + f.chi.str() + "," + f.chi2.str() + ")";
    for (const auto& c : report.trivial_L) what += " L_" + c.str() + " trivial";
    throw RelationError(what, std::move(report));
  }
  return bd;
}

inline BuildingData derive_from_generators(const BuildingData& shell, const SurfaceClass& l100, const SurfaceClass& l010,
                                           const SurfaceClass& l001) {
  if (shell.n != 3) throw PreconditionError("derive_from_generators: three generators require n = 3");
  const SurfaceClass gens[] = {l100, l010, l001};
  return derive_from_generators(shell, gens);
}

}  // namespace zcover
