#pragma once

// The Z_2^3-cover family over Y = P^1 x C with canonical map of degree 8.
//
// Pic^0(C) is modeled as Z^(2n+1) + Z/2 + Z/2 with free generators
//   g_1..g_n  (the points under F_ii),
//   h_1..h_n  (the points under F_i),
//   u         (the point under F''_1),
// and torsion generators t1, t2.  The remaining points are derived:
//   F'_i  -> 2 g_i - h_i        so that 2 F_ii == F_i + F'_i,
//   F''_2 -> u - t1,  F''_3 -> u - t1 - t2,
// giving eta1 = F''_1 - F''_2 = t1, eta2 = F''_2 - F''_3 = t2,
// eta3 = eta1 + eta2.  Branch data:
//   D_100 = E_1 + E_2, D_101 = E_3 + E_4, D_110 = E_5 + E_6,
//   D_111 = sum (F_i + F'_i),
//   L_100 = 3E + sum F_ii,          L_010 = E + sum F_ii + eta1,
//   L_001 = E + sum F_ii + eta2,    L_110 = 2E + eta1,
//   L_101 = 2E + eta2,              L_011 = 2E + eta3,
//   L_111 = E + sum F_ii + eta3.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zcover/cover.hpp"

namespace zcover {

namespace family {

inline std::string e_label(int i) { return "E_" + std::to_string(i); }
inline std::string f_label(int i) { return "F_" + std::to_string(i); }
inline std::string f_prime_label(int i) { return "F'_" + std::to_string(i); }
inline std::string f_half_label(int i) { return "F_" + std::to_string(i) + "_" + std::to_string(i); }
inline std::string f_second_label(int i) { return "F''_" + std::to_string(i); }

// Free generator indices.
inline int g_index(int /*n*/, int i) { return i - 1; }
inline int h_index(int n, int i) { return n + i - 1; }
inline int u_index(int n) { return 2 * n; }

inline GroupSpec group_spec(int n) { return GroupSpec(2 * n + 1, {2, 2}); }

// The 2-torsion class with code 0..3: 0, t1, t2, t1 + t2 (also eta_0..eta_3).
inline GroupElement two_torsion(const GroupSpec& spec, int code) {
  if (code < 0 || code > 3) throw PreconditionError("2-torsion code must lie in [0, 3]");
  return GroupElement(spec, std::vector<std::int64_t>(spec.rank, 0), {code & 1, (code >> 1) & 1});
}

}  // namespace family

// halving_choice[i-1] picks which of the four halves of F_i + F'_i is F_ii,
// as a 2-torsion code (0 = g_i, 1 = g_i + t1, 2 = g_i + t2, 3 = g_i + t1 + t2).
inline BuildingData construct_family(int n, const std::vector<int>& halving_choice = {}) {
  if (n < 2) throw PreconditionError("construct_family: n must be at least 2");
  if (!halving_choice.empty() && halving_choice.size() != static_cast<std::size_t>(n))
    throw PreconditionError("construct_family: halving choice needs exactly n entries");

  using namespace family;
  BuildingData bd;
  bd.n = 3;
  bd.group_spec = group_spec(n);
  const auto& spec = bd.group_spec;
  auto gen = [&](int k) { return GroupElement::free_generator(spec, k); };
  const auto eta1 = two_torsion(spec, 1);
  const auto eta2 = two_torsion(spec, 2);
  const auto eta3 = two_torsion(spec, 3);

  GroupElement sum_half(spec);
  for (int i = 1; i <= n; ++i) {
    const auto g = gen(g_index(n, i)) + two_torsion(spec, halving_choice.empty() ? 0 : halving_choice[i - 1]);
    const auto h = gen(h_index(n, i));
    bd.points_c[f_label(i)] = h;
    bd.points_c[f_prime_label(i)] = 2 * g - h;
    bd.points_c[f_half_label(i)] = g;
    sum_half += g;
  }
  const auto u = gen(u_index(n));
  bd.points_c[f_second_label(1)] = u;
  bd.points_c[f_second_label(2)] = u - eta1;
  bd.points_c[f_second_label(3)] = u - eta1 - eta2;
  for (int i = 1; i <= 6; ++i) bd.points_p1.push_back(e_label(i));

  auto el = [&](const std::string& s) { return CoverElement::parse(s); };
  bd.D[el("100")] = {elliptic_fiber(e_label(1)), elliptic_fiber(e_label(2))};
  bd.D[el("101")] = {elliptic_fiber(e_label(3)), elliptic_fiber(e_label(4))};
  bd.D[el("110")] = {elliptic_fiber(e_label(5)), elliptic_fiber(e_label(6))};
  auto& d111 = bd.D[el("111")];
  for (int i = 1; i <= n; ++i) {
    d111.push_back(rational_fiber(f_label(i)));
    d111.push_back(rational_fiber(f_prime_label(i)));
  }

  const SurfaceClass e = SurfaceClass::elliptic_fiber(spec);
  const SurfaceClass sum_f{0, {n, sum_half}};
  const SurfaceClass t1{0, {0, eta1}}, t2{0, {0, eta2}}, t3{0, {0, eta3}};
  auto ch = [&](const std::string& s) { return Character::parse(s); };
  bd.L[ch("100")] = 3 * e + sum_f;
  bd.L[ch("010")] = e + sum_f + t1;
  bd.L[ch("001")] = e + sum_f + t2;
  bd.L[ch("110")] = 2 * e + t1;
  bd.L[ch("101")] = 2 * e + t2;
  bd.L[ch("011")] = 2 * e + t3;
  bd.L[ch("111")] = e + sum_f + t3;
  return bd;
}

// Number of F_ii points of a family instance; throws if `bd` does not have
// the family's shape.
inline int family_size(const BuildingData& bd) {
  int n = 0;
  while (bd.points_c.count(family::f_half_label(n + 1))) ++n;
  if (bd.n != 3 || n < 1 || bd.group_spec.torsion != std::vector<std::int64_t>{2, 2} ||
      bd.group_spec.rank != 2 * n + 1)
    throw PreconditionError("building data does not come from construct_family");
  return n;
}

// The point identities the construction relies on, for the curve oracle.
inline std::vector<PointRelation> family_point_relations(const BuildingData& bd) {
  using namespace family;
  const int n = family_size(bd);
  const auto& spec = bd.group_spec;
  std::vector<PointRelation> rels;
  for (int i = 1; i <= n; ++i)
    rels.push_back({"2" + f_half_label(i) + " = " + f_label(i) + " + " + f_prime_label(i),
                    {{2, f_half_label(i)}, {-1, f_label(i)}, {-1, f_prime_label(i)}},
                    std::nullopt,
                    true});
  rels.push_back({"2F''_1 = 2F''_2", {{2, f_second_label(1)}, {-2, f_second_label(2)}}, std::nullopt, true});
  rels.push_back({"2F''_2 = 2F''_3", {{2, f_second_label(2)}, {-2, f_second_label(3)}}, std::nullopt, true});
  rels.push_back({"eta1 = F''_1 - F''_2", {{1, f_second_label(1)}, {-1, f_second_label(2)}}, two_torsion(spec, 1), true});
  rels.push_back({"eta2 = F''_2 - F''_3", {{1, f_second_label(2)}, {-1, f_second_label(3)}}, two_torsion(spec, 2), true});
  rels.push_back({"eta3 = F''_1 - F''_3", {{1, f_second_label(1)}, {-1, f_second_label(3)}}, two_torsion(spec, 3), true});
  rels.push_back({"eta1 != 0", {{1, f_second_label(1)}, {-1, f_second_label(2)}}, std::nullopt, false});
  rels.push_back({"eta2 != 0", {{1, f_second_label(2)}, {-1, f_second_label(3)}}, std::nullopt, false});
  rels.push_back({"eta3 != 0", {{1, f_second_label(1)}, {-1, f_second_label(3)}}, std::nullopt, false});
  return rels;
}

// A class written as e E + k sum F_ii + eta_j (j = 0 for no torsion), when
// it has that shape.
struct SymbolicClass {
  std::int64_t e = 0;
  std::int64_t sum_f = 0;
  int eta = 0;

  friend bool operator==(const SymbolicClass&, const SymbolicClass&) = default;

  std::string str() const {
    std::string s = std::to_string(e) + "E";
    if (sum_f != 0) s += " + " + (sum_f == 1 ? std::string() : std::to_string(sum_f)) + "ΣF_ii";
    if (eta != 0) s += " + η" + std::to_string(eta);
    return s;
  }
};

inline std::optional<SymbolicClass> decompose(const BuildingData& bd, const SurfaceClass& c) {
  const int n = family_size(bd);
  GroupElement sum_half(bd.group_spec);
  for (int i = 1; i <= n; ++i) sum_half += bd.points_c.at(family::f_half_label(i));

  if (c.c.degree % n != 0) return std::nullopt;
  const auto k = c.c.degree / n;
  const auto rest = c.c.pic0 - k * sum_half;
  for (auto v : rest.free())
    if (v != 0) return std::nullopt;
  return SymbolicClass{c.a, k, static_cast<int>(rest.tors()[0] + 2 * rest.tors()[1])};
}

struct RelationRow {
  Character chi;
  Character chi2;
  SurfaceClass lhs;
  SurfaceClass rhs;
  std::vector<std::string> middle;  // nonempty D_sigma terms, then L_{chi chi'}
  std::optional<SymbolicClass> lhs_symbolic;
  std::optional<SymbolicClass> rhs_symbolic;
  SymbolicClass expected;
  bool equal = false;

  // Both sides agree and read as the expected symbolic class.
  bool matches() const { return equal && lhs_symbolic == expected && rhs_symbolic == expected; }
};

// The six relations on L_100, L_010, L_001 that generate the rest, with the
// right-hand sides the construction is designed to produce.
inline std::vector<RelationRow> relations_table(const BuildingData& bd) {
  (void)family_size(bd);
  struct Expected {
    const char* chi;
    const char* chi2;
    SymbolicClass rhs;
  };
  static const std::array<Expected, 6> rows = {{
      {"100", "100", {6, 2, 0}},
      {"100", "010", {4, 2, 1}},
      {"100", "001", {4, 2, 2}},
      {"010", "010", {2, 2, 0}},
      {"010", "001", {2, 2, 3}},
      {"001", "001", {2, 2, 0}},
  }};

  std::vector<RelationRow> table;
  for (const auto& row : rows) {
    RelationRow r;
    r.chi = Character::parse(row.chi);
    r.chi2 = Character::parse(row.chi2);
    r.expected = row.rhs;
    r.lhs = bd.line_class(r.chi) + bd.line_class(r.chi2);
    r.rhs = bd.branch_sum(r.chi, r.chi2);
    for (auto sigma : nontrivial_elements(bd.n))
      if (pair(r.chi, sigma) == -1 && pair(r.chi2, sigma) == -1 && !bd.branch(sigma).empty())
        r.middle.push_back("D_" + sigma.str());
    const auto prod = mul(r.chi, r.chi2);
    if (!prod.is_zero()) {
      r.rhs += bd.line_class(prod);
      r.middle.push_back("L_" + prod.str());
    }
    r.equal = r.lhs == r.rhs;
    r.lhs_symbolic = decompose(bd, r.lhs);
    r.rhs_symbolic = decompose(bd, r.rhs);
    table.push_back(std::move(r));
  }
  return table;
}

}  // namespace zcover
