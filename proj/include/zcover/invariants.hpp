#pragma once

// Invariants of a smooth Z_2^n-cover f: X -> Y = P^1 x C from its building
// data:
//
//   K_X^2    = 2 (2K_Y + sum D_sigma)^2
//   p_g(X)   = p_g(Y) + sum_{chi != 1} h^0(L_chi + K_Y)
//   chi(O_X) = 2^n chi(O_Y) + sum_{chi != 1} L_chi (L_chi + K_Y) / 2
//   q(X)     = p_g - chi(O_X) + 1
//
// and |K_X| is generated by f^*|K_Y + L_chi| + sum_{chi(sigma) = 1} R_sigma
// for chi in J = { chi : |K_Y + L_chi| nonempty }.
//
// Y = P^1 x (elliptic curve) has p_g = 0 and chi(O_Y) = 0.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zcover/cover.hpp"

namespace zcover {

inline constexpr std::int64_t kBasePg = 0;
inline constexpr std::int64_t kBaseChi = 0;

struct CoverInvariants {
  std::int64_t k_squared = 0;
  std::int64_t p_g = 0;
  std::int64_t chi = 0;
  std::int64_t q = 0;
  std::map<Character, std::int64_t> h0_by_character;

  friend bool operator==(const CoverInvariants&, const CoverInvariants&) = default;
};

namespace detail {
inline void require_relations(const BuildingData& bd, const char* who) {
  const auto report = verify_relations(bd);
  if (!report.ok) throw PreconditionError(std::string(who) + ": building data fails the cover relations");
}
}  // namespace detail

// 2K_Y + sum D_sigma; twice the pullback of this class is 2K_X.
inline SurfaceClass doubled_canonical_base(const BuildingData& bd) {
  return 2 * SurfaceClass::canonical(bd.group_spec) + bd.total_branch_class();
}

inline CoverInvariants compute_invariants(const BuildingData& bd) {
  detail::require_relations(bd, "compute_invariants");
  const auto ky = SurfaceClass::canonical(bd.group_spec);

  CoverInvariants inv;
  const auto s = doubled_canonical_base(bd);
  inv.k_squared = detail::checked_mul(2, intersect(s, s));

  std::int64_t chi_sum = 0;
  inv.p_g = kBasePg;
  for (auto chi : nontrivial_characters(bd.n)) {
    const auto l = bd.line_class(chi);
    const auto h = h0(l + ky);
    inv.h0_by_character[chi] = h;
    inv.p_g = detail::checked_add(inv.p_g, h);

    const auto twice = intersect(l, l + ky);
    if (twice % 2 != 0) throw ConsistencyError("compute_invariants: L_" + chi.str() + "(L + K_Y) is odd");
    chi_sum = detail::checked_add(chi_sum, twice / 2);
  }
  inv.chi = detail::checked_add(detail::checked_mul(std::int64_t{1} << bd.n, kBaseChi), chi_sum);
  inv.q = inv.p_g - inv.chi + 1;
  return inv;
}

// One generator f^*|K_Y + L_chi| + sum R_sigma of |K_X|.  R_sigma, the reduced
// preimage of D_sigma, is recorded by the branch components it lies over.
struct CanonicalGenerator {
  Character chi;
  SurfaceClass base_class;  // K_Y + L_chi
  std::int64_t h0 = 0;
  // sigma with chi(sigma) = 1 and D_sigma nonempty.
  std::vector<CoverElement> ramification_elements;
  std::vector<BranchComponent> ramification_components;

  bool has_ramification() const { return !ramification_components.empty(); }
};

struct CanonicalSystemDescription {
  std::vector<Character> contributing;  // J
  std::vector<CanonicalGenerator> generators;
};

inline CanonicalSystemDescription canonical_system(const BuildingData& bd) {
  detail::require_relations(bd, "canonical_system");
  const auto ky = SurfaceClass::canonical(bd.group_spec);
  CanonicalSystemDescription desc;
  for (auto chi : nontrivial_characters(bd.n)) {
    CanonicalGenerator gen;
    gen.chi = chi;
    gen.base_class = bd.line_class(chi) + ky;
    gen.h0 = h0(gen.base_class);
    if (gen.h0 == 0) continue;
    for (auto sigma : nontrivial_elements(bd.n)) {
      if (pair(chi, sigma) != 1) continue;
      const auto comps = bd.branch(sigma);
      if (comps.empty()) continue;
      gen.ramification_elements.push_back(sigma);
      gen.ramification_components.insert(gen.ramification_components.end(), comps.begin(), comps.end());
    }
    desc.contributing.push_back(chi);
    desc.generators.push_back(std::move(gen));
  }
  return desc;
}

struct CanonicalMapReport {
  bool factors_through_cover = false;
  // Set when |J| = 1 but the ramification correction is nonempty, so |K_X|
  // is strictly larger than the pulled-back system.
  bool ramification_obstructs = false;
  std::optional<std::int64_t> degree;
  std::optional<std::int64_t> image_degree;
  std::optional<bool> base_point_free;
};

// When a single character chi contributes and its correction is empty,
// phi_K factors as X -> Y -> image, the first map of degree 2^n, the second
// given by |K_Y + L_chi|.
inline CanonicalMapReport canonical_map_degree(const BuildingData& bd) {
  const auto desc = canonical_system(bd);
  std::int64_t p_g = kBasePg;
  for (const auto& g : desc.generators) p_g += g.h0;
  if (p_g < 3) throw PreconditionError("canonical_map_degree: p_g < 3, the canonical image is not a surface");

  CanonicalMapReport r;
  r.factors_through_cover = desc.generators.size() == 1;
  if (!r.factors_through_cover) return r;

  const auto& gen = desc.generators.front();
  if (gen.has_ramification()) {
    r.ramification_obstructs = true;
    return r;
  }
  const auto m = map_analysis(gen.base_class);
  if (m.image_dim == 2) {
    r.degree = detail::checked_mul(std::int64_t{1} << bd.n, *m.map_degree);
    r.image_degree = m.image_degree;
  }
  r.base_point_free = is_base_point_free(gen.base_class);
  return r;
}

struct MinimalityEvidence {
  std::int64_t self_intersection = 0;
  bool big = false;
  bool nef_on_fibers = false;  // S.E >= 0, S.F >= 0, S.B_i >= 0 for every branch component
};

// K_X is nef and big when 2K_X = f^*S with S nef and big.  This checks S^2 > 0
// and S against the curve classes the model knows: E, a general F and every
// branch component.
inline MinimalityEvidence minimality_evidence(const BuildingData& bd) {
  MinimalityEvidence ev;
  const auto s = doubled_canonical_base(bd);
  ev.self_intersection = intersect(s, s);
  ev.big = ev.self_intersection > 0;

  bool nef = intersect(s, SurfaceClass::elliptic_fiber(bd.group_spec)) >= 0 &&
             intersect(s, SurfaceClass::rational_fiber(GroupElement(bd.group_spec))) >= 0;
  for (const auto& [sigma, comps] : bd.D)
    for (const auto& comp : comps) nef = nef && intersect(s, bd.component_class(comp)) >= 0;
  ev.nef_on_fibers = nef;
  return ev;
}

}  // namespace zcover
