#pragma once

// Independent check of the abstract Pic^0 model on a genuine elliptic curve
// y^2 = x^3 + a x + b over F_p.
//
// Points are enumerated exhaustively, so everything here is desk scale
// (p <= 10^4) and uses nothing but the chord-tangent law.  A realization maps
// each generator of the abstract group to a curve point; the induced
// homomorphism sends a class [q - p0] to a point Q, and every linear
// equivalence of the building data is then re-decided by adding points.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zcover/cover.hpp"

namespace zcover {

inline constexpr std::int64_t kExhaustivePrimeLimit = 10000;

namespace detail {
inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  base = mod(base, p);
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}
}  // namespace detail

struct CurvePoint {
  bool infinity = true;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(std::int64_t x, std::int64_t y) { return {false, x, y}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

inline std::string to_string(const CurvePoint& P) {
  if (P.infinity) return "O";
  return "(" + std::to_string(P.x) + "," + std::to_string(P.y) + ")";
}

class CurveOverFp {
 public:
  CurveOverFp(std::int64_t p, std::int64_t a, std::int64_t b) : p_(p), a_(detail::mod(a, p)), b_(detail::mod(b, p)) {
    if (p < 3 || p >= (std::int64_t{1} << 31) || !detail::is_prime(p))
      throw OracleError("curve: p must be an odd prime below 2^31");
    if (detail::mod(4 * a_ % p_ * a_ % p_ * a_ + 27 * b_ % p_ * b_, p_) == 0)
      throw OracleError("curve: singular (4a^3 + 27b^2 = 0 mod p)");
  }

  std::int64_t p() const { return p_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

  std::int64_t rhs(std::int64_t x) const { return detail::mod((x * x % p_ * x + a_ * x + b_) % p_, p_); }

  bool contains(const CurvePoint& P) const {
    if (P.infinity) return true;
    if (P.x < 0 || P.x >= p_ || P.y < 0 || P.y >= p_) return false;
    return P.y * P.y % p_ == rhs(P.x);
  }

  // Roots of x^3 + a x + b in F_p, by exhaustion.
  std::vector<std::int64_t> cubic_roots() const {
    std::vector<std::int64_t> roots;
    for (std::int64_t x = 0; x < p_; ++x)
      if (rhs(x) == 0) roots.push_back(x);
    return roots;
  }

  bool has_full_two_torsion() const { return cubic_roots().size() == 3; }

  CurvePoint negate(const CurvePoint& P) const {
    if (P.infinity) return P;
    return CurvePoint::affine(P.x, detail::mod(-P.y, p_));
  }

  CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    std::int64_t lambda;
    if (P.x == Q.x) {
      if (detail::mod(P.y + Q.y, p_) == 0) return CurvePoint::at_infinity();
      lambda = (3 * P.x % p_ * P.x + a_) % p_ * inverse(2 * P.y) % p_;
    } else {
      lambda = detail::mod(Q.y - P.y, p_) * inverse(detail::mod(Q.x - P.x, p_)) % p_;
    }
    const auto x3 = detail::mod(lambda * lambda - P.x - Q.x, p_);
    const auto y3 = detail::mod(lambda * detail::mod(P.x - x3, p_) - P.y, p_);
    return CurvePoint::affine(x3, y3);
  }

  CurvePoint twice(const CurvePoint& P) const { return add(P, P); }

  CurvePoint multiply(std::int64_t k, CurvePoint P) const {
    if (k < 0) {
      k = -k;
      P = negate(P);
    }
    CurvePoint r = CurvePoint::at_infinity();
    while (k > 0) {
      if (k & 1) r = add(r, P);
      P = add(P, P);
      k >>= 1;
    }
    return r;
  }

  // Every point of the curve, O first, then by (x, y).
  std::vector<CurvePoint> points() const {
    if (p_ > kExhaustivePrimeLimit) throw OracleError("curve: p too large for exhaustive enumeration");
    std::vector<std::int64_t> root(p_, -1);
    for (std::int64_t y = p_ - 1; y >= 0; --y) root[y * y % p_] = y;
    std::vector<CurvePoint> pts{CurvePoint::at_infinity()};
    for (std::int64_t x = 0; x < p_; ++x) {
      const auto r = rhs(x);
      if (root[r] < 0) continue;
      const auto y = root[r];
      pts.push_back(CurvePoint::affine(x, y));
      if (y != 0) pts.push_back(CurvePoint::affine(x, p_ - y));
    }
    std::sort(pts.begin() + 1, pts.end());
    return pts;
  }

 private:
  std::int64_t inverse(std::int64_t v) const { return detail::pow_mod(v, p_ - 2, p_); }

  std::int64_t p_, a_, b_;
};

struct GroupStructure {
  std::int64_t order = 0;
  // E(F_p) = Z/d1 + Z/d2 with d1 | d2.
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;
};

// Order of P, given a multiple N of it.
inline std::int64_t point_order(const CurveOverFp& c, const CurvePoint& P, std::int64_t N) {
  std::int64_t d = N;
  for (auto q : detail::prime_factors(N))
    while (d % q == 0 && c.multiply(d / q, P).infinity) d /= q;
  return d;
}

inline GroupStructure group_structure(const CurveOverFp& c) {
  if (c.p() > kExhaustivePrimeLimit) throw OracleError("group_structure: p too large for exhaustive mode");
  const auto pts = c.points();
  GroupStructure g;
  g.order = static_cast<std::int64_t>(pts.size());
  for (const auto& P : pts) g.d2 = std::max(g.d2, point_order(c, P, g.order));
  g.d1 = g.order / g.d2;
  return g;
}

// All Q with 2Q = P, by exhaustion.
inline std::vector<CurvePoint> curve_halvings(const CurveOverFp& c, std::span<const CurvePoint> pts, const CurvePoint& P) {
  std::vector<CurvePoint> out;
  for (const auto& Q : pts)
    if (c.twice(Q) == P) out.push_back(Q);
  return out;
}

// Images of the free and torsion generators of the abstract group.
struct Assignment {
  std::vector<CurvePoint> free_images;
  std::vector<CurvePoint> torsion_images;
};

// The homomorphism from the abstract group to E(F_p) fixed by an assignment.
class Realization {
 public:
  Realization(const CurveOverFp& curve, const GroupSpec& spec, Assignment assignment)
      : curve_(curve), spec_(spec), asg_(std::move(assignment)) {
    if (asg_.free_images.size() != static_cast<std::size_t>(spec_.rank) ||
        asg_.torsion_images.size() != spec_.torsion.size())
      throw OracleError("realization: assignment does not cover every generator");
    for (const auto& P : asg_.free_images)
      if (!curve_.contains(P)) throw OracleError("realization: " + to_string(P) + " is not on the curve");
    const auto N = curve_.p() <= kExhaustivePrimeLimit ? static_cast<std::int64_t>(curve_.points().size()) : 0;
    for (std::size_t i = 0; i < asg_.torsion_images.size(); ++i) {
      const auto& T = asg_.torsion_images[i];
      if (!curve_.contains(T)) throw OracleError("realization: " + to_string(T) + " is not on the curve");
      const auto m = spec_.torsion[i];
      const auto ord = N ? point_order(curve_, T, N) : 0;
      if (ord != m)
        throw OracleError("realization: torsion generator " + std::to_string(i) + " has order " + std::to_string(m) +
                          " but its image " + to_string(T) + " has order " + std::to_string(ord));
    }
  }

  const CurveOverFp& curve() const { return curve_; }

  CurvePoint operator()(const GroupElement& x) const {
    if (x.spec() != spec_) throw ShapeError("realization: element of another group");
    CurvePoint r = CurvePoint::at_infinity();
    for (std::size_t k = 0; k < x.free().size(); ++k) r = curve_.add(r, curve_.multiply(x.free()[k], asg_.free_images[k]));
    for (std::size_t k = 0; k < x.tors().size(); ++k) r = curve_.add(r, curve_.multiply(x.tors()[k], asg_.torsion_images[k]));
    return r;
  }

 private:
  CurveOverFp curve_;
  GroupSpec spec_;
  Assignment asg_;
};

// A divisor class on Y with its Pic^0 part realized as a curve point.
struct RealizedClass {
  std::int64_t a = 0;
  std::int64_t degree = 0;
  CurvePoint point;

  friend bool operator==(const RealizedClass&, const RealizedClass&) = default;
};

struct RelationCheck {
  Character chi;
  Character chi2;
  bool abstract_holds = false;
  bool realized_holds = false;
};

struct PointCheck {
  std::string name;
  bool abstract_holds = false;
  bool realized_holds = false;
  // For relations 2X = Y + Z: number of curve points halving Y + Z, and
  // whether X is one of them.
  std::optional<std::size_t> halves;
  std::optional<bool> among_halves;
};

struct RealizationReport {
  std::int64_t prime = 0;
  std::vector<RelationCheck> relations;
  std::vector<PointCheck> points;
  std::vector<std::pair<std::string, std::string>> collisions;  // equal realized points
  std::vector<std::string> discrepancies;

  bool injective() const { return collisions.empty(); }
  bool ok() const { return discrepancies.empty(); }
  bool all_relations_realized() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.realized_holds; });
  }
};

// Re-decides every cover relation and every supplied point relation with
// curve arithmetic.  Branch components contribute the realized points they
// lie over; L_chi contribute the image of their Pic^0 part.  A discrepancy is
// any verdict that differs from the abstract model, or a collision of
// realized points whose abstract classes differ.
inline RealizationReport realize(const BuildingData& bd, const CurveOverFp& curve, const Assignment& assignment,
                                 std::span<const PointRelation> point_relations = {}) {
  validate_structure(bd);
  const Realization phi(curve, bd.group_spec, assignment);
  RealizationReport report;
  report.prime = curve.p();

  std::map<std::string, CurvePoint> q;
  for (const auto& [label, aj] : bd.points_c) q[label] = phi(aj);

  std::map<CurvePoint, std::string> seen;
  for (const auto& [label, P] : q) {
    auto [it, inserted] = seen.emplace(P, label);
    if (inserted) continue;
    report.collisions.emplace_back(it->second, label);
    if (bd.points_c.at(it->second) != bd.points_c.at(label))
      report.discrepancies.push_back("points " + it->second + " and " + label + " collide on the curve");
  }

  auto realize_class = [&](const SurfaceClass& u) { return RealizedClass{u.a, u.c.degree, phi(u.c.pic0)}; };
  auto plus = [&](const RealizedClass& x, const RealizedClass& y) {
    return RealizedClass{x.a + y.a, x.degree + y.degree, curve.add(x.point, y.point)};
  };
  auto component = [&](const BranchComponent& comp) {
    if (comp.kind == FiberKind::elliptic) return RealizedClass{1, 0, CurvePoint::at_infinity()};
    return RealizedClass{0, 1, q.at(comp.label)};
  };

  const auto chars = nontrivial_characters(bd.n);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = i; j < chars.size(); ++j) {
      const auto chi = chars[i], chi2 = chars[j];
      const auto lhs = plus(realize_class(bd.line_class(chi)), realize_class(bd.line_class(chi2)));
      auto rhs = realize_class(bd.line_class(mul(chi, chi2)));
      for (auto sigma : nontrivial_elements(bd.n))
        if (pair(chi, sigma) == -1 && pair(chi2, sigma) == -1)
          for (const auto& comp : bd.branch(sigma)) rhs = plus(rhs, component(comp));

      RelationCheck check{chi, chi2, false, lhs == rhs};
      check.abstract_holds = bd.line_class(chi) + bd.line_class(chi2) == bd.line_class(mul(chi, chi2)) + bd.branch_sum(chi, chi2);
      if (check.abstract_holds != check.realized_holds)
        report.discrepancies.push_back("relation (" + chi.str() + "," + chi2.str() + ") disagrees");
      report.relations.push_back(check);
    }
  }

  std::vector<CurvePoint> all_points;
  for (const auto& rel : point_relations) {
    PointCheck check;
    check.name = rel.name;
    check.abstract_holds = rel.evaluate(bd).is_zero() == rel.expect_zero;

    CurvePoint sum = CurvePoint::at_infinity();
    for (const auto& [coeff, label] : rel.terms) {
      auto it = q.find(label);
      if (it == q.end()) throw ConsistencyError("point relation '" + rel.name + "': unknown point '" + label + "'");
      sum = curve.add(sum, curve.multiply(coeff, it->second));
    }
    if (rel.offset) sum = curve.add(sum, curve.negate(phi(*rel.offset)));
    check.realized_holds = sum.infinity == rel.expect_zero;

    const bool halving_shape = !rel.offset && rel.terms.size() == 3 && rel.terms[0].first == 2 &&
                               rel.terms[1].first == -1 && rel.terms[2].first == -1;
    if (halving_shape && curve.p() <= kExhaustivePrimeLimit) {
      if (all_points.empty()) all_points = curve.points();
      const auto target = curve.add(q.at(rel.terms[1].second), q.at(rel.terms[2].second));
      const auto halves = curve_halvings(curve, all_points, target);
      check.halves = halves.size();
      check.among_halves = std::find(halves.begin(), halves.end(), q.at(rel.terms[0].second)) != halves.end();
      if (*check.among_halves != check.realized_holds)
        report.discrepancies.push_back(rel.name + ": halving enumeration disagrees with doubling");
    }
    if (check.abstract_holds != check.realized_holds) report.discrepancies.push_back(rel.name + " disagrees");
    report.points.push_back(std::move(check));
  }
  return report;
}

// Elements whose images must be nonzero for a realization of `bd` to decide
// its identities faithfully: differences of distinct declared points and the
// residual lhs - rhs of every failing cover relation.
inline std::vector<GroupElement> audit_elements(const BuildingData& bd) {
  std::vector<GroupElement> out;
  std::vector<GroupElement> pts;
  for (const auto& [label, aj] : bd.points_c) pts.push_back(aj);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] != pts[j]) out.push_back(pts[i] - pts[j]);

  const auto chars = nontrivial_characters(bd.n);
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i; j < chars.size(); ++j) {
      const auto lhs = bd.line_class(chars[i]) + bd.line_class(chars[j]);
      const auto rhs = bd.line_class(mul(chars[i], chars[j])) + bd.branch_sum(chars[i], chars[j]);
      if (lhs.a == rhs.a && lhs.c.degree == rhs.c.degree && lhs.c.pic0 != rhs.c.pic0)
        out.push_back(lhs.c.pic0 - rhs.c.pic0);
    }
  return out;
}

// Searches (deterministically, from `seed`) for an assignment under which
// every nonzero element in `audit` has a nonzero image.  Homomorphisms send
// zero to zero, so such an assignment decides every identity in the audited
// instances exactly as the abstract model does.  Torsion generators of order
// m go to points of exact order m.
inline Assignment search_assignment(const CurveOverFp& curve, const GroupSpec& spec, std::span<const GroupElement> audit,
                                    std::uint64_t seed = 1, int max_attempts = 2000) {
  const auto pts = curve.points();
  const auto N = static_cast<std::int64_t>(pts.size());
  std::map<std::int64_t, std::vector<CurvePoint>> by_order;
  for (const auto& P : pts) by_order[point_order(curve, P, N)].push_back(P);
  for (auto m : spec.torsion)
    if (by_order[m].empty())
      throw OracleError("search_assignment: the curve has no point of order " + std::to_string(m));

  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<CurvePoint>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Assignment asg;
    for (int k = 0; k < spec.rank; ++k) asg.free_images.push_back(pick(pts));
    for (auto m : spec.torsion) asg.torsion_images.push_back(pick(by_order[m]));

    // Torsion images must generate a copy of the abstract torsion subgroup.
    if (spec.torsion_order() <= 4096) {
      std::vector<std::int64_t> t(spec.torsion.size(), 0);
      bool faithful = true;
      Realization phi(curve, spec, asg);
      for (;;) {
        std::size_t k = 0;
        while (k < t.size() && ++t[k] == spec.torsion[k]) t[k++] = 0;
        if (k == t.size()) break;
        if (phi(GroupElement(spec, std::vector<std::int64_t>(spec.rank, 0), t)).infinity) {
          faithful = false;
          break;
        }
      }
      if (!faithful) continue;
    }

    Realization phi(curve, spec, asg);
    if (std::all_of(audit.begin(), audit.end(), [&](const GroupElement& x) { return x.is_zero() || !phi(x).infinity; }))
      return asg;
  }
  throw OracleError("search_assignment: no faithful assignment found");
}

}  // namespace zcover
