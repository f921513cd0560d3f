#pragma once

// Divisor classes on Y = P^1 x C, C an elliptic curve.
//
// Pic(Y) = Pic(P^1) + Pic(C), so a class is a pair (a, c): a times the
// fiber E of the projection to P^1, plus the pullback of a class c on C.
// Classes on C are (degree, pic0) with pic0 = c - degree * p0 for a fixed
// base point p0.  Intersections: E^2 = 0, F^2 = 0, E.F = 1.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "zcover/abgroup.hpp"

namespace zcover {

struct CurveClass {
  std::int64_t degree = 0;
  GroupElement pic0;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// A point of C, identified with its Abel-Jacobi image [p - p0].
struct PointOnC {
  std::string label;
  GroupElement aj;
};

// Points of P^1 carry no class data: all of them are linearly equivalent.
struct PointOnP1 {
  std::string label;
};

struct SurfaceClass {
  std::int64_t a = 0;
  CurveClass c;

  static SurfaceClass zero(const GroupSpec& spec) { return {0, {0, GroupElement(spec)}}; }
  // The fiber class E of Y -> P^1 (an elliptic fiber).
  static SurfaceClass elliptic_fiber(const GroupSpec& spec) { return {1, {0, GroupElement(spec)}}; }
  // The fiber of Y -> C over a point with Abel-Jacobi image `aj`.
  static SurfaceClass rational_fiber(const GroupElement& aj) { return {0, {1, aj}}; }
  // K_Y = -2E.
  static SurfaceClass canonical(const GroupSpec& spec) { return {-2, {0, GroupElement(spec)}}; }

  const GroupSpec& spec() const { return c.pic0.spec(); }

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;

  friend SurfaceClass operator+(const SurfaceClass& u, const SurfaceClass& v) {
    return {detail::checked_add(u.a, v.a), {detail::checked_add(u.c.degree, v.c.degree), u.c.pic0 + v.c.pic0}};
  }
  friend SurfaceClass operator-(const SurfaceClass& u) {
    return {detail::checked_sub(0, u.a), {detail::checked_sub(0, u.c.degree), -u.c.pic0}};
  }
  friend SurfaceClass operator-(const SurfaceClass& u, const SurfaceClass& v) { return u + (-v); }
  friend SurfaceClass operator*(std::int64_t k, const SurfaceClass& u) {
    return {detail::checked_mul(k, u.a), {detail::checked_mul(k, u.c.degree), k * u.c.pic0}};
  }
  SurfaceClass& operator+=(const SurfaceClass& v) { return *this = *this + v; }
  SurfaceClass& operator-=(const SurfaceClass& v) { return *this = *this - v; }
};

inline std::string to_string(const SurfaceClass& u) {
  return "(" + std::to_string(u.a) + ", (" + std::to_string(u.c.degree) + ", " + to_string(u.c.pic0) + "))";
}

inline std::ostream& operator<<(std::ostream& os, const SurfaceClass& u) { return os << to_string(u); }

inline SurfaceClass class_add(const SurfaceClass& u, const SurfaceClass& v) { return u + v; }

inline std::int64_t intersect(const SurfaceClass& u, const SurfaceClass& v) {
  return detail::checked_add(detail::checked_mul(u.a, v.c.degree), detail::checked_mul(v.a, u.c.degree));
}

// h^0(P^1, O(a)).
inline std::int64_t h0_p1(std::int64_t a) { return a >= 0 ? a + 1 : 0; }

// h^0(C, c) by Riemann-Roch on a genus-1 curve.  Degree 0 is the one place
// where the pic0 coordinate changes a dimension.
inline std::int64_t h0_curve(const CurveClass& c) {
  if (c.degree >= 1) return c.degree;
  if (c.degree == 0 && c.pic0.is_zero()) return 1;
  return 0;
}

// Kunneth: H^0(Y, O(a) x c) = H^0(P^1, O(a)) x H^0(C, c).
inline std::int64_t h0(const SurfaceClass& u) { return detail::checked_mul(h0_p1(u.a), h0_curve(u.c)); }

inline bool is_base_point_free(const SurfaceClass& u) {
  if (h0(u) == 0) throw PreconditionError("is_base_point_free: empty linear system");
  const bool p1_free = u.a >= 0;
  const bool curve_free = u.c.degree >= 2 || (u.c.degree == 0 && u.c.pic0.is_zero());
  return p1_free && curve_free;
}

struct MapReport {
  int image_dim = 0;
  std::optional<std::int64_t> map_degree;
  std::optional<std::int64_t> image_degree;

  friend bool operator==(const MapReport&, const MapReport&) = default;
};

// The map given by |u| is the product of the maps of the two factor systems.
// On P^1, O(a) with a >= 1 embeds.  On C, degree >= 3 embeds, degree 2 is a
// double cover of P^1, and a one-dimensional space of sections is constant.
inline MapReport map_analysis(const SurfaceClass& u) {
  if (h0(u) == 0) throw PreconditionError("map_analysis: empty linear system");

  int dim = 0;
  std::int64_t degree = 1;
  if (u.a >= 1) ++dim;
  if (u.c.degree >= 3) {
    ++dim;
  } else if (u.c.degree == 2) {
    ++dim;
    degree *= 2;
  }

  MapReport r;
  r.image_dim = dim;
  if (dim == 2) {
    r.map_degree = degree;
    r.image_degree = intersect(u, u) / degree;
  }
  return r;
}

}  // namespace zcover
