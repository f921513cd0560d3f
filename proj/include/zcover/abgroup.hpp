#pragma once

// Finitely generated abelian groups Z^r + Z/m_1 + ... + Z/m_k.
//
// This is the model of Pic^0 of the elliptic curve: every class the
// construction touches is an integer combination of finitely many points plus
// 2-torsion, so a free-by-finite group decides all linear equivalences.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "zcover/errors.hpp"

namespace zcover {

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("zcover: integer overflow in add");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("zcover: integer overflow in sub");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("zcover: integer overflow in mul");
  return r;
}

// Least non-negative residue.
inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

struct GroupSpec {
  int rank = 0;
  std::vector<std::int64_t> torsion;

  GroupSpec() = default;
  GroupSpec(int r, std::vector<std::int64_t> orders) : rank(r), torsion(std::move(orders)) {
    if (rank < 0) throw PreconditionError("GroupSpec: negative rank");
    for (auto m : torsion)
      if (m < 2) throw PreconditionError("GroupSpec: torsion orders must be >= 2");
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  // Number of elements y with 2y = 0.
  std::int64_t two_torsion_count() const {
    std::int64_t c = 1;
    for (auto m : torsion)
      if (m % 2 == 0) c *= 2;
    return c;
  }

  // Order of the torsion subgroup; the group is finite iff rank == 0.
  std::int64_t torsion_order() const {
    std::int64_t c = 1;
    for (auto m : torsion) c = detail::checked_mul(c, m);
    return c;
  }
};

inline std::ostream& operator<<(std::ostream& os, const GroupSpec& g) {
  os << "Z^" << g.rank;
  for (auto m : g.torsion) os << " + Z/" << m;
  return os;
}

class GroupElement {
 public:
  GroupElement() = default;

  // Identity of `spec`.
  explicit GroupElement(GroupSpec spec)
      : spec_(std::move(spec)), free_(spec_.rank, 0), tors_(spec_.torsion.size(), 0) {}

  GroupElement(GroupSpec spec, std::vector<std::int64_t> free, std::vector<std::int64_t> tors)
      : spec_(std::move(spec)), free_(std::move(free)), tors_(std::move(tors)) {
    if (free_.size() != static_cast<std::size_t>(spec_.rank) || tors_.size() != spec_.torsion.size())
      throw ShapeError("GroupElement: coordinate vector lengths do not match the group");
    for (std::size_t i = 0; i < tors_.size(); ++i) tors_[i] = detail::mod(tors_[i], spec_.torsion[i]);
  }

  // i-th free generator.
  static GroupElement free_generator(const GroupSpec& spec, int i) {
    GroupElement e(spec);
    e.free_.at(i) = 1;
    return e;
  }

  // i-th torsion generator, of order spec.torsion[i].
  static GroupElement torsion_generator(const GroupSpec& spec, int i) {
    GroupElement e(spec);
    e.tors_.at(i) = 1;
    return e;
  }

  const GroupSpec& spec() const { return spec_; }
  std::span<const std::int64_t> free() const { return free_; }
  std::span<const std::int64_t> tors() const { return tors_; }

  bool is_zero() const {
    for (auto v : free_)
      if (v != 0) return false;
    for (auto v : tors_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& x, const GroupElement& y) {
    if (auto c = x.free_ <=> y.free_; c != 0) return c;
    return x.tors_ <=> y.tors_;
  }

  friend GroupElement operator+(const GroupElement& x, const GroupElement& y) {
    require_same(x, y);
    GroupElement r(x.spec_);
    for (std::size_t i = 0; i < r.free_.size(); ++i) r.free_[i] = detail::checked_add(x.free_[i], y.free_[i]);
    for (std::size_t i = 0; i < r.tors_.size(); ++i)
      r.tors_[i] = (x.tors_[i] + y.tors_[i]) % x.spec_.torsion[i];
    return r;
  }

  friend GroupElement operator-(const GroupElement& x) {
    GroupElement r(x.spec_);
    for (std::size_t i = 0; i < r.free_.size(); ++i) r.free_[i] = detail::checked_sub(0, x.free_[i]);
    for (std::size_t i = 0; i < r.tors_.size(); ++i) r.tors_[i] = detail::mod(-x.tors_[i], x.spec_.torsion[i]);
    return r;
  }

  friend GroupElement operator-(const GroupElement& x, const GroupElement& y) { return x + (-y); }

  friend GroupElement operator*(std::int64_t k, const GroupElement& x) {
    GroupElement r(x.spec_);
    for (std::size_t i = 0; i < r.free_.size(); ++i) r.free_[i] = detail::checked_mul(k, x.free_[i]);
    for (std::size_t i = 0; i < r.tors_.size(); ++i) {
      const auto m = x.spec_.torsion[i];
      r.tors_[i] = detail::mod(detail::mod(k, m) * x.tors_[i], m);
    }
    return r;
  }

  GroupElement& operator+=(const GroupElement& y) { return *this = *this + y; }
  GroupElement& operator-=(const GroupElement& y) { return *this = *this - y; }

 private:
  static void require_same(const GroupElement& x, const GroupElement& y) {
    if (x.spec_ != y.spec_) throw ShapeError("GroupElement: operands belong to different groups");
  }

  GroupSpec spec_;
  std::vector<std::int64_t> free_;
  std::vector<std::int64_t> tors_;
};

inline GroupElement add(const GroupElement& x, const GroupElement& y) { return x + y; }
inline GroupElement scale(std::int64_t k, const GroupElement& x) { return k * x; }
inline bool is_zero(const GroupElement& x) { return x.is_zero(); }

// All y with 2y = x, in lexicographic order of the torsion coordinates.
// Empty when x is not 2-divisible; otherwise exactly two_torsion_count()
// elements.
inline std::vector<GroupElement> halvings(const GroupElement& x) {
  const GroupSpec& spec = x.spec();
  std::vector<std::int64_t> half_free(spec.rank);
  for (int i = 0; i < spec.rank; ++i) {
    if (x.free()[i] % 2 != 0) return {};
    half_free[i] = x.free()[i] / 2;
  }

  // Solutions of 2y = t (mod m), per torsion coordinate.
  std::vector<std::vector<std::int64_t>> choices(spec.torsion.size());
  for (std::size_t i = 0; i < spec.torsion.size(); ++i) {
    const auto m = spec.torsion[i];
    const auto t = x.tors()[i];
    if (m % 2 == 1) {
      choices[i] = {detail::mod(t * ((m + 1) / 2), m)};
    } else {
      if (t % 2 != 0) return {};
      choices[i] = {t / 2, t / 2 + m / 2};
    }
  }

  std::vector<GroupElement> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    std::vector<std::int64_t> tors(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i) tors[i] = choices[i][idx[i]];
    out.emplace_back(spec, half_free, std::move(tors));
    std::size_t k = choices.size();
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
    }
  }
}

inline std::string to_string(const GroupElement& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.free().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.free()[i]);
  }
  s += ";";
  for (std::size_t i = 0; i < x.tors().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.tors()[i]);
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const GroupElement& x) { return os << to_string(x); }

}  // namespace zcover
