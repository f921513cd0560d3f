#pragma once

// The elementary abelian group Z_2^n (1 <= n <= 8), its elements and its
// characters, both stored as n-bit vectors.  Bit strings are read left to
// right: "100" is the character chi_100 = (j1, j2, j3) = (1, 0, 0).

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zcover/errors.hpp"

namespace zcover {

inline constexpr int kMaxCoverRank = 8;

template <class Tag>
class BitVector {
 public:
  BitVector() = default;

  // `bits` uses the first coordinate as the most significant bit.
  BitVector(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxCoverRank) throw PreconditionError("Z_2^n: n must lie in [1, 8]");
    if (bits >> n) throw PreconditionError("Z_2^n: bit pattern wider than n");
  }

  static BitVector parse(std::string_view s) {
    if (s.empty() || s.size() > static_cast<std::size_t>(kMaxCoverRank))
      throw PreconditionError("Z_2^n: bad bit string '" + std::string(s) + "'");
    std::uint32_t bits = 0;
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw PreconditionError("Z_2^n: bad bit string '" + std::string(s) + "'");
      bits = (bits << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    return BitVector(static_cast<int>(s.size()), bits);
  }

  // The vector with a single 1 in coordinate i (0-based, left to right).
  static BitVector unit(int n, int i) { return BitVector(n, 1u << (n - 1 - i)); }

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool bit(int i) const { return (bits_ >> (n_ - 1 - i)) & 1u; }

  std::string str() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
      if (bit(i)) s[i] = '1';
    return s;
  }

  friend BitVector operator^(BitVector x, BitVector y) {
    require_same(x, y);
    return BitVector(x.n_, x.bits_ ^ y.bits_);
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

  static void require_same(BitVector x, BitVector y) {
    if (x.n_ != y.n_) throw ShapeError("Z_2^n: dimension mismatch");
  }

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

struct CharacterTag {};
struct CoverElementTag {};

using Character = BitVector<CharacterTag>;
using CoverElement = BitVector<CoverElementTag>;

// chi(sigma) = (-1)^{<chi, sigma>}.
inline int pair(Character chi, CoverElement sigma) {
  if (chi.n() != sigma.n()) throw ShapeError("pair: dimension mismatch");
  return (std::popcount(chi.bits() & sigma.bits()) % 2 == 0) ? 1 : -1;
}

inline Character mul(Character x, Character y) { return x ^ y; }

namespace detail {
template <class V>
std::vector<V> nonzero_vectors(int n) {
  if (n < 1 || n > kMaxCoverRank) throw PreconditionError("Z_2^n: n must lie in [1, 8]");
  std::vector<V> out;
  out.reserve((1u << n) - 1);
  for (std::uint32_t b = 1; b < (1u << n); ++b) out.emplace_back(n, b);
  return out;
}
}  // namespace detail

// Lexicographic bit-string order: "001", "010", ..., "111".
inline std::vector<Character> nontrivial_characters(int n) { return detail::nonzero_vectors<Character>(n); }
inline std::vector<CoverElement> nontrivial_elements(int n) { return detail::nonzero_vectors<CoverElement>(n); }

}  // namespace zcover
