#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symcover {

inline constexpr int kMaxDim = 64;

/// Mask with the low `dim` bits set.
constexpr std::uint64_t low_mask(int dim) {
  return dim >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dim) - 1);
}

constexpr bool parity(std::uint64_t w) { return (std::popcount(w) & 1) != 0; }

/// A vector of F_2^dim packed into one machine word; coordinate i lives in bit i.
class GF2Vector {
 public:
  GF2Vector() = default;
  GF2Vector(int dim, std::uint64_t bits);

  static GF2Vector zero(int dim) { return GF2Vector(dim, 0); }
  /// The i-th standard basis vector, 0-based.
  static GF2Vector unit(int dim, int i);

  int dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](int i) const { return ((bits_ >> i) & 1) != 0; }
  int weight() const { return std::popcount(bits_); }
  bool is_zero() const { return bits_ == 0; }

  GF2Vector& operator+=(const GF2Vector& o);
  friend GF2Vector operator+(GF2Vector a, const GF2Vector& b) { return a += b; }
  bool operator==(const GF2Vector&) const = default;

  /// Lowercase hex of the bit word, no prefix ("0" for the zero vector).
  std::string to_hex() const;
  /// Coordinates as a 0/1 string, coordinate 1 first.
  std::string to_bitstring() const;

 private:
  int dim_ = 0;
  std::uint64_t bits_ = 0;
};

std::string to_hex(std::uint64_t w);
/// Parses lowercase or uppercase hex with an optional 0x prefix.
std::uint64_t parse_hex(const std::string& s);

namespace gf2 {

/// Rank of a set of row words.
int rank(std::span<const std::uint64_t> rows);
bool independent(std::span<const std::uint64_t> rows);
bool independent(std::span<const GF2Vector> vectors);

/// Basis of {x : M x = 0} for a dim x dim matrix whose row i is rows[i]
/// (bit j of rows[i] is entry (i, j)).
std::vector<std::uint64_t> nullspace(std::span<const std::uint64_t> rows, int dim);

/// Incrementally maintained echelon basis for span/membership tests.
class EchelonBasis {
 public:
  /// Reduces w against the basis; zero iff w lies in the span.
  std::uint64_t reduce(std::uint64_t w) const;
  bool contains(std::uint64_t w) const { return reduce(w) == 0; }
  /// Inserts w; returns false when w was already in the span.
  bool insert(std::uint64_t w);
  int size() const { return static_cast<int>(rows_.size()); }

 private:
  // rows_[k] has leading (highest) bit pivots_[k]; pivots are distinct.
  std::vector<std::uint64_t> rows_;
  std::vector<int> pivots_;
};

}  // namespace gf2
}  // namespace symcover
