#include "symcover/gf2.hpp"

#include <stdexcept>

namespace symcover {

GF2Vector::GF2Vector(int dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("GF2Vector: dimension " + std::to_string(dim) +
                                " outside 1..64");
  }
  if ((bits & ~low_mask(dim)) != 0) {
    throw std::invalid_argument("GF2Vector: bits set beyond dimension " +
                                std::to_string(dim));
  }
}

GF2Vector GF2Vector::unit(int dim, int i) {
  if (i < 0 || i >= dim) throw std::invalid_argument("GF2Vector::unit: index out of range");
  return GF2Vector(dim, std::uint64_t{1} << i);
}

GF2Vector& GF2Vector::operator+=(const GF2Vector& o) {
  if (o.dim_ != dim_) {
    throw std::invalid_argument("GF2Vector: dimension mismatch (" + std::to_string(dim_) +
                                " vs " + std::to_string(o.dim_) + ")");
  }
  bits_ ^= o.bits_;
  return *this;
}

std::string GF2Vector::to_hex() const { return symcover::to_hex(bits_); }

std::string GF2Vector::to_bitstring() const {
  std::string s(static_cast<std::size_t>(dim_), '0');
  for (int i = 0; i < dim_; ++i) {
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::string to_hex(std::uint64_t w) {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (w == 0) return "0";
  std::string s;
  while (w != 0) {
    s.insert(s.begin(), kDigits[w & 0xf]);
    w >>= 4;
  }
  return s;
}

std::uint64_t parse_hex(const std::string& s) {
  std::size_t start = 0;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) start = 2;
  if (start == s.size() || s.size() - start > 16) {
    throw std::invalid_argument("invalid hex word '" + s + "'");
  }
  std::uint64_t w = 0;
  for (std::size_t i = start; i < s.size(); ++i) {
    const char c = s[i];
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument("invalid hex word '" + s + "'");
    w = (w << 4) | static_cast<std::uint64_t>(d);
  }
  return w;
}

namespace gf2 {

std::uint64_t EchelonBasis::reduce(std::uint64_t w) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if ((w >> pivots_[k]) & 1) w ^= rows_[k];
  }
  return w;
}

bool EchelonBasis::insert(std::uint64_t w) {
  w = reduce(w);
  if (w == 0) return false;
  const int p = 63 - std::countl_zero(w);
  // Keep rows sorted by decreasing pivot so a single pass reduces fully.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] > p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), w);
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

int rank(std::span<const std::uint64_t> rows) {
  EchelonBasis e;
  for (auto w : rows) e.insert(w);
  return e.size();
}

bool independent(std::span<const std::uint64_t> rows) {
  return rank(rows) == static_cast<int>(rows.size());
}

bool independent(std::span<const GF2Vector> vectors) {
  EchelonBasis e;
  for (const auto& v : vectors) {
    if (!e.insert(v.bits())) return false;
  }
  return true;
}

std::vector<std::uint64_t> nullspace(std::span<const std::uint64_t> rows, int dim) {
  // Reduced row echelon form, then read the kernel off the free columns.
  std::vector<std::uint64_t> m(rows.begin(), rows.end());
  std::vector<int> pivot_col;
  std::size_t next = 0;
  for (int col = 0; col < dim && next < m.size(); ++col) {
    std::size_t sel = next;
    while (sel < m.size() && !((m[sel] >> col) & 1)) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[next]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != next && ((m[i] >> col) & 1)) m[i] ^= m[next];
    }
    pivot_col.push_back(col);
    ++next;
  }
  std::uint64_t pivots = 0;
  for (int c : pivot_col) pivots |= std::uint64_t{1} << c;

  std::vector<std::uint64_t> basis;
  for (int free = 0; free < dim; ++free) {
    if ((pivots >> free) & 1) continue;
    std::uint64_t v = std::uint64_t{1} << free;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      if ((m[k] >> free) & 1) v |= std::uint64_t{1} << pivot_col[k];
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace gf2
}  // namespace symcover
