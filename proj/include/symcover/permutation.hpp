#pragma once

#include <span>
#include <string>
#include <vector>

namespace symcover {

/// Bijection of {0..n-1}. Acts on the right: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Apply *this, then `other`.
  Permutation operator*(const Permutation& other) const;
  /// this^-1 * other * this: conjugate of `other` by *this in right-action notation.
  Permutation conjugate(const Permutation& other) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// Disjoint cycles on 0-based points, e.g. "(0,1,2)(3,4)"; "()" for the identity.
  std::string cycle_string() const;

 private:
  std::vector<int> images_;
};

}  // namespace symcover
