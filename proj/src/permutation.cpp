#include "symcover/permutation.hpp"

#include <stdexcept>

namespace symcover {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.images_.size() != images_.size()) {
    throw std::invalid_argument("Permutation: degree mismatch in product");
  }
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[i] = other.images_[static_cast<std::size_t>(images_[i])];
  }
  return p;
}

Permutation Permutation::conjugate(const Permutation& other) const {
  return inverse() * other * *this;
}

std::string Permutation::cycle_string() const {
  std::string s;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == static_cast<int>(i)) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(images_[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace symcover
