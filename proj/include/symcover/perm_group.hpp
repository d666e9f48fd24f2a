#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcover/permutation.hpp"

namespace symcover {

using GroupOrder = boost::multiprecision::cpp_int;

/// Permutation group with a base and strong generating set computed by the
/// deterministic Schreier-Sims algorithm. Order and membership are exact.
class PermGroup {
 public:
  /// `base_prefix` fixes the first base points (the base is extended as
  /// needed). Identity generators are dropped.
  PermGroup(int degree, std::vector<Permutation> generators,
            std::span<const int> base_prefix = {});

  int degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }
  std::span<const int> base() const { return base_; }
  /// |orbit of base point i under the stabilizer of base points 0..i-1|.
  std::vector<std::size_t> fundamental_orbit_sizes() const;
  /// Product of the fundamental orbit sizes.
  GroupOrder order() const;
  bool is_trivial() const { return generators_.empty(); }

  /// Sifts through the stabilizer chain.
  bool contains(const Permutation& p) const;
  std::vector<int> orbit(int point) const;
  /// Orbit index per point, numbered by smallest member.
  std::vector<int> orbit_partition() const;
  bool is_transitive() const;

  /// Union of the strong generators over all levels.
  std::vector<Permutation> strong_generators() const;
  PermGroup stabilizer(int point) const;
  PermGroup pointwise_stabilizer(std::span<const int> points) const;
  /// All elements; throws if the order exceeds `limit`.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const;

 private:
  struct Level {
    int point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into orbit/transversal, -1 if absent
    std::vector<Permutation> transversal;  // transversal[k] maps `point` to orbit[k]
  };

  void schreier_sims();
  void add_level(int point);
  void rebuild_transversal(Level& level) const;
  /// Sifts h from level `from`; returns the residue and the level reached.
  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

}  // namespace symcover
