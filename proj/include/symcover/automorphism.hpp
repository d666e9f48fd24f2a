#pragma once

#include <cstddef>
#include <vector>

#include "symcover/graph.hpp"
#include "symcover/perm_group.hpp"

namespace symcover {

inline constexpr int kMaxAutomorphismVertices = 4096;

/// Ordered partition of the vertex set refined to equitable form.
///
/// Cells are contiguous ranges of `lab`; a cell is identified by its start
/// position. All choices made during refinement depend only on positions and
/// neighbor counts, never on vertex ids, so refinement commutes with
/// relabeling by automorphisms.
class RefinementState {
 public:
  explicit RefinementState(int n);

  int n() const { return static_cast<int>(lab_.size()); }
  bool discrete() const { return cells_ == n(); }
  int cell_count() const { return cells_; }
  std::span<const int> lab() const { return lab_; }
  int cell_start(int v) const { return cell_[static_cast<std::size_t>(v)]; }
  int cell_end(int start) const { return end_[static_cast<std::size_t>(start)]; }
  /// Start of the first smallest non-singleton cell, or -1 when discrete.
  int target_cell() const;

  /// Splits v off the front of its cell and refines from that singleton.
  /// When `expected` is given, stops and returns false as soon as the trace
  /// departs from it.
  bool individualize(const Graph& g, int v, std::vector<int>* trace,
                     const std::vector<int>* expected);
  /// Refines from every cell.
  bool refine_all(const Graph& g, std::vector<int>* trace, const std::vector<int>* expected);

  /// True iff every cell has a uniform neighbor count toward every cell.
  bool is_equitable(const Graph& g) const;

 private:
  bool refine(const Graph& g, std::vector<int> queue, std::vector<int>* trace,
              const std::vector<int>* expected);

  std::vector<int> lab_;
  std::vector<int> cell_;  // vertex -> start of its cell
  std::vector<int> end_;   // start -> one past the end of the cell
  int cells_ = 0;
};

struct AutomorphismSearch {
  PermGroup group;
  /// Vertices individualized along the first path; the chain base.
  std::vector<int> base;
  /// Orbit of base[i] under the pointwise stabilizer of base[0..i-1].
  std::vector<std::size_t> orbit_sizes;
  std::size_t nodes = 0;
};

/// Full automorphism group by individualization-refinement. Deterministic:
/// the target cell is the first smallest non-singleton cell and branching
/// takes vertices in increasing id order. Every generator is checked to
/// preserve the edge set, and the chain order is checked against the search.
AutomorphismSearch automorphism_search(const Graph& g);
PermGroup automorphism_group(const Graph& g);

/// True iff p maps edges to edges (and hence non-edges to non-edges).
bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace symcover
