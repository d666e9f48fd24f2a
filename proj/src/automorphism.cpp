#include "symcover/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symcover {

RefinementState::RefinementState(int n)
    : lab_(static_cast<std::size_t>(n)),
      cell_(static_cast<std::size_t>(n), 0),
      end_(static_cast<std::size_t>(n), 0),
      cells_(n > 0 ? 1 : 0) {
  std::iota(lab_.begin(), lab_.end(), 0);
  if (n > 0) end_[0] = n;
}

int RefinementState::target_cell() const {
  int best = -1;
  int best_size = n() + 1;
  for (int s = 0; s < n(); s = end_[static_cast<std::size_t>(s)]) {
    const int size = end_[static_cast<std::size_t>(s)] - s;
    if (size > 1 && size < best_size) {
      best = s;
      best_size = size;
    }
  }
  return best;
}

bool RefinementState::individualize(const Graph& g, int v, std::vector<int>* trace,
                                    const std::vector<int>* expected) {
  const int s = cell_[static_cast<std::size_t>(v)];
  const int e = end_[static_cast<std::size_t>(s)];
  if (e - s < 2) throw std::logic_error("individualize: vertex is already a singleton");
  const auto it = std::find(lab_.begin() + s, lab_.begin() + e, v);
  std::iter_swap(lab_.begin() + s, it);
  end_[static_cast<std::size_t>(s)] = s + 1;
  end_[static_cast<std::size_t>(s + 1)] = e;
  for (int p = s + 1; p < e; ++p) cell_[static_cast<std::size_t>(lab_[static_cast<std::size_t>(p)])] = s + 1;
  ++cells_;
  return refine(g, {s}, trace, expected);
}

bool RefinementState::refine_all(const Graph& g, std::vector<int>* trace,
                                 const std::vector<int>* expected) {
  std::vector<int> queue;
  for (int s = 0; s < n(); s = end_[static_cast<std::size_t>(s)]) queue.push_back(s);
  return refine(g, std::move(queue), trace, expected);
}

bool RefinementState::refine(const Graph& g, std::vector<int> queue, std::vector<int>* trace,
                             const std::vector<int>* expected) {
  const int n = this->n();
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  for (int s : queue) queued[static_cast<std::size_t>(s)] = 1;
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::vector<int> touched;
  std::vector<int> touched_cells;
  std::vector<int> scratch;
  std::size_t emitted = trace ? trace->size() : 0;
  std::size_t head = 0;

  const auto emit = [&](int value) {
    if (trace) trace->push_back(value);
    if (expected) {
      if (emitted >= expected->size() || (*expected)[emitted] != value) return false;
    }
    ++emitted;
    return true;
  };

  while (head < queue.size() && cells_ < n) {
    const int w = queue[head++];
    queued[static_cast<std::size_t>(w)] = 0;
    const int we = end_[static_cast<std::size_t>(w)];
    touched.clear();
    for (int p = w; p < we; ++p) {
      for (int x : g.neighbors(lab_[static_cast<std::size_t>(p)])) {
        if (count[static_cast<std::size_t>(x)]++ == 0) touched.push_back(x);
      }
    }
    touched_cells.clear();
    for (int x : touched) touched_cells.push_back(cell_[static_cast<std::size_t>(x)]);
    std::sort(touched_cells.begin(), touched_cells.end());
    touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());

    for (int s : touched_cells) {
      const int e = end_[static_cast<std::size_t>(s)];
      if (e - s == 1) continue;
      const auto cnt = [&](int v) { return count[static_cast<std::size_t>(v)]; };
      const int c0 = cnt(lab_[static_cast<std::size_t>(s)]);
      bool uniform = true;
      for (int p = s + 1; p < e && uniform; ++p) uniform = cnt(lab_[static_cast<std::size_t>(p)]) == c0;
      if (uniform) continue;

      std::stable_sort(lab_.begin() + s, lab_.begin() + e,
                       [&](int a, int b) { return cnt(a) < cnt(b); });
      const bool was_queued = queued[static_cast<std::size_t>(s)] != 0;
      // Fragment starts in order of increasing count.
      scratch.clear();
      for (int p = s; p < e; ++p) {
        if (p == s || cnt(lab_[static_cast<std::size_t>(p)]) != cnt(lab_[static_cast<std::size_t>(p - 1)])) {
          scratch.push_back(p);
        }
      }
      scratch.push_back(e);
      if (!emit(-1) || !emit(s) || !emit(static_cast<int>(scratch.size()) - 1)) return false;
      int largest = 0;
      for (std::size_t f = 0; f + 1 < scratch.size(); ++f) {
        const int fs = scratch[f];
        const int fe = scratch[f + 1];
        if (!emit(cnt(lab_[static_cast<std::size_t>(fs)])) || !emit(fe - fs)) return false;
        end_[static_cast<std::size_t>(fs)] = fe;
        for (int p = fs; p < fe; ++p) cell_[static_cast<std::size_t>(lab_[static_cast<std::size_t>(p)])] = fs;
        if (fe - fs > scratch[static_cast<std::size_t>(largest) + 1] - scratch[static_cast<std::size_t>(largest)]) {
          largest = static_cast<int>(f);
        }
      }
      cells_ += static_cast<int>(scratch.size()) - 2;
      for (std::size_t f = 0; f + 1 < scratch.size(); ++f) {
        const int fs = scratch[f];
        if (queued[static_cast<std::size_t>(fs)]) continue;
        if (was_queued || static_cast<int>(f) != largest) {
          queued[static_cast<std::size_t>(fs)] = 1;
          queue.push_back(fs);
        }
      }
    }
    for (int x : touched) count[static_cast<std::size_t>(x)] = 0;
  }
  // Cells that still await processing are equitable already once the
  // partition is discrete; the trace length pins down the remaining work.
  if (!emit(-2) || !emit(cells_)) return false;
  return true;
}

bool RefinementState::is_equitable(const Graph& g) const {
  const int n = this->n();
  for (int w = 0; w < n; w = end_[static_cast<std::size_t>(w)]) {
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int p = w; p < end_[static_cast<std::size_t>(w)]; ++p) {
      for (int x : g.neighbors(lab_[static_cast<std::size_t>(p)])) ++count[static_cast<std::size_t>(x)];
    }
    for (int s = 0; s < n; s = end_[static_cast<std::size_t>(s)]) {
      for (int p = s + 1; p < end_[static_cast<std::size_t>(s)]; ++p) {
        if (count[static_cast<std::size_t>(lab_[static_cast<std::size_t>(p)])] !=
            count[static_cast<std::size_t>(lab_[static_cast<std::size_t>(s)])]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.n()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), uf_(g.n()) {}

  AutomorphismSearch run() {
    const int n = g_.n();
    RefinementState root(n);
    traces_.emplace_back();
    root.refine_all(g_, &traces_.back(), nullptr);
    ++nodes_;
    // First path: always branch on the smallest vertex of the target cell.
    RefinementState cur = root;
    while (!cur.discrete()) {
      const int s = cur.target_cell();
      std::vector<int> cell(cur.lab().begin() + s, cur.lab().begin() + cur.cell_end(s));
      std::sort(cell.begin(), cell.end());
      path_.push_back(cur);
      cells_.push_back(cell);
      targets_.push_back(s);
      base_.push_back(cell.front());
      traces_.emplace_back();
      cur.individualize(g_, cell.front(), &traces_.back(), nullptr);
      ++nodes_;
    }
    leaf_.assign(cur.lab().begin(), cur.lab().end());

    const std::size_t depth = base_.size();
    std::vector<std::size_t> orbit_sizes(depth, 1);
    for (std::size_t k = depth; k-- > 0;) {
      std::vector<int> failed;
      for (int v : cells_[k]) {
        if (v == base_[k] || uf_.find(v) == uf_.find(base_[k])) continue;
        const bool known_bad = std::any_of(failed.begin(), failed.end(),
                                           [&](int f) { return uf_.find(f) == uf_.find(v); });
        if (known_bad) continue;
        RefinementState node = path_[k];
        ++nodes_;
        if (node.individualize(g_, v, nullptr, &traces_[k + 1]) && descend(node, k + 1)) continue;
        failed.push_back(v);
      }
      const int root_b = uf_.find(base_[k]);
      std::size_t size = 0;
      for (int x = 0; x < n; ++x) size += uf_.find(x) == root_b ? 1 : 0;
      orbit_sizes[k] = size;
    }

    PermGroup group(n, generators_, base_);
    GroupOrder expected = 1;
    for (auto s : orbit_sizes) expected *= s;
    if (group.order() != expected) {
      throw std::logic_error("automorphism search: chain order disagrees with search orbits");
    }
    return {std::move(group), base_, orbit_sizes, nodes_};
  }

 private:
  // Looks for a leaf below `node` (at first-path depth `level`) that is
  // equivalent to the first leaf; records the automorphism if found.
  bool descend(const RefinementState& node, std::size_t level) {
    if (node.discrete()) {
      std::vector<int> images(static_cast<std::size_t>(g_.n()));
      for (std::size_t p = 0; p < leaf_.size(); ++p) {
        images[static_cast<std::size_t>(leaf_[p])] = node.lab()[p];
      }
      Permutation gamma(std::move(images));
      if (!is_automorphism(g_, gamma)) return false;
      for (int x = 0; x < g_.n(); ++x) uf_.unite(x, gamma(x));
      generators_.push_back(std::move(gamma));
      return true;
    }
    const int s = targets_[level];
    std::vector<int> cell(node.lab().begin() + s, node.lab().begin() + node.cell_end(s));
    std::sort(cell.begin(), cell.end());
    for (int w : cell) {
      RefinementState child = node;
      ++nodes_;
      if (!child.individualize(g_, w, nullptr, &traces_[level + 1])) continue;
      if (descend(child, level + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  UnionFind uf_;
  std::vector<RefinementState> path_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> targets_;
  std::vector<int> base_;
  std::vector<std::vector<int>> traces_;
  std::vector<int> leaf_;
  std::vector<Permutation> generators_;
  std::size_t nodes_ = 0;
};

}  // namespace

AutomorphismSearch automorphism_search(const Graph& g) {
  if (g.n() > kMaxAutomorphismVertices) {
    throw std::invalid_argument("automorphism_search: " + std::to_string(g.n()) +
                                " vertices exceeds the guard of " +
                                std::to_string(kMaxAutomorphismVertices));
  }
  return Search(g).run();
}

PermGroup automorphism_group(const Graph& g) { return automorphism_search(g).group; }

}  // namespace symcover
