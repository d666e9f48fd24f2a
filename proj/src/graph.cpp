#include "symcover/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symcover {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  adj_.assign(static_cast<std::size_t>(n), {});
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range for n = " + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) continue;
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
        std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / 64] |=
        std::uint64_t{1} << (u % 64);
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++edge_count_;
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<int> Graph::valency() const {
  if (n_ == 0) return 0;
  const int d = degree(0);
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(static_cast<std::size_t>(n_), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : neighbors(u)) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool Graph::is_connected() const {
  const auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool Graph::is_bipartite() const {
  std::vector<int> side(static_cast<std::size_t>(n_), -1);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : neighbors(u)) {
        auto& sv = side[static_cast<std::size_t>(v)];
        if (sv < 0) {
          sv = 1 - side[static_cast<std::size_t>(u)];
          stack.push_back(v);
        } else if (sv == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph Graph::with_labels(LabelKind kind, std::vector<std::uint64_t> labels) const {
  if (kind != LabelKind::None && labels.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("graph: need one label per vertex");
  }
  Graph g = *this;
  g.label_kind_ = kind;
  g.labels_ = kind == LabelKind::None ? std::vector<std::uint64_t>{} : std::move(labels);
  return g;
}

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const int> map) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count() ||
      map.size() != static_cast<std::size_t>(a.n())) {
    return false;
  }
  std::vector<bool> hit(static_cast<std::size_t>(b.n()), false);
  for (int v : map) {
    if (v < 0 || v >= b.n() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (const auto& [u, v] : a.edges()) {
    if (!b.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be positive");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

Graph circulant_graph(int n, std::span<const int> connection) {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x) {
    for (int s : connection) {
      const int y = ((x + s) % n + n) % n;
      if (y == x) throw std::invalid_argument("circulant_graph: 0 in connection set");
      e.emplace_back(x, y);
    }
  }
  return Graph(n, e);
}

}  // namespace symcover
