#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace symcover {

enum class LabelKind { None, GroupElement, CosetVector };

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists and
/// a bitset adjacency matrix. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Rejects loops and out-of-range endpoints; duplicate edges collapse.
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
            (v % 64)) & 1;
  }
  std::size_t edge_count() const { return edge_count_; }
  /// Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Valency if regular, nullopt otherwise.
  std::optional<int> valency() const;
  bool is_connected() const;
  /// Component index per vertex, numbered in order of first vertex.
  std::vector<int> components() const;
  bool is_bipartite() const;

  LabelKind label_kind() const { return label_kind_; }
  std::span<const std::uint64_t> labels() const { return labels_; }
  /// Attaches one label per vertex.
  Graph with_labels(LabelKind kind, std::vector<std::uint64_t> labels) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
  LabelKind label_kind_ = LabelKind::None;
  std::vector<std::uint64_t> labels_;
};

/// True iff map[v] is a bijection V(a) -> V(b) carrying edges onto edges.
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const int> map);

// Small named graphs used by tests, the CLI and the engine validation corpus.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();
/// Cayley graph of Z_n with connection set S (each s and -s are joined).
Graph circulant_graph(int n, std::span<const int> connection);

}  // namespace symcover
