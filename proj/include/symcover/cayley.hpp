#pragma once

#include <span>
#include <string>
#include <vector>

#include "symcover/extraspecial.hpp"
#include "symcover/graph.hpp"

namespace symcover {

inline constexpr int kMaxCayleyRank = 5;  // r <= 5: 2048 vertices
inline constexpr int kMaxHypercubeDim = 16;

/// Cay(G, S): vertex ids are element ids, edges {g, s g}. Rejects the
/// identity in S, repeated or non-inverse-closed S, and S that does not
/// generate G. Vertices carry GroupElement labels.
Graph build_cayley(const ExtraspecialGroup& group, std::span<const GroupElement> connection);

/// Q_d: vertices are words in F_2^d, adjacent when they differ in one bit.
Graph hypercube(int d);

/// Quotient by the center: parts {g, zg} indexed by the coset word.
Graph quotient_by_center(const ExtraspecialGroup& group, const Graph& graph);
/// fiber[v] for the center quotient.
std::vector<int> center_fibers(const ExtraspecialGroup& group, const Graph& graph);

/// Quotient graph of an arbitrary partition: parts adjacent iff some edge
/// joins them.
Graph quotient_graph(const Graph& graph, std::span<const int> fiber, int parts);

struct CoverCheck {
  bool is_cover = false;
  bool equal_valency = false;
  bool local_bijection = false;
  bool uniform_fibers = false;
  std::string witness;
};

/// Cover test against an explicit partition (fiber[v] = quotient vertex).
/// Throws if `fiber` is not a partition onto all quotient vertices.
CoverCheck is_cover(const Graph& graph, const Graph& quotient, std::span<const int> fiber);

/// Cycle c_1..c_t with c_{i+1} = s_i c_i and c_1 = s_t c_t.
struct CycleSequence {
  std::vector<int> cycle;
  std::vector<GroupElement> seq;
};

/// Recovers s_i = c_{i+1} c_i^{-1}, checks s_1 ... s_t = 1 and that
/// consecutive terms (cyclically) differ. Throws std::invalid_argument if the
/// vertex list is not a cycle of the graph.
CycleSequence extract_cycle_sequence(const ExtraspecialGroup& group, const Graph& graph,
                                     std::span<const int> cycle);

/// Left-to-right product s_1 s_2 ... s_t.
GroupElement product(const ExtraspecialGroup& group, std::span<const GroupElement> seq);

/// C_ij: c_1 = 1 and c_k = s_{k-1} c_{k-1} with s alternating g_i, g_j.
/// Indices are 1-based.
std::vector<int> eight_cycle(const ExtraspecialGroup& group, int i, int j);

/// If the product of `seq` is central, every term occurs an even number of
/// times. Returns false only when that implication fails.
bool even_occurrence_check(const ExtraspecialGroup& group, std::span<const GroupElement> seq);

}  // namespace symcover
