#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcover/automorphism.hpp"
#include "symcover/cayley.hpp"
#include "symcover/extraspecial.hpp"
#include "symcover/perm_group.hpp"

namespace symcover {

bool is_vertex_transitive(const Graph& g, const PermGroup& group);
PermGroup stabilizer(const PermGroup& group, int v);
/// Transitive on ordered pairs of adjacent vertices (and on vertices).
bool is_arc_transitive(const Graph& g, const PermGroup& group);

struct ArcTransitivity {
  bool transitive = false;
  /// Vertex-transitive and the stabilizer is 2-transitive on N(v).
  bool stabilizer_route = false;
  /// Single orbit on 2-arcs; only computed for small graphs.
  std::optional<bool> direct_count;
  std::string witness;
};

inline constexpr int kDirectTwoArcLimit = 64;

/// 2-arc-transitivity of `group` acting on g. Throws std::invalid_argument
/// for irregular or disconnected graphs and valency < 2. For n <= 64 the
/// 2-arc orbits are also enumerated directly; disagreement is a logic_error.
ArcTransitivity two_arc_transitivity(const Graph& g, const PermGroup& group);
bool is_2_arc_transitive(const Graph& g, const PermGroup& group);
bool is_2_arc_transitive(const Graph& g);

/// Elements of `group` fixing v and every neighbor of v.
PermGroup pointwise_neighborhood_stabilizer(const Graph& g, const PermGroup& group, int v);

/// Vertex permutation x -> x * h on a Cayley graph labeled by G.
Permutation right_multiplication(const ExtraspecialGroup& group, const Graph& g,
                                 const GroupElement& h);
/// Right-regular representation of G; checks each generator is an
/// automorphism and that the action is regular.
PermGroup right_regular_embedding(const ExtraspecialGroup& group, const Graph& g);
/// Vertex permutations induced by sigma~ for the transposition (1 2) and the
/// cycle (1 2 ... 2r).
std::vector<Permutation> sigma_tilde_permutations(const ExtraspecialGroup& group, const Graph& g);

bool is_regular(const PermGroup& group);
/// A generator a of `group` and h of `sub` with h^a outside `sub`, if any.
std::optional<std::pair<Permutation, Permutation>> normality_witness(const PermGroup& sub,
                                                                     const PermGroup& group);
/// Every conjugate of a generator of `sub` by a generator of `group` lies in `sub`.
bool is_normal_subgroup(const PermGroup& sub, const PermGroup& group);
/// `regular` must act regularly by automorphisms; true iff it is normal in `aut`.
bool is_normal_cayley(const Graph& g, const PermGroup& regular, const PermGroup& aut);
bool is_normal_cayley(const Graph& g, const PermGroup& regular);
bool is_normal_cayley(const Graph& g, const ExtraspecialGroup& group);

/// Throws if rho does not fix vertex 1 (id 0) and all its neighbors. True
/// iff rho fixes every vertex of C_ij.
bool fixed_cycle_check(const Graph& g, const ExtraspecialGroup& group, const Permutation& rho,
                       int i, int j);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

struct MainTheoremOptions {
  /// Subset of {"regular", "cover", "2at", "normal", "order", "stab",
  /// "embedding", "walks"}; empty means all that apply at this r.
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  /// Attempt the full automorphism group at r = 4.
  bool full_aut_at_r4 = true;
};

struct MainTheoremReport {
  int r = 0;
  std::size_t vertices = 0;
  std::string expected_order;
  std::optional<std::string> aut_order;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

inline constexpr int kMaxVerifyRank = 4;

/// Certifies that Cay(G, {g_1..g_2r}) is a 2-arc-transitive normal cover of
/// Q_2r with Aut = G : S_2r. Full group computations run for r <= 3; at
/// r = 4 transitivity and normality are certified inside <G^, sigma~> and the
/// full group is attempted when `full_aut_at_r4` is set. The cover check
/// alone runs up to r = 5.
MainTheoremReport verify_main_theorem(int r, const MainTheoremOptions& opts = {});

nlohmann::json to_json(const MainTheoremReport& report, bool timings = false);

}  // namespace symcover
