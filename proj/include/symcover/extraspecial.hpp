#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcover/quadratic_form.hpp"

namespace symcover {

/// Element z^j g_{s_1} ... g_{s_t} (s_1 < ... < s_t) of an extraspecial
/// 2-group, stored in normal form. `coset` has bit s-1 set for each g_s.
struct GroupElement {
  bool center = false;
  std::uint64_t coset = 0;

  bool operator==(const GroupElement&) const = default;
};

/// Extraspecial group 2^{2r+1} given by generator squares and commutators.
///
/// Generator g_i is the element with coset bit i-1 and center bit 0. The
/// commutator data must define a nondegenerate alternating form; the type
/// (plus/minus) is derived from the induced quadratic form.
class ExtraspecialGroup {
 public:
  /// `commutators` is strictly upper triangular, one row per generator.
  ExtraspecialGroup(int r, std::uint64_t squares, std::vector<std::uint64_t> commutators);

  int r() const { return r_; }
  int rank() const { return 2 * r_; }
  FormType epsilon() const { return epsilon_; }
  std::uint64_t gen_squares() const { return squares_; }
  std::span<const std::uint64_t> gen_commutators() const { return commutators_; }
  /// 2^{2r+1}.
  std::uint64_t order() const { return std::uint64_t{1} << (2 * r_ + 1); }
  /// All generators are involutions and every pair of generators has commutator z.
  bool has_symmetric_generators() const;

  GroupElement identity() const { return {}; }
  GroupElement z() const { return {true, 0}; }
  /// g_i for i in 1..2r.
  GroupElement generator(int i) const;
  std::vector<GroupElement> generators() const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
  GroupElement square(const GroupElement& a) const { return multiply(a, a); }
  bool is_central(const GroupElement& a) const { return a.coset == 0; }

  /// Vertex id: coset word in the low 2r bits, center bit at bit 2r.
  std::uint64_t id(const GroupElement& a) const;
  GroupElement element(std::uint64_t id) const;

  /// Sign collected when sorting g_u * g_v into normal form.
  bool cocycle(std::uint64_t u, std::uint64_t v) const;

  QuadraticForm induced_form() const;
  void check(const GroupElement& a) const;

 private:
  int r_;
  std::uint64_t squares_;
  std::vector<std::uint64_t> commutators_;
  // lower_[i]: generators k < i whose commutator with g_i is z.
  std::vector<std::uint64_t> lower_;
  FormType epsilon_;
};

inline constexpr int kMaxGroupRank = 16;  // r <= 16, i.e. 2r <= 32

/// Generators forming a symmetric basis of G/Z: involutions, pairwise
/// commutator z. Plus type iff r = 0, 1 (mod 4).
ExtraspecialGroup from_symmetric_generators(int r);
/// Central product of D8 blocks (and one Q8 block for minus type), matching
/// standard_form(r, epsilon).
ExtraspecialGroup from_standard_presentation(int r, FormType epsilon);

QuadraticForm induced_form(const ExtraspecialGroup& g);

/// Image of g under the automorphism induced by permuting generator indices.
/// sigma[i] is the 0-based image of index i. Requires symmetric generators.
GroupElement sigma_tilde(const ExtraspecialGroup& group, std::span<const int> sigma,
                         const GroupElement& g);

struct EmbeddingCheck {
  bool ok = true;
  std::string witness;
};

/// Checks that the transposition (1 2) and the cycle (1 2 ... 2r) induce
/// automorphisms, that sigma -> sigma~ respects composition on them, and that
/// the images are nontrivial. Homomorphism is checked on all element pairs
/// when |G| <= 512, otherwise on generator pairs plus `samples` random pairs.
EmbeddingCheck verify_sigma_tilde_embedding(const ExtraspecialGroup& group,
                                            std::uint64_t seed = 1,
                                            int samples = 20000);

/// "1", "z", "g_1g_3", "z·g_2".
std::string render(const ExtraspecialGroup& group, const GroupElement& g);

/// Searches for generator images in `to` satisfying the defining relations of
/// `from` and spanning `to` modulo its center; the images determine an
/// isomorphism. Exhaustive, limited to r <= 2.
std::optional<std::vector<GroupElement>> find_isomorphism(const ExtraspecialGroup& from,
                                                          const ExtraspecialGroup& to);
/// Extends generator images to the full element map (indexed by id).
std::vector<GroupElement> extend_homomorphism(const ExtraspecialGroup& from,
                                              const ExtraspecialGroup& to,
                                              std::span<const GroupElement> images);

nlohmann::json to_json(const ExtraspecialGroup& g);
ExtraspecialGroup group_from_json(const nlohmann::json& j);

}  // namespace symcover
