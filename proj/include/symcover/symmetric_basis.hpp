#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcover/quadratic_form.hpp"

namespace symcover {

/// A basis {v_1..v_2r} with Q(v_i) = 0 and B(v_i, v_j) = 1 for i != j.
struct SymmetricBasis {
  QuadraticForm form;
  std::vector<GF2Vector> vectors;
};

/// Independent, all Q = 0, all pairwise B = 1. Need not span.
bool is_symmetric_family(const QuadraticForm& form, std::span<const GF2Vector> vectors);
/// A symmetric family of exactly form.dim() vectors. Throws on a count or
/// dimension mismatch.
bool is_symmetric_basis(const QuadraticForm& form, std::span<const GF2Vector> vectors);

/// Q-value of a sum of t distinct vectors of a symmetric basis:
/// 0 when t = 0, 1 (mod 4), otherwise 1.
constexpr bool weight_parity_q(unsigned long long t) { return (t % 4) >= 2; }

struct HyperbolicPair {
  GF2Vector first;
  GF2Vector second;
};

/// Adjoins six vectors u_1..u_6 to a symmetric family of W, using three
/// mutually orthogonal hyperbolic pairs in W^perp. Requires Q(sum of W) = 1;
/// throws std::invalid_argument naming every violated condition.
std::vector<GF2Vector> extend_by_three_pairs(const QuadraticForm& form,
                                             std::span<const GF2Vector> family,
                                             const std::array<HyperbolicPair, 3>& pairs);

/// Type of any nondegenerate 2r-dimensional form carrying a symmetric basis.
FormType induced_type_of_symmetric_space(int r);
bool exists_symmetric_basis(int r, FormType t);

/// Builds a symmetric basis of standard_form(r, t) inductively, or nullopt
/// when none exists.
std::optional<SymmetricBasis> construct_symmetric_basis(int r, FormType t);

inline constexpr int kMaxBruteForceDim = 8;

/// Exhaustive search for the lexicographically first symmetric basis, with
/// vectors ordered by their integer value. nullopt proves none exists.
/// `threads` > 1 splits the search over the first vector; the result does
/// not depend on the thread count.
std::optional<SymmetricBasis> brute_force_symmetric_basis(const QuadraticForm& form,
                                                          int threads = 1);

nlohmann::json to_json(const SymmetricBasis& basis);
/// Columns: index, coordinates, Q, B-row against the other basis vectors.
std::string render_table(const SymmetricBasis& basis);

}  // namespace symcover
