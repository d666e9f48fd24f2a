#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcover/gf2.hpp"

namespace symcover {

enum class FormType { Hyperbolic, Elliptic };

std::string to_string(FormType t);
/// Accepts "hyperbolic"/"plus"/"+" and "elliptic"/"minus"/"-".
FormType parse_form_type(const std::string& s);

/// A quadratic form on F_2^dim stored as its diagonal values Q(e_i) and the
/// strictly upper triangle of the polar form B(e_i, e_j), i < j.
///
/// Q(v) = sum_{i in v} diag_i + sum_{i<j in v} upper_ij. B is always derived
/// from the stored data. Degenerate forms are representable so that their
/// radical can be inspected; classification rejects them.
class QuadraticForm {
 public:
  QuadraticForm(int dim, std::uint64_t diag, std::vector<std::uint64_t> upper);

  int dim() const { return dim_; }
  std::uint64_t diag() const { return diag_; }
  std::span<const std::uint64_t> upper() const { return upper_; }
  /// Row i of the symmetrized Gram matrix of B.
  std::uint64_t gram_row(int i) const { return gram_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint64_t> gram() const { return gram_; }

  bool q(std::uint64_t v) const;
  bool b(std::uint64_t u, std::uint64_t v) const;

  bool operator==(const QuadraticForm& o) const {
    return dim_ == o.dim_ && diag_ == o.diag_ && upper_ == o.upper_;
  }

 private:
  int dim_;
  std::uint64_t diag_;
  std::vector<std::uint64_t> upper_;
  std::vector<std::uint64_t> gram_;
};

bool eval_q(const QuadraticForm& form, const GF2Vector& v);
bool eval_b(const QuadraticForm& form, const GF2Vector& u, const GF2Vector& v);

/// Basis of rad(B); empty iff the form is nondegenerate.
std::vector<GF2Vector> radical(const QuadraticForm& form);
bool is_nondegenerate(const QuadraticForm& form);

/// Coordinates of the standard form of rank r: hyperbolic pair k occupies
/// bits (2k, 2k+1) as (e_{k+1}, f_{k+1}). In the elliptic case the last
/// block (bits 2r-2, 2r-1) is (x, y) with Q(x) = Q(y) = B(x, y) = 1.
QuadraticForm standard_form(int r, FormType t);

/// Arf invariant of a nondegenerate form, computed through a symplectic basis.
bool arf_invariant(const QuadraticForm& form);
/// Hyperbolic iff the Arf invariant is 0. Throws std::domain_error on a
/// degenerate form.
FormType classify(const QuadraticForm& form);

/// Largest dimension of a totally singular subspace, by exhaustive search
/// over echelon bases. Limited to dim <= 12.
int max_totally_singular_dim(const QuadraticForm& form);
inline constexpr int kMaxTotallySingularSearchDim = 12;

/// images[i] is the image of the i-th standard basis vector. True iff the
/// linear map carries `from` onto `to`. Throws on a singular map.
bool is_isometry(const QuadraticForm& from, const QuadraticForm& to,
                 std::span<const GF2Vector> images);

/// Image of v under the linear map with the given basis images.
std::uint64_t apply_linear(std::span<const GF2Vector> images, std::uint64_t v);

// JSON: {"dim": n, "diag": hex, "upper": [hex, ...]} with bit 0 = coordinate 1.
nlohmann::json to_json(const QuadraticForm& form);
QuadraticForm form_from_json(const nlohmann::json& j);

}  // namespace symcover
