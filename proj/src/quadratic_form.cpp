#include "symcover/quadratic_form.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace symcover {

std::string to_string(FormType t) {
  return t == FormType::Hyperbolic ? "hyperbolic" : "elliptic";
}

FormType parse_form_type(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (l == "hyperbolic" || l == "plus" || l == "+") return FormType::Hyperbolic;
  if (l == "elliptic" || l == "minus" || l == "-") return FormType::Elliptic;
  throw std::invalid_argument("unknown form type '" + s + "' (expected hyperbolic or elliptic)");
}

QuadraticForm::QuadraticForm(int dim, std::uint64_t diag, std::vector<std::uint64_t> upper)
    : dim_(dim), diag_(diag), upper_(std::move(upper)) {
  if (dim < 2 || dim > kMaxDim || dim % 2 != 0) {
    throw std::invalid_argument("QuadraticForm: dimension must be even and in 2..64, got " +
                                std::to_string(dim));
  }
  if ((diag & ~low_mask(dim)) != 0) {
    throw std::invalid_argument("QuadraticForm: diagonal has bits beyond the dimension");
  }
  if (upper_.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("QuadraticForm: expected " + std::to_string(dim) +
                                " upper rows, got " + std::to_string(upper_.size()));
  }
  for (int i = 0; i < dim; ++i) {
    // Row i may only use columns i+1 .. dim-1.
    const std::uint64_t allowed = low_mask(dim) & ~low_mask(i + 1);
    if ((upper_[static_cast<std::size_t>(i)] & ~allowed) != 0) {
      throw std::invalid_argument("QuadraticForm: upper row " + std::to_string(i) +
                                  " is not strictly upper triangular");
    }
  }
  gram_.assign(static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if ((upper_[static_cast<std::size_t>(i)] >> j) & 1) {
        gram_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        gram_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
}

bool QuadraticForm::q(std::uint64_t v) const {
  bool acc = parity(diag_ & v);
  for (std::uint64_t rest = v; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    acc ^= parity(upper_[static_cast<std::size_t>(i)] & v);
  }
  return acc;
}

bool QuadraticForm::b(std::uint64_t u, std::uint64_t v) const {
  bool acc = false;
  for (std::uint64_t rest = u; rest != 0; rest &= rest - 1) {
    acc ^= parity(gram_[static_cast<std::size_t>(std::countr_zero(rest))] & v);
  }
  return acc;
}

namespace {

void check_dim(const QuadraticForm& form, const GF2Vector& v) {
  if (v.dim() != form.dim()) {
    throw std::invalid_argument("vector of dimension " + std::to_string(v.dim()) +
                                " used with a form of dimension " +
                                std::to_string(form.dim()));
  }
}

}  // namespace

bool eval_q(const QuadraticForm& form, const GF2Vector& v) {
  check_dim(form, v);
  return form.q(v.bits());
}

bool eval_b(const QuadraticForm& form, const GF2Vector& u, const GF2Vector& v) {
  check_dim(form, u);
  check_dim(form, v);
  return form.b(u.bits(), v.bits());
}

std::vector<GF2Vector> radical(const QuadraticForm& form) {
  std::vector<GF2Vector> out;
  for (auto w : gf2::nullspace(form.gram(), form.dim())) out.emplace_back(form.dim(), w);
  return out;
}

bool is_nondegenerate(const QuadraticForm& form) {
  return gf2::rank(form.gram()) == form.dim();
}

QuadraticForm standard_form(int r, FormType t) {
  if (r < 1 || 2 * r > kMaxDim) {
    throw std::invalid_argument("standard_form: r must be in 1..32, got " + std::to_string(r));
  }
  const int dim = 2 * r;
  std::vector<std::uint64_t> upper(static_cast<std::size_t>(dim), 0);
  for (int k = 0; k < r; ++k) upper[static_cast<std::size_t>(2 * k)] = std::uint64_t{1} << (2 * k + 1);
  std::uint64_t diag = 0;
  if (t == FormType::Elliptic) diag = std::uint64_t{3} << (dim - 2);
  return QuadraticForm(dim, diag, std::move(upper));
}

bool arf_invariant(const QuadraticForm& form) {
  if (!is_nondegenerate(form)) {
    throw std::domain_error("Arf invariant requested for a degenerate form");
  }
  std::vector<std::uint64_t> pool;
  for (int i = 0; i < form.dim(); ++i) pool.push_back(std::uint64_t{1} << i);
  bool arf = false;
  while (!pool.empty()) {
    const std::uint64_t e = pool.front();
    auto it = std::find_if(pool.begin() + 1, pool.end(),
                           [&](std::uint64_t w) { return form.b(e, w); });
    if (it == pool.end()) throw std::domain_error("Arf invariant: form is degenerate");
    const std::uint64_t f = *it;
    arf ^= form.q(e) && form.q(f);
    pool.erase(it);
    pool.erase(pool.begin());
    // Project the rest onto <e, f>^perp.
    for (auto& w : pool) {
      const bool be = form.b(w, e);
      const bool bf = form.b(w, f);
      if (bf) w ^= e;
      if (be) w ^= f;
    }
  }
  return arf;
}

FormType classify(const QuadraticForm& form) {
  return arf_invariant(form) ? FormType::Elliptic : FormType::Hyperbolic;
}

int max_totally_singular_dim(const QuadraticForm& form) {
  if (form.dim() > kMaxTotallySingularSearchDim) {
    throw std::invalid_argument("max_totally_singular_dim: dimension " +
                                std::to_string(form.dim()) + " exceeds search guard " +
                                std::to_string(kMaxTotallySingularSearchDim));
  }
  const int dim = form.dim();
  std::vector<std::uint64_t> singular;
  for (std::uint64_t v = 1; v <= low_mask(dim); ++v) {
    if (!form.q(v)) singular.push_back(v);
  }
  const int ceiling = dim / 2;
  int best = 0;
  // Each subspace is visited once, through its reduced echelon basis with
  // pivots (highest set bits) strictly increasing.
  std::vector<std::uint64_t> chosen;
  std::function<void(int)> extend = [&](int last_pivot) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (best == ceiling) return;
    for (std::uint64_t v : singular) {
      const int p = 63 - std::countl_zero(v);
      if (p <= last_pivot) continue;
      bool ok = true;
      for (std::uint64_t c : chosen) {
        const int cp = 63 - std::countl_zero(c);
        if (((v >> cp) & 1) || ((c >> p) & 1) || form.b(v, c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      extend(p);
      chosen.pop_back();
      if (best == ceiling) return;
    }
  };
  extend(-1);
  return best;
}

std::uint64_t apply_linear(std::span<const GF2Vector> images, std::uint64_t v) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = v; rest != 0; rest &= rest - 1) {
    out ^= images[static_cast<std::size_t>(std::countr_zero(rest))].bits();
  }
  return out;
}

bool is_isometry(const QuadraticForm& from, const QuadraticForm& to,
                 std::span<const GF2Vector> images) {
  if (from.dim() != to.dim() || images.size() != static_cast<std::size_t>(from.dim())) {
    throw std::invalid_argument("is_isometry: dimension mismatch");
  }
  for (const auto& im : images) {
    if (im.dim() != to.dim()) throw std::invalid_argument("is_isometry: image dimension mismatch");
  }
  if (!gf2::independent(images)) throw std::invalid_argument("is_isometry: map is singular");
  const int dim = from.dim();
  for (int i = 0; i < dim; ++i) {
    const auto ei = std::uint64_t{1} << i;
    if (to.q(images[static_cast<std::size_t>(i)].bits()) != from.q(ei)) return false;
    for (int j = i + 1; j < dim; ++j) {
      const auto ej = std::uint64_t{1} << j;
      if (to.b(images[static_cast<std::size_t>(i)].bits(),
               images[static_cast<std::size_t>(j)].bits()) != from.b(ei, ej)) {
        return false;
      }
    }
  }
  return true;
}

nlohmann::json to_json(const QuadraticForm& form) {
  nlohmann::json upper = nlohmann::json::array();
  for (auto row : form.upper()) upper.push_back(to_hex(row));
  return {{"dim", form.dim()}, {"diag", to_hex(form.diag())}, {"upper", upper}};
}

QuadraticForm form_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("diag") || !j.contains("upper")) {
    throw std::invalid_argument("form JSON needs dim, diag and upper");
  }
  std::vector<std::uint64_t> upper;
  for (const auto& row : j.at("upper")) upper.push_back(parse_hex(row.get<std::string>()));
  return QuadraticForm(j.at("dim").get<int>(), parse_hex(j.at("diag").get<std::string>()),
                       std::move(upper));
}

}  // namespace symcover
