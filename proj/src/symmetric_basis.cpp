#include "symcover/symmetric_basis.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace symcover {

bool is_symmetric_family(const QuadraticForm& form, std::span<const GF2Vector> vectors) {
  for (const auto& v : vectors) {
    if (v.dim() != form.dim()) {
      throw std::invalid_argument("symmetric basis vector has dimension " +
                                  std::to_string(v.dim()) + ", form has " +
                                  std::to_string(form.dim()));
    }
  }
  if (!gf2::independent(vectors)) return false;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (form.q(vectors[i].bits())) return false;
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (!form.b(vectors[i].bits(), vectors[j].bits())) return false;
    }
  }
  return true;
}

bool is_symmetric_basis(const QuadraticForm& form, std::span<const GF2Vector> vectors) {
  if (vectors.size() != static_cast<std::size_t>(form.dim())) {
    throw std::invalid_argument("is_symmetric_basis: expected " + std::to_string(form.dim()) +
                                " vectors, got " + std::to_string(vectors.size()));
  }
  return is_symmetric_family(form, vectors);
}

std::vector<GF2Vector> extend_by_three_pairs(const QuadraticForm& form,
                                             std::span<const GF2Vector> family,
                                             const std::array<HyperbolicPair, 3>& pairs) {
  std::vector<std::string> failures;
  if (family.empty()) failures.push_back("W is empty");
  if (!family.empty() && !is_symmetric_family(form, family)) {
    failures.push_back("W is not spanned by a symmetric family");
  }
  GF2Vector sum_w = GF2Vector::zero(form.dim());
  for (const auto& w : family) sum_w += w;
  const bool q_sum = form.q(sum_w.bits());
  if (!q_sum) failures.push_back("Q(sum of W) = 0, need 1");
  // The stated hypothesis is dim W = 2 (mod 4); for a symmetric family it is
  // equivalent to Q(sum) = 1, so a disagreement means W itself is broken.
  const bool stated = family.size() % 4 == 2;
  if (stated != q_sum) {
    failures.push_back("dim W = " + std::to_string(family.size()) +
                       " (mod 4 hypothesis " + (stated ? "holds" : "fails") +
                       ") disagrees with Q(sum of W) = " + (q_sum ? "1" : "0"));
  }
  const char* names[3] = {"{a,b}", "{c,d}", "{g,h}"};
  for (int p = 0; p < 3; ++p) {
    const auto& [x, y] = pairs[static_cast<std::size_t>(p)];
    if (x.dim() != form.dim() || y.dim() != form.dim()) {
      throw std::invalid_argument("extend_by_three_pairs: pair dimension mismatch");
    }
    if (form.q(x.bits()) || form.q(y.bits())) {
      failures.push_back(std::string("pair ") + names[p] + " has a nonsingular member");
    }
    if (!form.b(x.bits(), y.bits())) {
      failures.push_back(std::string("pair ") + names[p] + " has B = 0 within the pair");
    }
    for (int q = p + 1; q < 3; ++q) {
      const auto& [x2, y2] = pairs[static_cast<std::size_t>(q)];
      if (form.b(x.bits(), x2.bits()) || form.b(x.bits(), y2.bits()) ||
          form.b(y.bits(), x2.bits()) || form.b(y.bits(), y2.bits())) {
        failures.push_back(std::string("pairs ") + names[p] + " and " + names[q] +
                           " are not orthogonal");
      }
    }
    for (const auto& w : family) {
      if (form.b(x.bits(), w.bits()) || form.b(y.bits(), w.bits())) {
        failures.push_back(std::string("pair ") + names[p] + " is not orthogonal to W");
        break;
      }
    }
  }
  if (!failures.empty()) {
    std::string msg = "extend_by_three_pairs: hypothesis violated:";
    for (const auto& f : failures) msg += "\n  - " + f;
    throw std::invalid_argument(msg);
  }

  const auto& [a, b] = pairs[0];
  const auto& [c, d] = pairs[1];
  const auto& [g, h] = pairs[2];
  std::vector<GF2Vector> out(family.begin(), family.end());
  out.push_back(a + c + d + sum_w);
  out.push_back(b + c + d + sum_w);
  out.push_back(c + g + h + sum_w);
  out.push_back(d + g + h + sum_w);
  out.push_back(g + a + b + sum_w);
  out.push_back(h + a + b + sum_w);
  return out;
}

FormType induced_type_of_symmetric_space(int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  return (r % 4 == 0 || r % 4 == 1) ? FormType::Hyperbolic : FormType::Elliptic;
}

bool exists_symmetric_basis(int r, FormType t) {
  if (r < 1) return false;
  return induced_type_of_symmetric_space(r) == t;
}

namespace {

// Symmetric family spanning the orthogonal sum of the given hyperbolic pairs
// and, when present, the elliptic block.
std::vector<GF2Vector> build_family(const QuadraticForm& form,
                                    std::span<const HyperbolicPair> hyp,
                                    const std::optional<HyperbolicPair>& ell) {
  const int r = static_cast<int>(hyp.size()) + (ell ? 1 : 0);
  const auto sum = [&](std::span<const GF2Vector> vs) {
    GF2Vector s = GF2Vector::zero(form.dim());
    for (const auto& v : vs) s += v;
    return s;
  };
  if (!ell && r == 1) return {hyp[0].first, hyp[0].second};
  if (ell && r == 2) {
    const GF2Vector c1 = hyp[0].first;
    const GF2Vector c2 = hyp[0].second;
    return {c1, c2, ell->first + c1 + c2, ell->second + c1 + c2};
  }
  if (ell && r == 3) {
    auto out = build_family(form, hyp.first(1), ell);
    const GF2Vector s = sum(out);
    out.push_back(hyp[1].first + s);
    out.push_back(hyp[1].second + s);
    return out;
  }
  // r >= 4: W takes the first blocks, the last three (or four, when r is
  // odd) hyperbolic pairs are adjoined.
  const bool odd_step = (r % 2) == 1;
  const std::size_t tail = odd_step ? 4 : 3;
  const std::size_t keep = hyp.size() - tail;
  auto w = build_family(form, hyp.first(keep), ell);
  const GF2Vector sum_w = sum(w);
  std::array<HyperbolicPair, 3> pairs = {hyp[keep], hyp[keep + 1], hyp[keep + 2]};
  auto out = extend_by_three_pairs(form, w, pairs);
  if (odd_step) {
    const auto& xy = hyp[keep + 3];
    GF2Vector all_pairs = sum_w;
    for (const auto& p : pairs) all_pairs = all_pairs + p.first + p.second;
    out.push_back(xy.first + all_pairs);
    out.push_back(xy.second + all_pairs);
  }
  return out;
}

}  // namespace

std::optional<SymmetricBasis> construct_symmetric_basis(int r, FormType t) {
  if (r < 1 || 2 * r > kMaxDim) {
    throw std::invalid_argument("construct_symmetric_basis: r must be in 1..32, got " +
                                std::to_string(r));
  }
  if (!exists_symmetric_basis(r, t)) return std::nullopt;
  QuadraticForm form = standard_form(r, t);
  const int dim = form.dim();
  const int hyperbolic_blocks = t == FormType::Hyperbolic ? r : r - 1;
  std::vector<HyperbolicPair> hyp;
  for (int k = 0; k < hyperbolic_blocks; ++k) {
    hyp.push_back({GF2Vector::unit(dim, 2 * k), GF2Vector::unit(dim, 2 * k + 1)});
  }
  std::optional<HyperbolicPair> ell;
  if (t == FormType::Elliptic) {
    ell = HyperbolicPair{GF2Vector::unit(dim, dim - 2), GF2Vector::unit(dim, dim - 1)};
  }
  auto vectors = build_family(form, hyp, ell);
  if (!is_symmetric_basis(form, vectors)) {
    throw std::logic_error("construct_symmetric_basis produced an invalid basis for r = " +
                           std::to_string(r));
  }
  return SymmetricBasis{std::move(form), std::move(vectors)};
}

namespace {

// Depth-first search over increasing sequences of singular vectors; returns
// the first complete basis whose first vector is candidates[first].
std::optional<std::vector<std::uint64_t>> search_from(const QuadraticForm& form,
                                                     const std::vector<std::uint64_t>& cand,
                                                     std::size_t first) {
  const auto dim = static_cast<std::size_t>(form.dim());
  std::vector<std::uint64_t> chosen{cand[first]};
  std::vector<gf2::EchelonBasis> spans(1);
  spans[0].insert(cand[first]);
  std::function<bool(std::size_t)> dfs = [&](std::size_t next) -> bool {
    if (chosen.size() == dim) return true;
    // Not enough candidates left to finish.
    if (cand.size() - next < dim - chosen.size()) return false;
    for (std::size_t k = next; k < cand.size(); ++k) {
      const std::uint64_t v = cand[k];
      bool ok = true;
      for (auto c : chosen) {
        if (!form.b(v, c)) {
          ok = false;
          break;
        }
      }
      if (!ok || spans.back().contains(v)) continue;
      spans.push_back(spans.back());
      spans.back().insert(v);
      chosen.push_back(v);
      if (dfs(k + 1)) return true;
      chosen.pop_back();
      spans.pop_back();
    }
    return false;
  };
  if (dfs(first + 1)) return chosen;
  return std::nullopt;
}

}  // namespace

std::optional<SymmetricBasis> brute_force_symmetric_basis(const QuadraticForm& form,
                                                          int threads) {
  if (form.dim() > kMaxBruteForceDim) {
    throw std::invalid_argument("brute_force_symmetric_basis: dimension " +
                                std::to_string(form.dim()) + " exceeds guard " +
                                std::to_string(kMaxBruteForceDim));
  }
  std::vector<std::uint64_t> cand;
  for (std::uint64_t v = 1; v <= low_mask(form.dim()); ++v) {
    if (!form.q(v)) cand.push_back(v);
  }
  std::vector<std::optional<std::vector<std::uint64_t>>> results(cand.size());
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1) {
    for (std::size_t f = 0; f < cand.size(); ++f) {
      results[f] = search_from(form, cand, f);
      if (results[f]) break;
    }
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t f = w; f < cand.size(); f += workers) results[f] = search_from(form, cand, f);
      });
    }
    for (auto& t : pool) t.join();
  }
  // Lexicographic minimum: the smallest first vector that admits a completion.
  for (auto& r : results) {
    if (r) {
      std::vector<GF2Vector> vectors;
      for (auto w : *r) vectors.emplace_back(form.dim(), w);
      return SymmetricBasis{form, std::move(vectors)};
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(const SymmetricBasis& basis) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : basis.vectors) vs.push_back(v.to_hex());
  return {{"form", to_json(basis.form)}, {"basis", vs}};
}

std::string render_table(const SymmetricBasis& basis) {
  std::ostringstream os;
  const auto& f = basis.form;
  os << "  #  coordinates";
  os << std::string(static_cast<std::size_t>(std::max(0, f.dim() - 11)), ' ') << "  Q  B-row\n";
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    const auto& v = basis.vectors[i];
    std::string brow;
    for (const auto& w : basis.vectors) brow += f.b(v.bits(), w.bits()) ? '1' : '0';
    os << (i + 1 < 10 ? "  " : " ") << (i + 1) << "  " << v.to_bitstring();
    os << std::string(static_cast<std::size_t>(std::max(0, 11 - f.dim())), ' ');
    os << "  " << (f.q(v.bits()) ? 1 : 0) << "  " << brow << '\n';
  }
  return os.str();
}

}  // namespace symcover
