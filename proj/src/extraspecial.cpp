#include "symcover/extraspecial.hpp"

#include "symcover/symmetric_basis.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace symcover {

ExtraspecialGroup::ExtraspecialGroup(int r, std::uint64_t squares,
                                     std::vector<std::uint64_t> commutators)
    : r_(r), squares_(squares), commutators_(std::move(commutators)) {
  if (r < 1 || r > kMaxGroupRank) {
    throw std::invalid_argument("extraspecial group: r must be in 1.." +
                                std::to_string(kMaxGroupRank) + ", got " + std::to_string(r));
  }
  // Validates shape and rejects degenerate commutator data.
  const QuadraticForm form(2 * r, squares_, commutators_);
  if (!is_nondegenerate(form)) {
    throw std::invalid_argument("extraspecial group: commutator form is degenerate");
  }
  epsilon_ = classify(form);
  const int n = 2 * r;
  lower_.assign(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    for (int i = k + 1; i < n; ++i) {
      if ((commutators_[static_cast<std::size_t>(k)] >> i) & 1) {
        lower_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << k;
      }
    }
  }
}

bool ExtraspecialGroup::has_symmetric_generators() const {
  const int n = rank();
  if (squares_ != 0) return false;
  for (int i = 0; i < n; ++i) {
    if (commutators_[static_cast<std::size_t>(i)] != (low_mask(n) & ~low_mask(i + 1))) return false;
  }
  return true;
}

GroupElement ExtraspecialGroup::generator(int i) const {
  if (i < 1 || i > rank()) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." +
                                std::to_string(rank()));
  }
  return {false, std::uint64_t{1} << (i - 1)};
}

std::vector<GroupElement> ExtraspecialGroup::generators() const {
  std::vector<GroupElement> out;
  for (int i = 1; i <= rank(); ++i) out.push_back(generator(i));
  return out;
}

void ExtraspecialGroup::check(const GroupElement& a) const {
  if ((a.coset & ~low_mask(rank())) != 0) {
    throw std::invalid_argument("group element has coset bits beyond 2r = " +
                                std::to_string(rank()));
  }
}

bool ExtraspecialGroup::cocycle(std::uint64_t u, std::uint64_t v) const {
  bool c = parity(u & v & squares_);
  for (std::uint64_t rest = u; rest != 0; rest &= rest - 1) {
    c ^= parity(lower_[static_cast<std::size_t>(std::countr_zero(rest))] & v);
  }
  return c;
}

GroupElement ExtraspecialGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  return {static_cast<bool>(a.center ^ b.center ^ cocycle(a.coset, b.coset)), a.coset ^ b.coset};
}

GroupElement ExtraspecialGroup::inverse(const GroupElement& a) const {
  check(a);
  // a * a = z^{c(v, v)}, so a^{-1} = a * z^{c(v, v)}.
  return {static_cast<bool>(a.center ^ cocycle(a.coset, a.coset)), a.coset};
}

GroupElement ExtraspecialGroup::commutator(const GroupElement& a, const GroupElement& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

std::uint64_t ExtraspecialGroup::id(const GroupElement& a) const {
  check(a);
  return a.coset | (static_cast<std::uint64_t>(a.center) << rank());
}

GroupElement ExtraspecialGroup::element(std::uint64_t id) const {
  if (id >= order()) throw std::invalid_argument("element id out of range");
  return {((id >> rank()) & 1) != 0, id & low_mask(rank())};
}

QuadraticForm ExtraspecialGroup::induced_form() const {
  return QuadraticForm(rank(), squares_, commutators_);
}

QuadraticForm induced_form(const ExtraspecialGroup& g) { return g.induced_form(); }

ExtraspecialGroup from_symmetric_generators(int r) {
  if (r < 1 || r > kMaxGroupRank) {
    throw std::invalid_argument("from_symmetric_generators: r must be in 1.." +
                                std::to_string(kMaxGroupRank));
  }
  const int n = 2 * r;
  std::vector<std::uint64_t> comm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) comm[static_cast<std::size_t>(i)] = low_mask(n) & ~low_mask(i + 1);
  ExtraspecialGroup g(r, 0, std::move(comm));
  if (g.epsilon() != induced_type_of_symmetric_space(r)) {
    throw std::logic_error("symmetric generators induced the wrong form type");
  }
  return g;
}

ExtraspecialGroup from_standard_presentation(int r, FormType epsilon) {
  if (r < 1 || r > kMaxGroupRank) {
    throw std::invalid_argument("from_standard_presentation: r must be in 1.." +
                                std::to_string(kMaxGroupRank));
  }
  const QuadraticForm f = standard_form(r, epsilon);
  return ExtraspecialGroup(r, f.diag(), std::vector<std::uint64_t>(f.upper().begin(), f.upper().end()));
}

GroupElement sigma_tilde(const ExtraspecialGroup& group, std::span<const int> sigma,
                         const GroupElement& g) {
  if (!group.has_symmetric_generators()) {
    throw std::invalid_argument("sigma_tilde needs a group built from symmetric generators");
  }
  const int n = group.rank();
  if (sigma.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("sigma_tilde: permutation has the wrong degree");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s : sigma) {
    if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)]) {
      throw std::invalid_argument("sigma_tilde: not a permutation of the generator indices");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
  group.check(g);
  GroupElement out{g.center, 0};
  for (std::uint64_t rest = g.coset; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    out = group.multiply(out, group.generator(sigma[static_cast<std::size_t>(i)] + 1));
  }
  return out;
}

namespace {

std::vector<int> compose(std::span<const int> first, std::span<const int> second) {
  // Apply `first`, then `second`.
  std::vector<int> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    out[i] = second[static_cast<std::size_t>(first[i])];
  }
  return out;
}

}  // namespace

EmbeddingCheck verify_sigma_tilde_embedding(const ExtraspecialGroup& group, std::uint64_t seed,
                                            int samples) {
  EmbeddingCheck res;
  if (!group.has_symmetric_generators()) {
    res.ok = false;
    res.witness = "group is not given by symmetric generators";
    return res;
  }
  const int n = group.rank();
  std::vector<int> transposition(static_cast<std::size_t>(n));
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;

  const std::uint64_t order = group.order();
  const auto fail = [&](const std::string& what) {
    res.ok = false;
    res.witness = what;
    return res;
  };
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (order <= 512) {
    for (std::uint64_t a = 0; a < order; ++a) {
      for (std::uint64_t b = 0; b < order; ++b) pairs.emplace_back(a, b);
    }
  } else {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const auto gi = i == n ? group.id(group.z()) : group.id(group.generator(i + 1));
        const auto gj = j == n ? group.id(group.z()) : group.id(group.generator(j + 1));
        pairs.emplace_back(gi, gj);
      }
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, order - 1);
    for (int s = 0; s < samples; ++s) pairs.emplace_back(pick(rng), pick(rng));
  }

  const std::pair<const char*, const std::vector<int>*> sigmas[] = {
      {"(1 2)", &transposition}, {"(1 2 ... 2r)", &cycle}};
  for (const auto& [name, sigma] : sigmas) {
    for (const auto& [ia, ib] : pairs) {
      const GroupElement a = group.element(ia);
      const GroupElement b = group.element(ib);
      const GroupElement lhs = sigma_tilde(group, *sigma, group.multiply(a, b));
      const GroupElement rhs =
          group.multiply(sigma_tilde(group, *sigma, a), sigma_tilde(group, *sigma, b));
      if (!(lhs == rhs)) {
        return fail(std::string("sigma = ") + name + " is not multiplicative on (" +
                    render(group, a) + ", " + render(group, b) + ")");
      }
    }
    if (!(sigma_tilde(group, *sigma, group.z()) == group.z())) {
      return fail(std::string("sigma = ") + name + " moves z");
    }
    // Bijective: injective on a finite set.
    if (order <= (std::uint64_t{1} << 20)) {
      std::vector<bool> hit(order, false);
      for (std::uint64_t x = 0; x < order; ++x) {
        const auto y = group.id(sigma_tilde(group, *sigma, group.element(x)));
        if (hit[y]) return fail(std::string("sigma = ") + name + " is not injective");
        hit[y] = true;
      }
    }
    bool moves = false;
    for (int i = 1; i <= n; ++i) {
      moves |= !(sigma_tilde(group, *sigma, group.generator(i)) == group.generator(i));
    }
    if (!moves) return fail(std::string("sigma = ") + name + " induces the identity");
  }
  // (sigma tau)~ = sigma~ then tau~, on the two generators.
  const auto st = compose(transposition, cycle);
  for (const auto& [ia, ib] : pairs) {
    (void)ib;
    const GroupElement a = group.element(ia);
    const auto lhs = sigma_tilde(group, st, a);
    const auto rhs = sigma_tilde(group, cycle, sigma_tilde(group, transposition, a));
    if (!(lhs == rhs)) return fail("sigma -> sigma~ does not respect composition at " + render(group, a));
  }
  return res;
}

std::string render(const ExtraspecialGroup& group, const GroupElement& g) {
  group.check(g);
  if (g.coset == 0) return g.center ? "z" : "1";
  std::string s = g.center ? "z·" : "";
  for (std::uint64_t rest = g.coset; rest != 0; rest &= rest - 1) {
    s += "g_" + std::to_string(std::countr_zero(rest) + 1);
  }
  return s;
}

std::vector<GroupElement> extend_homomorphism(const ExtraspecialGroup& from,
                                              const ExtraspecialGroup& to,
                                              std::span<const GroupElement> images) {
  if (from.r() != to.r() || images.size() != static_cast<std::size_t>(from.rank())) {
    throw std::invalid_argument("extend_homomorphism: rank mismatch");
  }
  std::vector<GroupElement> map(from.order());
  for (std::uint64_t x = 0; x < from.order(); ++x) {
    const GroupElement g = from.element(x);
    GroupElement out = g.center ? to.z() : to.identity();
    for (std::uint64_t rest = g.coset; rest != 0; rest &= rest - 1) {
      out = to.multiply(out, images[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    map[x] = out;
  }
  return map;
}

std::optional<std::vector<GroupElement>> find_isomorphism(const ExtraspecialGroup& from,
                                                          const ExtraspecialGroup& to) {
  if (from.r() != to.r()) return std::nullopt;
  if (from.r() > 2) throw std::invalid_argument("find_isomorphism: limited to r <= 2");
  const int n = from.rank();
  std::vector<GroupElement> images;
  gf2::EchelonBasis span;
  std::function<bool(gf2::EchelonBasis)> dfs = [&](gf2::EchelonBasis sp) -> bool {
    const int i = static_cast<int>(images.size());
    if (i == n) return true;
    for (std::uint64_t x = 0; x < to.order(); ++x) {
      const GroupElement h = to.element(x);
      if (sp.contains(h.coset)) continue;
      // g_i^2 and [g_k, g_i] must be matched.
      const bool sq = (from.gen_squares() >> i) & 1;
      if (!(to.square(h) == (sq ? to.z() : to.identity()))) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        const bool c = (from.gen_commutators()[static_cast<std::size_t>(k)] >> i) & 1;
        ok = to.commutator(images[static_cast<std::size_t>(k)], h) == (c ? to.z() : to.identity());
      }
      if (!ok) continue;
      auto next = sp;
      next.insert(h.coset);
      images.push_back(h);
      if (dfs(next)) return true;
      images.pop_back();
    }
    return false;
  };
  if (!dfs(span)) return std::nullopt;
  return images;
}

nlohmann::json to_json(const ExtraspecialGroup& g) {
  nlohmann::json comm = nlohmann::json::array();
  for (auto row : g.gen_commutators()) comm.push_back(to_hex(row));
  return {{"r", g.r()},
          {"epsilon", g.epsilon() == FormType::Hyperbolic ? "plus" : "minus"},
          {"gen_squares", to_hex(g.gen_squares())},
          {"gen_commutators", comm}};
}

ExtraspecialGroup group_from_json(const nlohmann::json& j) {
  std::vector<std::uint64_t> comm;
  for (const auto& row : j.at("gen_commutators")) comm.push_back(parse_hex(row.get<std::string>()));
  ExtraspecialGroup g(j.at("r").get<int>(), parse_hex(j.at("gen_squares").get<std::string>()),
                      std::move(comm));
  if (j.contains("epsilon") && parse_form_type(j.at("epsilon").get<std::string>()) != g.epsilon()) {
    throw std::invalid_argument("group JSON: epsilon disagrees with the commutator data");
  }
  return g;
}

}  // namespace symcover
