#include "symcover/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symcover {

namespace {

int first_moved_point(const Permutation& p) {
  for (int x = 0; x < p.degree(); ++x) {
    if (p(x) != x) return x;
  }
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::span<const int> base_prefix)
    : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("PermGroup: negative degree");
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
  for (int b : base_prefix) {
    if (b < 0 || b >= degree) throw std::invalid_argument("PermGroup: base point out of range");
    if (std::find(base_.begin(), base_.end(), b) == base_.end()) add_level(b);
  }
  for (const auto& g : generators_) {
    const bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](int b) { return g(b) == b; });
    if (fixes_base) add_level(first_moved_point(g));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      bool fixes = true;
      for (std::size_t k = 0; k < i && fixes; ++k) fixes = g(base_[k]) == base_[k];
      if (fixes) levels_[i].gens.push_back(g);
    }
    rebuild_transversal(levels_[i]);
  }
  schreier_sims();
}

void PermGroup::add_level(int point) {
  base_.push_back(point);
  Level lv;
  lv.point = point;
  levels_.push_back(std::move(lv));
  rebuild_transversal(levels_.back());
}

void PermGroup::rebuild_transversal(Level& level) const {
  level.orbit.assign(1, level.point);
  level.slot.assign(static_cast<std::size_t>(degree_), -1);
  level.slot[static_cast<std::size_t>(level.point)] = 0;
  level.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int p = level.orbit[k];
    for (const auto& g : level.gens) {
      const int q = g(p);
      if (level.slot[static_cast<std::size_t>(q)] >= 0) continue;
      level.slot[static_cast<std::size_t>(q)] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(q);
      level.transversal.push_back(level.transversal[k] * g);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation h, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto& lv = levels_[i];
    const int beta = h(lv.point);
    const int k = lv.slot[static_cast<std::size_t>(beta)];
    if (k < 0) return {std::move(h), i};
    h = h * lv.transversal[static_cast<std::size_t>(k)].inverse();
  }
  return {std::move(h), levels_.size()};
}

void PermGroup::schreier_sims() {
  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    auto& lv = levels_[static_cast<std::size_t>(i)];
    bool extended = false;
    for (std::size_t k = 0; !extended && k < lv.orbit.size(); ++k) {
      for (const auto& g : lv.gens) {
        const int image = g(lv.orbit[k]);
        const auto& u_image = lv.transversal[static_cast<std::size_t>(lv.slot[static_cast<std::size_t>(image)])];
        Permutation schreier = lv.transversal[k] * g * u_image.inverse();
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) add_level(first_moved_point(h));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          rebuild_transversal(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::vector<std::size_t> PermGroup::fundamental_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

GroupOrder PermGroup::order() const {
  GroupOrder o = 1;
  for (const auto& lv : levels_) o *= lv.orbit.size();
  return o;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [h, j] = sift(p, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> out{point};
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators_) {
      const int q = g(out[k]);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PermGroup::orbit_partition() const {
  std::vector<int> id(static_cast<std::size_t>(degree_), -1);
  int next = 0;
  for (int x = 0; x < degree_; ++x) {
    if (id[static_cast<std::size_t>(x)] >= 0) continue;
    for (int y : orbit(x)) id[static_cast<std::size_t>(y)] = next;
    ++next;
  }
  return id;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || orbit(0).size() == static_cast<std::size_t>(degree_);
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out = generators_;
  for (const auto& lv : levels_) {
    for (const auto& g : lv.gens) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const int> points) const {
  const PermGroup chain(degree_, strong_generators(), points);
  // Strong generators at the level after the prefix generate the pointwise
  // stabilizer; past the end of the chain it is trivial.
  std::size_t depth = 0;
  std::vector<int> uniq;
  for (int p : points) {
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  }
  depth = uniq.size();
  std::vector<Permutation> gens;
  if (depth < chain.levels_.size()) gens = chain.levels_[depth].gens;
  std::vector<int> rest(chain.base_.begin() + static_cast<std::ptrdiff_t>(std::min(depth, chain.base_.size())),
                        chain.base_.end());
  return PermGroup(degree_, std::move(gens), rest);
}

PermGroup PermGroup::stabilizer(int point) const {
  const int pts[] = {point};
  return pointwise_stabilizer(pts);
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order() > limit) throw std::invalid_argument("PermGroup::elements: group too large to list");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // Every element is u_k * ... * u_0 with u_i from the level-i transversal.
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->transversal.size());
    for (const auto& e : out) {
      for (const auto& u : it->transversal) next.push_back(e * u);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symcover
