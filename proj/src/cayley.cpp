#include "symcover/cayley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symcover {

Graph build_cayley(const ExtraspecialGroup& group, std::span<const GroupElement> connection) {
  if (group.r() > kMaxCayleyRank) {
    throw std::invalid_argument("build_cayley: r = " + std::to_string(group.r()) +
                                " exceeds the graph guard r <= " +
                                std::to_string(kMaxCayleyRank));
  }
  std::vector<std::uint64_t> ids;
  for (const auto& s : connection) {
    group.check(s);
    if (s == group.identity()) throw std::invalid_argument("build_cayley: identity in S");
    ids.push_back(group.id(s));
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw std::invalid_argument("build_cayley: repeated element in S");
  }
  for (const auto& s : connection) {
    if (!std::binary_search(ids.begin(), ids.end(), group.id(group.inverse(s)))) {
      throw std::invalid_argument("build_cayley: S is not inverse-closed (" + render(group, s) +
                                  " has no inverse in S)");
    }
  }
  const auto n = group.order();
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t x = 0; x < n; ++x) {
    const GroupElement g = group.element(x);
    for (const auto& s : connection) {
      const auto y = group.id(group.multiply(s, g));
      if (x < y) edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  Graph graph(static_cast<int>(n), edges);
  const auto comp = graph.components();
  const auto reached = std::count(comp.begin(), comp.end(), 0);
  if (static_cast<std::uint64_t>(reached) != n) {
    throw std::invalid_argument("build_cayley: S does not generate G (component of the identity has " +
                                std::to_string(reached) + " of " + std::to_string(n) +
                                " vertices)");
  }
  std::vector<std::uint64_t> labels(n);
  for (std::uint64_t x = 0; x < n; ++x) labels[x] = x;
  return graph.with_labels(LabelKind::GroupElement, std::move(labels));
}

Graph hypercube(int d) {
  if (d < 1 || d > kMaxHypercubeDim) {
    throw std::invalid_argument("hypercube: d must be in 1.." + std::to_string(kMaxHypercubeDim));
  }
  const int n = 1 << d;
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < d; ++i) {
      const int y = x ^ (1 << i);
      if (x < y) edges.emplace_back(x, y);
    }
  }
  std::vector<std::uint64_t> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = static_cast<std::uint64_t>(x);
  return Graph(n, edges).with_labels(LabelKind::CosetVector, std::move(labels));
}

Graph quotient_graph(const Graph& graph, std::span<const int> fiber, int parts) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : graph.edges()) {
    const int a = fiber[static_cast<std::size_t>(u)];
    const int b = fiber[static_cast<std::size_t>(v)];
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(parts, edges);
}

std::vector<int> center_fibers(const ExtraspecialGroup& group, const Graph& graph) {
  if (graph.label_kind() != LabelKind::GroupElement) {
    throw std::invalid_argument("quotient_by_center: graph has no group-element labels");
  }
  if (static_cast<std::uint64_t>(graph.n()) != group.order()) {
    throw std::invalid_argument("quotient_by_center: graph size does not match |G|");
  }
  std::vector<int> fiber(static_cast<std::size_t>(graph.n()));
  for (int v = 0; v < graph.n(); ++v) {
    fiber[static_cast<std::size_t>(v)] =
        static_cast<int>(graph.labels()[static_cast<std::size_t>(v)] & low_mask(group.rank()));
  }
  return fiber;
}

Graph quotient_by_center(const ExtraspecialGroup& group, const Graph& graph) {
  const auto fiber = center_fibers(group, graph);
  const int parts = 1 << group.rank();
  std::vector<std::uint64_t> labels(static_cast<std::size_t>(parts));
  for (int p = 0; p < parts; ++p) labels[static_cast<std::size_t>(p)] = static_cast<std::uint64_t>(p);
  return quotient_graph(graph, fiber, parts).with_labels(LabelKind::CosetVector, std::move(labels));
}

CoverCheck is_cover(const Graph& graph, const Graph& quotient, std::span<const int> fiber) {
  if (fiber.size() != static_cast<std::size_t>(graph.n())) {
    throw std::invalid_argument("is_cover: fiber map must cover every vertex");
  }
  std::vector<int> size(static_cast<std::size_t>(quotient.n()), 0);
  for (int f : fiber) {
    if (f < 0 || f >= quotient.n()) throw std::invalid_argument("is_cover: fiber index out of range");
    ++size[static_cast<std::size_t>(f)];
  }
  if (std::find(size.begin(), size.end(), 0) != size.end()) {
    throw std::invalid_argument("is_cover: some quotient vertex has an empty fiber");
  }
  CoverCheck res;
  res.uniform_fibers = std::all_of(size.begin(), size.end(), [&](int s) { return s == size[0]; });
  const auto vg = graph.valency();
  const auto vq = quotient.valency();
  res.equal_valency = vg && vq && *vg == *vq;
  if (!res.equal_valency) {
    res.witness = "valency " + (vg ? std::to_string(*vg) : std::string("irregular")) +
                  " vs quotient valency " + (vq ? std::to_string(*vq) : std::string("irregular"));
  }
  res.local_bijection = true;
  for (int v = 0; v < graph.n() && res.local_bijection; ++v) {
    const int p = fiber[static_cast<std::size_t>(v)];
    std::vector<int> hit;
    for (int w : graph.neighbors(v)) hit.push_back(fiber[static_cast<std::size_t>(w)]);
    std::sort(hit.begin(), hit.end());
    const auto qn = quotient.neighbors(p);
    if (!std::equal(hit.begin(), hit.end(), qn.begin(), qn.end())) {
      res.local_bijection = false;
      if (res.witness.empty()) {
        res.witness = "vertex " + std::to_string(v) +
                      " does not map its neighborhood bijectively onto the neighbors of part " +
                      std::to_string(p);
      }
    }
  }
  res.is_cover = res.equal_valency && res.local_bijection;
  return res;
}

GroupElement product(const ExtraspecialGroup& group, std::span<const GroupElement> seq) {
  GroupElement acc = group.identity();
  for (const auto& s : seq) acc = group.multiply(acc, s);
  return acc;
}

CycleSequence extract_cycle_sequence(const ExtraspecialGroup& group, const Graph& graph,
                                     std::span<const int> cycle) {
  if (graph.label_kind() != LabelKind::GroupElement) {
    throw std::invalid_argument("extract_cycle_sequence: graph has no group-element labels");
  }
  const std::size_t t = cycle.size();
  if (t < 3) throw std::invalid_argument("extract_cycle_sequence: a cycle needs at least 3 vertices");
  std::vector<int> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("extract_cycle_sequence: repeated vertex");
  }
  for (std::size_t i = 0; i < t; ++i) {
    const int a = cycle[i];
    const int b = cycle[(i + 1) % t];
    if (a < 0 || a >= graph.n() || !graph.adjacent(a, b)) {
      throw std::invalid_argument("extract_cycle_sequence: vertices " + std::to_string(a) +
                                  " and " + std::to_string(b) + " are not adjacent");
    }
  }
  CycleSequence out{std::vector<int>(cycle.begin(), cycle.end()), {}};
  const auto label = [&](int v) {
    return group.element(graph.labels()[static_cast<std::size_t>(v)]);
  };
  for (std::size_t i = 0; i < t; ++i) {
    const GroupElement ci = label(cycle[i]);
    const GroupElement next = label(cycle[(i + 1) % t]);
    out.seq.push_back(group.multiply(next, group.inverse(ci)));
  }
  GroupElement closing = group.identity();
  for (const auto& s : out.seq) closing = group.multiply(s, closing);
  if (!(closing == group.identity())) {
    throw std::logic_error("cycle sequence does not close: s_t ... s_1 != 1");
  }
  // With involutions the sequence also multiplies to 1 left to right, and a
  // generator cannot repeat at consecutive steps of a simple cycle.
  const bool involutions = std::all_of(out.seq.begin(), out.seq.end(), [&](const GroupElement& s) {
    return group.square(s) == group.identity();
  });
  if (involutions) {
    if (!(product(group, out.seq) == group.identity())) {
      throw std::logic_error("cycle sequence product s_1 ... s_t is not the identity");
    }
    for (std::size_t i = 0; i < t; ++i) {
      if (out.seq[i] == out.seq[(i + 1) % t]) {
        throw std::logic_error("cycle sequence repeats a generator at consecutive steps");
      }
    }
  }
  return out;
}

std::vector<int> eight_cycle(const ExtraspecialGroup& group, int i, int j) {
  if (i == j) throw std::invalid_argument("eight_cycle: i and j must differ");
  const GroupElement gi = group.generator(i);
  const GroupElement gj = group.generator(j);
  std::vector<int> out;
  GroupElement c = group.identity();
  for (int k = 1; k <= 8; ++k) {
    out.push_back(static_cast<int>(group.id(c)));
    c = group.multiply(k % 2 == 1 ? gi : gj, c);
  }
  return out;
}

bool even_occurrence_check(const ExtraspecialGroup& group, std::span<const GroupElement> seq) {
  if (!group.is_central(product(group, seq))) return true;
  std::map<std::uint64_t, int> count;
  for (const auto& s : seq) ++count[group.id(s)];
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

}  // namespace symcover
