#include "symcover/symmetry.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symcover {

bool is_vertex_transitive(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.n()) throw std::invalid_argument("group degree does not match the graph");
  return group.is_transitive();
}

PermGroup stabilizer(const PermGroup& group, int v) { return group.stabilizer(v); }

bool is_arc_transitive(const Graph& g, const PermGroup& group) {
  if (!is_vertex_transitive(g, group)) return false;
  if (g.n() == 0 || g.degree(0) == 0) return true;
  const auto nb = g.neighbors(0);
  const auto orb = group.stabilizer(0).orbit(nb[0]);
  return std::all_of(nb.begin(), nb.end(),
                     [&](int w) { return std::find(orb.begin(), orb.end(), w) != orb.end(); });
}

namespace {

void require_arc_graph(const Graph& g) {
  const auto val = g.valency();
  if (!val) throw std::invalid_argument("2-arc-transitivity: graph is not regular");
  if (*val < 2) throw std::invalid_argument("2-arc-transitivity: valency must be at least 2");
  if (!g.is_connected()) throw std::invalid_argument("2-arc-transitivity: graph is disconnected");
}

bool orbit_covers(const std::vector<Permutation>& gens, int start, const std::vector<int>& targets) {
  std::vector<int> orbit{start};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& p : gens) {
      const int y = p(orbit[k]);
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
    }
  }
  return std::all_of(targets.begin(), targets.end(), [&](int t) {
    return std::find(orbit.begin(), orbit.end(), t) != orbit.end();
  });
}

bool two_arcs_single_orbit(const Graph& g, const PermGroup& group) {
  // 2-arcs (a, b, c): a ~ b ~ c, a != c.
  std::vector<std::array<int, 3>> arcs;
  for (int b = 0; b < g.n(); ++b) {
    for (int a : g.neighbors(b)) {
      for (int c : g.neighbors(b)) {
        if (a != c) arcs.push_back({a, b, c});
      }
    }
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<bool> seen(arcs.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto k = stack.back();
    stack.pop_back();
    for (const auto& p : group.generators()) {
      const std::array<int, 3> img = {p(arcs[k][0]), p(arcs[k][1]), p(arcs[k][2])};
      const auto it = std::lower_bound(arcs.begin(), arcs.end(), img);
      if (it == arcs.end() || *it != img) throw std::logic_error("group element is not an automorphism");
      const auto idx = static_cast<std::size_t>(it - arcs.begin());
      if (!seen[idx]) {
        seen[idx] = true;
        ++reached;
        stack.push_back(idx);
      }
    }
  }
  return reached == arcs.size();
}

}  // namespace

ArcTransitivity two_arc_transitivity(const Graph& g, const PermGroup& group) {
  require_arc_graph(g);
  if (group.degree() != g.n()) throw std::invalid_argument("group degree does not match the graph");
  ArcTransitivity res;
  const auto nbrs = g.neighbors(0);
  const std::vector<int> n0(nbrs.begin(), nbrs.end());
  if (!group.is_transitive()) {
    res.witness = "not vertex-transitive: orbit of vertex 0 has " +
                  std::to_string(group.orbit(0).size()) + " of " + std::to_string(g.n()) + " vertices";
  } else {
    const PermGroup h = group.stabilizer(0);
    const auto hg = h.strong_generators();
    if (!orbit_covers(hg, n0[0], n0)) {
      res.witness = "stabilizer of vertex 0 is not transitive on its neighbors";
    } else {
      const int pts[] = {0, n0[0]};
      const PermGroup k = group.pointwise_stabilizer(pts);
      const std::vector<int> rest(n0.begin() + 1, n0.end());
      if (!orbit_covers(k.strong_generators(), rest[0], rest)) {
        res.witness = "stabilizer of the arc (0, " + std::to_string(n0[0]) +
                      ") is not transitive on the remaining neighbors of 0";
      } else {
        res.stabilizer_route = true;
      }
    }
  }
  if (g.n() <= kDirectTwoArcLimit) {
    res.direct_count = two_arcs_single_orbit(g, group);
    if (*res.direct_count != res.stabilizer_route) {
      throw std::logic_error("2-arc-transitivity: stabilizer route and direct count disagree");
    }
  }
  res.transitive = res.stabilizer_route;
  return res;
}

bool is_2_arc_transitive(const Graph& g, const PermGroup& group) {
  return two_arc_transitivity(g, group).transitive;
}

bool is_2_arc_transitive(const Graph& g) {
  require_arc_graph(g);
  return is_2_arc_transitive(g, automorphism_group(g));
}

PermGroup pointwise_neighborhood_stabilizer(const Graph& g, const PermGroup& group, int v) {
  std::vector<int> pts{v};
  for (int w : g.neighbors(v)) pts.push_back(w);
  return group.pointwise_stabilizer(pts);
}

namespace {

std::unordered_map<std::uint64_t, int> vertex_of_label(const Graph& g) {
  if (g.label_kind() != LabelKind::GroupElement) {
    throw std::invalid_argument("graph has no group-element labels");
  }
  std::unordered_map<std::uint64_t, int> m;
  for (int v = 0; v < g.n(); ++v) m.emplace(g.labels()[static_cast<std::size_t>(v)], v);
  return m;
}

Permutation relabel(const ExtraspecialGroup& group, const Graph& g,
                    const std::function<GroupElement(const GroupElement&)>& f) {
  const auto where = vertex_of_label(g);
  std::vector<int> images(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    const auto x = group.element(g.labels()[static_cast<std::size_t>(v)]);
    images[static_cast<std::size_t>(v)] = where.at(group.id(f(x)));
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation right_multiplication(const ExtraspecialGroup& group, const Graph& g,
                                 const GroupElement& h) {
  return relabel(group, g, [&](const GroupElement& x) { return group.multiply(x, h); });
}

bool is_regular(const PermGroup& group) {
  return group.is_transitive() && group.order() == group.degree();
}

PermGroup right_regular_embedding(const ExtraspecialGroup& group, const Graph& g) {
  if (static_cast<std::uint64_t>(g.n()) != group.order()) {
    throw std::invalid_argument("right_regular_embedding: graph size does not match |G|");
  }
  std::vector<Permutation> gens;
  for (const auto& h : group.generators()) {
    auto p = right_multiplication(group, g, h);
    if (!is_automorphism(g, p)) {
      throw std::logic_error("right multiplication by " + render(group, h) + " is not an automorphism");
    }
    gens.push_back(std::move(p));
  }
  PermGroup hat(g.n(), std::move(gens));
  if (!is_regular(hat)) throw std::logic_error("right-regular representation is not regular");
  return hat;
}

std::vector<Permutation> sigma_tilde_permutations(const ExtraspecialGroup& group, const Graph& g) {
  const int n = group.rank();
  std::vector<int> transposition(static_cast<std::size_t>(n));
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  std::vector<Permutation> out;
  for (const auto* sigma : {&transposition, &cycle}) {
    out.push_back(relabel(group, g, [&](const GroupElement& x) { return sigma_tilde(group, *sigma, x); }));
  }
  return out;
}

std::optional<std::pair<Permutation, Permutation>> normality_witness(const PermGroup& sub,
                                                                     const PermGroup& group) {
  for (const auto& a : group.generators()) {
    for (const auto& h : sub.generators()) {
      if (!sub.contains(a.conjugate(h))) return std::pair{a, h};
    }
  }
  return std::nullopt;
}

bool is_normal_subgroup(const PermGroup& sub, const PermGroup& group) {
  return !normality_witness(sub, group).has_value();
}

bool is_normal_cayley(const Graph& g, const PermGroup& regular, const PermGroup& aut) {
  for (const auto& p : regular.generators()) {
    if (!is_automorphism(g, p)) throw std::invalid_argument("is_normal_cayley: generator is not an automorphism");
  }
  if (!is_regular(regular)) throw std::invalid_argument("is_normal_cayley: group is not regular");
  return is_normal_subgroup(regular, aut);
}

bool is_normal_cayley(const Graph& g, const PermGroup& regular) {
  return is_normal_cayley(g, regular, automorphism_group(g));
}

bool is_normal_cayley(const Graph& g, const ExtraspecialGroup& group) {
  return is_normal_cayley(g, right_regular_embedding(group, g));
}

bool fixed_cycle_check(const Graph& g, const ExtraspecialGroup& group, const Permutation& rho,
                       int i, int j) {
  if (rho.degree() != g.n()) throw std::invalid_argument("fixed_cycle_check: degree mismatch");
  if (rho(0) != 0) throw std::invalid_argument("fixed_cycle_check: rho moves the identity vertex");
  for (int w : g.neighbors(0)) {
    if (rho(w) != w) {
      throw std::invalid_argument("fixed_cycle_check: rho moves neighbor " + std::to_string(w) +
                                  " of the identity vertex");
    }
  }
  const auto c = eight_cycle(group, i, j);
  return std::all_of(c.begin(), c.end(), [&](int v) { return rho(v) == v; });
}

bool MainTheoremReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string conjugation_witness(const PermGroup& sub, const PermGroup& group) {
  const auto w = normality_witness(sub, group);
  if (!w) return "";
  return ": conjugating " + w->second.cycle_string() + " by " + w->first.cycle_string() +
         " leaves G^";
}

std::string order_string(const GroupOrder& o) {
  std::ostringstream os;
  os << o;
  return os.str();
}

GroupOrder factorial(int k) {
  GroupOrder f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

MainTheoremReport verify_main_theorem(int r, const MainTheoremOptions& opts) {
  static const std::vector<std::string> kAll = {"regular", "cover",  "embedding", "2at",
                                                "normal",  "order",  "stab",      "walks"};
  if (r < 1 || r > kMaxCayleyRank) {
    throw std::invalid_argument("verify: r must be in 1.." + std::to_string(kMaxCayleyRank) +
                                ", got " + std::to_string(r));
  }
  std::vector<std::string> wanted = opts.checks.empty() ? kAll : opts.checks;
  for (const auto& c : wanted) {
    if (std::find(kAll.begin(), kAll.end(), c) == kAll.end()) {
      throw std::invalid_argument("verify: unknown check '" + c + "'");
    }
  }
  if (r > kMaxVerifyRank) {
    if (!opts.checks.empty()) {
      for (const auto& c : wanted) {
        if (c != "regular" && c != "cover" && c != "walks") {
          throw std::invalid_argument("verify: check '" + c + "' is limited to r <= " +
                                      std::to_string(kMaxVerifyRank));
        }
      }
    } else {
      throw std::invalid_argument("verify: the full check set is limited to r <= " +
                                  std::to_string(kMaxVerifyRank) + "; use --checks=cover");
    }
  }
  const auto want = [&](const char* c) { return std::find(wanted.begin(), wanted.end(), c) != wanted.end(); };

  MainTheoremReport rep;
  rep.r = r;
  const ExtraspecialGroup group = from_symmetric_generators(r);
  const auto gens = group.generators();
  const Graph gamma = build_cayley(group, gens);
  rep.vertices = static_cast<std::size_t>(gamma.n());
  const GroupOrder expected = GroupOrder(group.order()) * factorial(2 * r);
  rep.expected_order = order_string(expected);

  using clock = std::chrono::steady_clock;
  const auto timed = [&](const std::string& name, const std::function<CheckResult()>& body) {
    const auto t0 = clock::now();
    CheckResult c = body();
    c.name = name;
    c.millis = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    rep.checks.push_back(std::move(c));
  };

  if (want("regular")) {
    timed("regular", [&] {
      CheckResult c;
      const auto val = gamma.valency();
      c.passed = static_cast<std::uint64_t>(gamma.n()) == group.order() && val && *val == 2 * r &&
                 gamma.is_connected();
      c.detail = std::to_string(gamma.n()) + " vertices, valency " +
                 (val ? std::to_string(*val) : std::string("irregular")) +
                 (gamma.is_connected() ? ", connected" : ", disconnected");
      return c;
    });
  }
  if (want("cover")) {
    timed("cover", [&] {
      CheckResult c;
      const Graph sigma = quotient_by_center(group, gamma);
      const Graph cube = hypercube(2 * r);
      std::vector<int> identity(static_cast<std::size_t>(sigma.n()));
      std::iota(identity.begin(), identity.end(), 0);
      const bool iso = is_isomorphism(sigma, cube, identity);
      const auto fibers = center_fibers(group, gamma);
      const CoverCheck cov = is_cover(gamma, sigma, fibers);
      c.passed = iso && cov.is_cover && cov.uniform_fibers;
      c.detail = std::string("quotient by Z ") + (iso ? "is" : "is NOT") + " Q_" + std::to_string(2 * r) +
                 " via coset words; cover " + (cov.is_cover ? "holds" : "fails");
      if (!cov.witness.empty()) c.detail += " (" + cov.witness + ")";
      if (!cov.uniform_fibers) c.detail += "; fibers not uniform";
      return c;
    });
  }
  if (want("walks")) {
    timed("walks", [&] {
      CheckResult c;
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<int> step(0, 2 * r - 1);
      std::uniform_int_distribution<int> length(2, 16);
      int central = 0;
      c.passed = true;
      for (int w = 0; w < 10000 && c.passed; ++w) {
        std::vector<GroupElement> seq;
        const int len = length(rng);
        for (int k = 0; k < len; ++k) seq.push_back(gens[static_cast<std::size_t>(step(rng))]);
        if (group.is_central(product(group, seq))) ++central;
        if (!even_occurrence_check(group, seq)) {
          c.passed = false;
          std::string s;
          for (const auto& x : seq) s += render(group, x) + " ";
          c.detail = "walk with central endpoint and an odd generator count: " + s;
        }
      }
      if (c.passed) c.detail = "10000 random walks, " + std::to_string(central) + " ending in Z, all even";
      return c;
    });
  }
  if (r > kMaxVerifyRank) return rep;

  std::vector<Permutation> sigma_perms;
  if (want("embedding") || r == kMaxVerifyRank) sigma_perms = sigma_tilde_permutations(group, gamma);
  if (want("embedding")) {
    timed("embedding", [&] {
      CheckResult c;
      const auto emb = verify_sigma_tilde_embedding(group, opts.seed);
      bool ok = emb.ok;
      std::string detail = emb.ok ? "sigma~ embeds S_" + std::to_string(2 * r) + " in Aut(G)" : emb.witness;
      for (const auto& p : sigma_perms) {
        if (!is_automorphism(gamma, p) || p(0) != 0) {
          ok = false;
          detail = "sigma~ image is not a graph automorphism fixing 1";
        }
      }
      if (ok) {
        const PermGroup sym(gamma.n(), sigma_perms);
        const auto nb = gamma.neighbors(0);
        const std::vector<int> n0(nb.begin(), nb.end());
        const int pts[] = {0, n0[0]};
        const PermGroup k = sym.pointwise_stabilizer(pts);
        const bool two_trans = orbit_covers(sym.strong_generators(), n0[0], n0) &&
                               (n0.size() < 2 || orbit_covers(k.strong_generators(), n0[1],
                                                              std::vector<int>(n0.begin() + 1, n0.end())));
        ok = two_trans && sym.order() == factorial(2 * r);
        detail += "; image has order " + order_string(sym.order()) +
                  (two_trans ? ", 2-transitive on N(1)" : ", NOT 2-transitive on N(1)");
      }
      c.passed = ok;
      c.detail = detail;
      return c;
    });
  }

  const PermGroup hat = right_regular_embedding(group, gamma);
  const bool need_aut = want("2at") || want("normal") || want("order") || want("stab");
  std::optional<PermGroup> aut;
  if (need_aut && (r < kMaxVerifyRank || opts.full_aut_at_r4)) {
    const auto t0 = clock::now();
    auto search = automorphism_search(gamma);
    rep.aut_order = order_string(search.group.order());
    aut.emplace(std::move(search.group));
    rep.checks.push_back({"aut-search", true,
                          "|Aut| = " + *rep.aut_order + " after " + std::to_string(search.nodes) +
                              " search nodes",
                          std::chrono::duration<double, std::milli>(clock::now() - t0).count()});
  }
  std::optional<PermGroup> semidirect;
  if (r == kMaxVerifyRank && (want("2at") || want("normal"))) {
    std::vector<Permutation> gens_h(hat.generators().begin(), hat.generators().end());
    gens_h.insert(gens_h.end(), sigma_perms.begin(), sigma_perms.end());
    semidirect.emplace(gamma.n(), std::move(gens_h));
  }

  if (want("2at")) {
    if (semidirect) {
      timed("2at-subgroup", [&] {
        CheckResult c;
        const auto at = two_arc_transitivity(gamma, *semidirect);
        c.passed = at.transitive;
        c.detail = "<G^, sigma~> of order " + order_string(semidirect->order()) +
                   (at.transitive ? " is 2-arc-transitive" : " fails: " + at.witness);
        return c;
      });
    }
    if (aut) {
      timed("2at", [&] {
        CheckResult c;
        const auto at = two_arc_transitivity(gamma, *aut);
        c.passed = at.transitive;
        c.detail = at.transitive ? "Aut is 2-arc-transitive (stabilizer route" +
                                       std::string(at.direct_count ? ", direct count agrees)" : ")")
                                 : at.witness;
        return c;
      });
    }
  }
  if (want("normal")) {
    if (semidirect) {
      timed("normal-subgroup", [&] {
        CheckResult c;
        c.passed = is_normal_cayley(gamma, hat, *semidirect);
        c.detail = c.passed ? "G^ is normal in <G^, sigma~>"
                            : "G^ is not normal in <G^, sigma~>" + conjugation_witness(hat, *semidirect);
        return c;
      });
    }
    if (aut) {
      timed("normal", [&] {
        CheckResult c;
        c.passed = is_normal_cayley(gamma, hat, *aut);
        c.detail = c.passed ? "G^ is normal in Aut"
                            : "G^ is not normal in Aut" + conjugation_witness(hat, *aut);
        return c;
      });
    }
  }
  if (want("order") && aut) {
    timed("order", [&] {
      CheckResult c;
      c.passed = aut->order() == expected;
      c.detail = "|Aut| = " + order_string(aut->order()) + ", expected 2^" + std::to_string(2 * r + 1) +
                 "*(" + std::to_string(2 * r) + ")! = " + rep.expected_order;
      return c;
    });
  }
  if (want("stab") && aut) {
    timed("stab", [&] {
      CheckResult c;
      const PermGroup a11 = pointwise_neighborhood_stabilizer(gamma, *aut, 0);
      c.passed = a11.is_trivial() && a11.order() == 1;
      c.detail = "pointwise stabilizer of 1 and N(1) has order " + order_string(a11.order());
      if (!c.passed && !a11.generators().empty()) {
        c.detail += "; witness " + a11.generators().front().cycle_string();
      }
      return c;
    });
  }
  return rep;
}

nlohmann::json to_json(const MainTheoremReport& report, bool timings) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (timings) j["millis"] = c.millis;
    checks.push_back(j);
  }
  nlohmann::json j = {{"r", report.r},
                      {"vertices", report.vertices},
                      {"expected_aut_order", report.expected_order},
                      {"checks", checks},
                      {"all_passed", report.all_passed()}};
  if (report.aut_order) j["aut_order"] = *report.aut_order;
  return j;
}

}  // namespace symcover
