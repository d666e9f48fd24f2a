#include "symcover/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace symcover {

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.n());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph from_graph6(const std::string& raw) {
  std::size_t b = 0;
  std::size_t e = raw.size();
  while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
  std::string s = raw.substr(b, e - b);
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : s) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character in input");
  }
  std::size_t pos = 0;
  std::uint64_t n = 0;
  const auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > s.size()) {
      throw std::invalid_argument("graph6: truncated vertex count");
    }
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    return v;
  };
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > 100000) throw std::invalid_argument("graph6: vertex count too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes) {
    throw std::invalid_argument("graph6: expected " + std::to_string(bytes) +
                                " adjacency bytes, found " + std::to_string(s.size() - pos));
  }
  std::vector<std::pair<int, int>> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (k % 6 != 0) {
    const int byte = s.back() - 63;
    if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw std::invalid_argument("graph6: nonzero padding bits");
    }
  }
  return Graph(static_cast<int>(n), edges);
}

void write_dimacs(std::ostream& os, const Graph& g) {
  os << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_dimacs(std::istream& is) {
  std::string line;
  long n = -1;
  long declared = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    const auto bad = [&](const std::string& why) {
      return std::invalid_argument("DIMACS line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      std::string kind;
      if (n >= 0) throw bad("duplicate problem line");
      if (!(ls >> kind >> n >> declared) || (kind != "edge" && kind != "col") || n < 0 || declared < 0) {
        throw bad("expected 'p edge <n> <m>'");
      }
    } else if (tag == "e") {
      long u = 0;
      long v = 0;
      if (n < 0) throw bad("edge before problem line");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n) throw bad("invalid edge");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw bad("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("DIMACS: missing 'p edge' line");
  if (static_cast<long>(edges.size()) != declared) {
    throw std::invalid_argument("DIMACS: header declares " + std::to_string(declared) +
                                " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json j = {{"n", g.n()}, {"edges", edges}};
  if (g.label_kind() != LabelKind::None) {
    j["label_kind"] = g.label_kind() == LabelKind::GroupElement ? "group_element" : "coset_vector";
    j["labels"] = std::vector<std::uint64_t>(g.labels().begin(), g.labels().end());
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  Graph g(j.at("n").get<int>(), edges);
  if (j.contains("labels")) {
    const auto kind = j.value("label_kind", std::string("group_element")) == "coset_vector"
                          ? LabelKind::CosetVector
                          : LabelKind::GroupElement;
    g = g.with_labels(kind, j.at("labels").get<std::vector<std::uint64_t>>());
  }
  return g;
}

}  // namespace symcover
