#include <doctest.h>

#include <sstream>

#include "symcover/cayley.hpp"
#include "symcover/graph_io.hpp"

using namespace symcover;

TEST_SUITE("graph") {

TEST_CASE("construction rules") {
  using E = std::vector<std::pair<int, int>>;
  CHECK_THROWS_AS(Graph(3, E{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, E{{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, E{{-1, 1}}), std::invalid_argument);
  const Graph g(3, E{{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edges() == E{{0, 1}, {1, 2}});
  CHECK_FALSE(g.valency());
  CHECK(g.is_connected());
  CHECK(g.is_bipartite());
}

TEST_CASE("named graphs") {
  CHECK(cycle_graph(8).valency() == 2);
  CHECK_FALSE(cycle_graph(7).is_bipartite());
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(complete_graph(5).edge_count() == 10);
  const auto p = petersen_graph();
  CHECK(p.n() == 10);
  CHECK(p.valency() == 3);
  CHECK_FALSE(p.is_bipartite());
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  const int s[] = {1, 2};
  CHECK(circulant_graph(8, s).valency() == 4);
  const Graph two_triangles(6, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(two_triangles.is_connected());
  CHECK(two_triangles.components() == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("graph6 encodings are bit exact") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(cycle_graph(8)) == "GhCGKC");
  CHECK(to_graph6(hypercube(3)) == "Gr`HOk");
  CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(to_graph6(Graph(0, {})) == "?");
  const Graph big(70, std::vector<std::pair<int, int>>{{0, 69}, {3, 4}});
  const auto s = to_graph6(big);
  CHECK(s.size() == 407);
  CHECK(s.substr(0, 4) == "~?@E");
  CHECK(from_graph6(s) == big);
}

TEST_CASE("graph6 decoding") {
  CHECK(from_graph6(">>graph6<<C~\n") == complete_graph(4));
  CHECK(from_graph6("  IheA@GUAo  ") == petersen_graph());
  for (const auto& g : {cycle_graph(5), hypercube(4), path_graph(9), complete_graph(12)}) {
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("C~~"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("C\x01"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("B@"), std::invalid_argument);  // padding bit set
  CHECK_THROWS_AS(from_graph6("~?"), std::invalid_argument);
}

TEST_CASE("DIMACS round trip and errors") {
  std::stringstream ss;
  write_dimacs(ss, petersen_graph());
  CHECK(ss.str().rfind("p edge 10 15\n", 0) == 0);
  CHECK(read_dimacs(ss) == petersen_graph());
  std::istringstream with_comments("c hello\np edge 3 2\ne 1 2\nc mid\ne 2 3\n");
  CHECK(read_dimacs(with_comments) == path_graph(3));
  std::istringstream bad_count("p edge 3 3\ne 1 2\n");
  CHECK_THROWS_AS(read_dimacs(bad_count), std::invalid_argument);
  std::istringstream bad_vertex("p edge 3 1\ne 1 4\n");
  CHECK_THROWS_AS(read_dimacs(bad_vertex), std::invalid_argument);
  std::istringstream no_header("e 1 2\n");
  CHECK_THROWS_AS(read_dimacs(no_header), std::invalid_argument);
  std::istringstream junk("p edge 2 1\nx 1 2\n");
  CHECK_THROWS_AS(read_dimacs(junk), std::invalid_argument);
}

TEST_CASE("json round trip keeps labels") {
  const auto q = hypercube(3);
  const auto j = to_json(q);
  CHECK(j["n"] == 8);
  CHECK(j["edges"].size() == 12);
  const auto back = graph_from_json(j);
  CHECK(back == q);
  CHECK(back.label_kind() == q.label_kind());
  CHECK(std::equal(back.labels().begin(), back.labels().end(), q.labels().begin(), q.labels().end()));
}

}
