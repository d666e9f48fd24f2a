#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symcover/cayley.hpp"

// Small graphs with known automorphism groups, n <= 10.
inline std::vector<std::pair<std::string, symcover::Graph>> small_corpus() {
  using namespace symcover;
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 3; n <= 10; ++n) out.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (int n : {2, 3, 4, 5, 6, 10}) out.emplace_back("P" + std::to_string(n), path_graph(n));
  for (int n = 4; n <= 7; ++n) out.emplace_back("K" + std::to_string(n), complete_graph(n));
  out.emplace_back("Q3", hypercube(3));
  out.emplace_back("Petersen", petersen_graph());
  return out;
}
