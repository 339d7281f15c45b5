#pragma once

// Labeled multigraphs on vertices 0..n-1.  A loop contributes 2 to the degree.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cubic::oracle {

using Edge = std::pair<int, int>;  // first <= second

struct LabeledGraph {
  int n = 0;
  std::vector<Edge> edges;  // sorted multiset

  std::vector<int> degrees() const;
  bool is_cubic() const;
  bool has_loops() const;
  bool has_multiedges() const;
  bool is_simple() const { return !has_loops() && !has_multiedges(); }

  // loops removed, multiplicities collapsed
  LabeledGraph simple_reduction() const;
  // bitmask adjacency of the reduction (n <= 64)
  std::vector<std::uint64_t> adjacency() const;

  int components() const;
  // largest k <= 3 with the graph k-connected (loops ignored; an isthmus
  // makes it at most 1-connected)
  int connectivity_level() const;
  // 3-cycles on distinct vertices each joined by exactly one edge
  int count_triangles() const;

  // "0-1 0-2 ..." one graph per line
  std::string to_edge_list() const;
};

LabeledGraph make_graph(int n, std::vector<Edge> edges);
LabeledGraph complete_graph(int n);
LabeledGraph complete_bipartite(int a, int b);
LabeledGraph prism();

}  // namespace cubic::oracle
