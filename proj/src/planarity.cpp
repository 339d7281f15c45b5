#include "cubic/planarity.hpp"

#include <bit>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <stdexcept>

namespace cubic::oracle {

bool is_planar(const LabeledGraph& g) {
  LabeledGraph s = g.simple_reduction();
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(s.n);
  for (auto [a, b] : s.edges) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

// Is the edge subset (bitmask over `edges`) a subdivision of K3,3?
bool subdivided_k33(int n, const std::vector<Edge>& edges, std::uint32_t subset) {
  std::vector<int> deg(n, 0);
  std::vector<std::vector<int>> inc(n);
  for (std::uint32_t m = subset; m; m &= m - 1) {
    int i = std::countr_zero(m);
    auto [a, b] = edges[i];
    ++deg[a];
    ++deg[b];
    inc[a].push_back(i);
    inc[b].push_back(i);
  }
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) return false;
    if (deg[v] == 3) branch.push_back(v);
  }
  if (branch.size() != 6) return false;
  // walk each path leaving a branch vertex to the next branch vertex
  std::vector<std::uint64_t> joined(n, 0);
  std::uint32_t used = 0;
  for (int b : branch) {
    for (int e0 : inc[b]) {
      if (used >> e0 & 1) continue;
      int prev = b, e = e0, cur;
      for (;;) {
        used |= 1u << e;
        cur = edges[e].first == prev ? edges[e].second : edges[e].first;
        if (deg[cur] == 3) break;
        int next = inc[cur][0] == e ? inc[cur][1] : inc[cur][0];
        prev = cur;
        e = next;
      }
      if (cur == b || (joined[b] >> cur & 1)) return false;
      joined[b] |= 1ULL << cur;
      joined[cur] |= 1ULL << b;
    }
  }
  // every edge of the subset lies on a branch path (no stray cycles)
  if (used != subset) return false;
  // the branch graph must be K3,3: 3-regular, bipartite, 9 edges
  int side[64];
  for (int v : branch) side[v] = -1;
  side[branch[0]] = 0;
  for (int round = 0; round < 6; ++round)
    for (int v : branch)
      if (side[v] >= 0)
        for (int w : branch)
          if (joined[v] >> w & 1) {
            if (side[w] < 0) side[w] = 1 - side[v];
            if (side[w] == side[v]) return false;
          }
  int left = 0;
  for (int v : branch) {
    if (side[v] < 0 || std::popcount(joined[v]) != 3) return false;
    left += side[v] == 0;
  }
  return left == 3;
}

}  // namespace

bool is_planar_kuratowski(const LabeledGraph& g) {
  LabeledGraph s = g.simple_reduction();
  for (int d : s.degrees())
    if (d > 3) throw std::domain_error("Kuratowski search supports maximum degree 3");
  int n = s.n, m = int(s.edges.size());
  if (n >= 3 && m > 3 * n - 6) return false;
  if (m < 9) return true;
  if (m > 31) throw std::domain_error("Kuratowski search supports at most 31 edges");
  // subsets with at least 9 edges, by Gosper's hack over each size
  for (int k = 9; k <= m; ++k) {
    std::uint32_t x = (1u << k) - 1, limit = m == 32 ? 0 : (1u << m);
    while (x < limit) {
      if (subdivided_k33(n, s.edges, x)) return false;
      std::uint32_t c = x & (~x + 1), r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return true;
}

}  // namespace cubic::oracle
