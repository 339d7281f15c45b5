#include "cubic/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cubic::oracle {

namespace {

// connected components on the vertices in `alive`, adjacency as masks
int count_components(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
  int c = 0;
  while (alive) {
    std::uint64_t seen = alive & (~alive + 1), frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    alive &= ~seen;
    ++c;
  }
  return c;
}

std::uint64_t all_vertices(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

}  // namespace

LabeledGraph make_graph(int n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  return {n, std::move(edges)};
}

LabeledGraph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

LabeledGraph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return make_graph(a + b, e);
}

LabeledGraph prism() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

std::vector<int> LabeledGraph::degrees() const {
  std::vector<int> d(n, 0);
  for (auto [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

bool LabeledGraph::is_cubic() const {
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int k) { return k == 3; });
}

bool LabeledGraph::has_loops() const {
  return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.first == e.second; });
}

bool LabeledGraph::has_multiedges() const { return std::adjacent_find(edges.begin(), edges.end()) != edges.end(); }

LabeledGraph LabeledGraph::simple_reduction() const {
  LabeledGraph g{n, {}};
  for (const auto& e : edges)
    if (e.first != e.second && (g.edges.empty() || g.edges.back() != e)) g.edges.push_back(e);
  return g;
}

std::vector<std::uint64_t> LabeledGraph::adjacency() const {
  if (n > 64) throw std::invalid_argument("adjacency masks need n <= 64");
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [a, b] : edges)
    if (a != b) {
      adj[a] |= 1ULL << b;
      adj[b] |= 1ULL << a;
    }
  return adj;
}

int LabeledGraph::components() const {
  if (n == 0) return 0;
  return count_components(adjacency(), all_vertices(n));
}

int LabeledGraph::connectivity_level() const {
  if (n == 0) return 0;
  auto adj = adjacency();
  std::uint64_t all = all_vertices(n);
  if (count_components(adj, all) != 1) return 0;
  if (n == 1) return 1;
  // isthmus: a non-loop edge of multiplicity one whose removal disconnects
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a == b) continue;
    bool multiple = (i > 0 && edges[i - 1] == edges[i]) || (i + 1 < edges.size() && edges[i + 1] == edges[i]);
    if (multiple) continue;
    auto cut = adj;
    cut[a] &= ~(1ULL << b);
    cut[b] &= ~(1ULL << a);
    if (count_components(cut, all) != 1) return 1;
  }
  for (int v = 0; v < n; ++v)
    if (n > 2 && count_components(adj, all & ~(1ULL << v)) != 1) return 1;
  if (n < 4) return 2;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (count_components(adj, all & ~(1ULL << v) & ~(1ULL << w)) != 1) return 2;
  return 3;
}

int LabeledGraph::count_triangles() const {
  // multiplicity-one adjacency
  std::vector<std::uint64_t> adj(n, 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a == b) continue;
    bool multiple = (i > 0 && edges[i - 1] == edges[i]) || (i + 1 < edges.size() && edges[i + 1] == edges[i]);
    if (multiple) continue;
    adj[a] |= 1ULL << b;
    adj[b] |= 1ULL << a;
  }
  int t = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[a] >> b & 1) t += std::popcount(adj[a] & adj[b] & ~all_vertices(b + 1));
  return t;
}

std::string LabeledGraph::to_edge_list() const {
  std::ostringstream os;
  for (size_t i = 0; i < edges.size(); ++i) os << (i ? " " : "") << edges[i].first << '-' << edges[i].second;
  return os.str();
}

}  // namespace cubic::oracle
