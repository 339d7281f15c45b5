#include "cubic/oracle.hpp"

#include <atomic>
#include <thread>
#include <unordered_map>
#include <vector>

#include "cubic/planarity.hpp"

namespace cubic::oracle {

void EnumSummary::merge(const EnumSummary& o) {
  total += o.total;
  generated += o.generated;
  cross_checked += o.cross_checked;
  for (auto [k, v] : o.by_triangles) by_triangles[k] += v;
  for (auto [k, v] : o.by_components) by_components[k] += v;
}

bool EnumSummary::operator==(const EnumSummary& o) const {
  return n == o.n && total == o.total && by_triangles == o.by_triangles && by_components == o.by_components &&
         generated == o.generated;
}

namespace {

void check_bounds(int n, const EnumFlags& f) {
  if (n < 0 || n % 2) throw std::invalid_argument("cubic graphs need an even number of vertices");
  bool multi = f.allow_loops || f.allow_multiedges;
  int bound = multi ? max_multigraph_n : max_simple_n;
  if (n > bound)
    throw BoundExceeded("refusing exhaustive enumeration at n = " + std::to_string(n) + " (bound " +
                        std::to_string(bound) + ")");
}

struct Enumerator {
  int n;
  EnumFlags flags;
  const GraphSink* sink;
  EnumSummary summary;
  std::vector<int> residual;
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, bool> planar_cache;
  // restrict the first edge of vertex 0 to one choice
  int only_first = -1;
  int first_counter = 0;

  bool planar(const LabeledGraph& g) {
    LabeledGraph s = g.simple_reduction();
    // upper-triangle adjacency bits; n <= 10 keeps this within 45 bits
    std::uint64_t key = 0;
    for (auto [a, b] : s.edges) key |= 1ULL << (a * n - a * (a + 1) / 2 + (b - a - 1));
    auto it = planar_cache.find(key);
    if (it != planar_cache.end()) return it->second;
    bool p = is_planar(s);
    if (n <= flags.cross_check_up_to) {
      ++summary.cross_checked;
      if (p != is_planar_kuratowski(s)) throw PlanarityMismatch("planarity tests disagree on " + s.to_edge_list());
    }
    planar_cache.emplace(key, p);
    return p;
  }

  void emit() {
    LabeledGraph g{n, edges};
    ++summary.generated;
    if (flags.require_triangle_free && g.count_triangles() > 0) return;
    if (flags.connectivity_min > 0 && g.connectivity_level() < flags.connectivity_min) return;
    if (flags.require_planar && !planar(g)) return;
    ++summary.total;
    ++summary.by_triangles[g.count_triangles()];
    ++summary.by_components[g.components()];
    if (sink && *sink) (*sink)(g);
  }

  // fill the smallest unsaturated vertex v; partners >= last (non-decreasing)
  void rec(int v, int last) {
    while (v < n && residual[v] == 0) {
      ++v;
      last = -1;
    }
    if (v == n) {
      emit();
      return;
    }
    int start = last < 0 ? v : last;
    for (int w = start; w < n; ++w) {
      if (w == v) {
        if (!flags.allow_loops || residual[v] < 2) continue;
      } else {
        if (residual[w] == 0) continue;
        if (w == last && !flags.allow_multiedges) continue;
      }
      if (v == 0 && last < 0 && only_first >= 0 && first_counter++ != only_first) continue;
      edges.emplace_back(v, w);
      if (w == v) {
        residual[v] -= 2;
      } else {
        --residual[v];
        --residual[w];
      }
      rec(v, w);
      if (w == v) {
        residual[v] += 2;
      } else {
        ++residual[v];
        ++residual[w];
      }
      edges.pop_back();
    }
  }

  void run() {
    residual.assign(n, 3);
    summary.n = n;
    if (n == 0) return;
    rec(0, -1);
  }
};

}  // namespace

EnumSummary enumerate(int n, const EnumFlags& flags, const GraphSink& sink) {
  check_bounds(n, flags);
  Enumerator e{n, flags, &sink, {}, {}, {}, {}};
  e.run();
  return e.summary;
}

int partition_count(int n, const EnumFlags& flags) {
  check_bounds(n, flags);
  if (n == 0) return 1;
  // first edge of vertex 0: a loop (if allowed) or any other vertex
  return (flags.allow_loops ? 1 : 0) + (n - 1);
}

EnumSummary enumerate_partition(int n, const EnumFlags& flags, int part, const GraphSink& sink) {
  check_bounds(n, flags);
  Enumerator e{n, flags, &sink, {}, {}, {}, {}};
  e.only_first = part;
  e.run();
  return e.summary;
}

EnumSummary enumerate_parallel(int n, const EnumFlags& flags, int threads) {
  int parts = partition_count(n, flags);
  std::vector<EnumSummary> results(parts);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int p; (p = next++) < parts;) results[p] = enumerate_partition(n, flags, p);
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  EnumSummary total;
  total.n = n;
  for (const auto& r : results) total.merge(r);
  return total;
}

}  // namespace cubic::oracle
