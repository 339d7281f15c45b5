#pragma once

// Exhaustive enumeration of labeled cubic (multi)graphs for small n.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "cubic/graph.hpp"

namespace cubic::oracle {

class BoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PlanarityMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

constexpr int max_simple_n = 10;
constexpr int max_multigraph_n = 8;

struct EnumFlags {
  bool allow_loops = false;
  bool allow_multiedges = false;
  bool require_planar = true;
  bool require_triangle_free = false;
  int connectivity_min = 0;  // 0 any, 1 connected, 2 biconnected, 3
  // run both planarity tests and require agreement for n up to this
  int cross_check_up_to = 8;
};

struct EnumSummary {
  int n = 0;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_triangles;
  std::map<int, std::uint64_t> by_components;
  std::uint64_t generated = 0;      // cubic graphs before filtering
  std::uint64_t cross_checked = 0;  // graphs seen by both planarity tests

  void merge(const EnumSummary& o);
  bool operator==(const EnumSummary& o) const;
};

using GraphSink = std::function<void(const LabeledGraph&)>;

// Throws BoundExceeded past max_simple_n / max_multigraph_n and
// std::invalid_argument for odd n.
EnumSummary enumerate(int n, const EnumFlags& flags, const GraphSink& sink = {});

// number of partitions (choices of the first vertex's first edge)
int partition_count(int n, const EnumFlags& flags);
EnumSummary enumerate_partition(int n, const EnumFlags& flags, int part, const GraphSink& sink = {});
// partitions spread over `threads` workers, merged
EnumSummary enumerate_parallel(int n, const EnumFlags& flags, int threads);

}  // namespace cubic::oracle
