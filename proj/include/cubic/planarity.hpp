#pragma once

#include "cubic/graph.hpp"

namespace cubic::oracle {

// Boyer-Myrvold edge addition on the simple reduction
bool is_planar(const LabeledGraph& g);

// Independent test for reductions of maximum degree <= 3: Euler bound, then a
// search over edge subsets for a subdivided K3,3 (no K5 subdivision exists at
// this degree).  Throws std::domain_error on a vertex of degree > 3.
bool is_planar_kuratowski(const LabeledGraph& g);

}  // namespace cubic::oracle
