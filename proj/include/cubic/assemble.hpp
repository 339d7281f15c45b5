#pragma once

#include <span>
#include <vector>

#include "json.hpp"

#include "cubic/netsolve.hpp"

namespace cubic::assemble {

// Connected graphs from the networks by the dissymmetry theorem.
Series connected_by_dissymmetry(const netsolve::NetworkBundle& b);
// Connected graphs by undoing the vertex rooting: C = sum C*_n x^n / n.
Series connected_by_rooting(const netsolve::NetworkBundle& b);
// 2-connected graphs B = sum B*_n x^n / n (biconnected bundle).
Series biconnected(const netsolve::NetworkBundle& b);
// All graphs, exp(C).
Series all_graphs(const Series& connected);

struct CountRow {
  int n;
  BigInt count;
};

struct CountTable {
  Family family;
  std::vector<CountRow> rows;  // even n from 2 up to the order

  const BigInt& at(int n) const;
  int max_n() const { return rows.empty() ? 0 : rows.back().n; }
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// n! [x^n] egf for even n in [2, order]; throws if any value is not a
// nonnegative integer or if an odd coefficient is nonzero.
CountTable extract_counts(const Series& egf, Family family);

// end-to-end count table for families without a triangle constraint
CountTable census(Family family, int order);

}  // namespace cubic::assemble
