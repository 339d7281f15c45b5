#include "cubic/assemble.hpp"

#include <sstream>
#include <stdexcept>

#include "cubic/mapcount.hpp"
#include "cubic/trivariate.hpp"

namespace cubic::assemble {

using netsolve::NetworkBundle;
using netsolve::NetworkKind;

Series connected_by_dissymmetry(const NetworkBundle& b) {
  if (b.kind == NetworkKind::Biconnected) throw std::invalid_argument("dissymmetry needs loop networks");
  const int n = b.order;
  const bool multi = b.kind == NetworkKind::Multigraph;
  const Series one = Series::constant(1, n);
  const Series x2 = x_power<Rat>(2, n);
  const Series &D = b.D, &L = b.L, &S = b.S, &P = b.P, &H = b.H;

  Series D2 = D * D;
  Series nodeM = D2 * Rat(1, 2) + D2 * D * Rat(1, 6);
  if (multi) nodeM += one + D;
  nodeM = x2 * nodeM * Rat(1, 2);

  Series w = x2 * pow_int(one + D, 3);
  Series nodeT = mapcount::mbar_substitution(w, b.u_of_z);

  // L^3 / (6 x^2) and L^2 / x^2, exact because L = O(x^2)
  Series L2 = mul_to(L, L, n + 2);
  Series L2x = L2.shift_down(2);
  Series L3x = mul_to(L2, L, n + 2).shift_down(2);
  Series nodeL = L3x * Rat(1, 6);
  if (multi) nodeL += L + L * L;

  Series DmS = D - S;
  Series edge = log1(one - DmS) + DmS + DmS * DmS * Rat(1, 2) + P * (S + H) + H * S +
                (P * P + H * H) * Rat(1, 2) + L2x;
  if (multi) edge += L * L;
  return nodeM + nodeT + nodeL - edge * Rat(1, 2);
}

Series connected_by_rooting(const NetworkBundle& b) {
  if (!b.rooted || b.kind != NetworkKind::Simple) throw std::invalid_argument("bundle has no vertex-rooted series");
  return b.rooted->integrate_over_x();
}

Series biconnected(const NetworkBundle& b) {
  if (!b.rooted || b.kind != NetworkKind::Biconnected) throw std::invalid_argument("not a biconnected bundle");
  return b.rooted->integrate_over_x();
}

Series all_graphs(const Series& connected) { return exp0(connected); }

const BigInt& CountTable::at(int n) const {
  for (const auto& r : rows)
    if (r.n == n) return r.count;
  throw std::out_of_range("no count for n = " + std::to_string(n));
}

nlohmann::json CountTable::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows) rs.push_back({{"n", r.n}, {"count", r.count.get_str()}});
  return {{"family", family_name(family)}, {"rows", rs}};
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "n,count\n";
  for (const auto& r : rows) os << r.n << ',' << r.count.get_str() << '\n';
  return os.str();
}

CountTable extract_counts(const Series& egf, Family family) {
  CountTable t{family, {}};
  for (int n = 1; n <= egf.order(); ++n) {
    Rat c = egf[n] * Rat(factorial(n));
    if (n % 2 == 1) {
      if (c != 0) throw std::logic_error("odd coefficient x^" + std::to_string(n) + " is nonzero");
      continue;
    }
    if (!is_integer(c) || c < 0)
      throw std::logic_error("coefficient of x^" + std::to_string(n) + " gives non-integral count " +
                             to_fraction_string(c));
    t.rows.push_back({n, c.get_num()});
  }
  return t;
}

CountTable census(Family family, int order) {
  switch (family) {
    case Family::Connected:
    case Family::All:
    case Family::ConnectedMultigraph:
    case Family::Multigraph: {
      auto b = netsolve::solve_networks(netsolve::kind_for(family), order);
      Series c = connected_by_dissymmetry(b);
      return extract_counts(family_is_exponential(family) ? all_graphs(c) : c, family);
    }
    case Family::Biconnected: {
      auto b = netsolve::solve_networks(NetworkKind::Biconnected, order);
      return extract_counts(biconnected(b), family);
    }
    case Family::ConnectedTriangleFree:
    case Family::TriangleFree: {
      auto tf = trivariate::solve_triangle_free(order);
      return extract_counts(family == Family::TriangleFree ? tf.all : tf.connected, family);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace cubic::assemble
