#include "cubic/netsolve.hpp"

#include <stdexcept>

#include "cubic/fixpoint.hpp"
#include "cubic/mapcount.hpp"

namespace cubic {

std::string family_name(Family f) {
  switch (f) {
    case Family::Connected: return "connected";
    case Family::All: return "all";
    case Family::Biconnected: return "biconnected";
    case Family::ConnectedMultigraph: return "connected-multigraph";
    case Family::Multigraph: return "multigraph";
    case Family::ConnectedTriangleFree: return "connected-triangle-free";
    case Family::TriangleFree: return "triangle-free";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::Connected, Family::All, Family::Biconnected, Family::ConnectedMultigraph,
                   Family::Multigraph, Family::ConnectedTriangleFree, Family::TriangleFree})
    if (family_name(f) == s) return f;
  throw std::invalid_argument("unknown family: " + s);
}

bool family_is_exponential(Family f) {
  return f == Family::All || f == Family::Multigraph || f == Family::TriangleFree;
}

}  // namespace cubic

namespace cubic::netsolve {

NetworkKind kind_for(Family f) {
  switch (f) {
    case Family::Connected:
    case Family::All: return NetworkKind::Simple;
    case Family::Biconnected: return NetworkKind::Biconnected;
    case Family::ConnectedMultigraph:
    case Family::Multigraph: return NetworkKind::Multigraph;
    default: throw std::invalid_argument("no plain network system for " + family_name(f));
  }
}

Series polyhedral_networks(const Series& D, const Series& t_of_z) {
  int n = D.order();
  Series one = Series::constant(1, n);
  Series od = one + D;
  Series w = mul_to(x_power<Rat>(2, n), pow_int(od, 3), n);
  Series tw = compose(t_of_z, w);
  if (tw.order() < n) throw PrecisionError("polyhedral_networks: T known to too low an order");
  return (tw.truncate(n) - w) * inverse(od) * Rat(1, 2);
}

NetworkBundle solve_networks(NetworkKind kind, int order) {
  if (order < 2) throw std::invalid_argument("network order must be at least 2");
  int zorder = order / 2;
  Series u = mapcount::quadrangulation_u(zorder);
  Series t = u * (Series::constant(1, zorder) - 2 * u);
  const bool multi = kind == NetworkKind::Multigraph;
  const Rat half(1, 2);

  std::vector<FixpointRule<Series>> rules;
  if (kind != NetworkKind::Biconnected) {
    rules.push_back({"L", [=](const SeriesEnv<Series>& e, int n) {
                       Series x2 = x_power<Rat>(2, n);
                       Series r = half * x2 * (e.at("I") + e.at("S") + e.at("P") + e.at("H"));
                       if (multi) r += x2 + x2 * e.at("L");
                       return r;
                     }});
    rules.push_back({"I", [](const SeriesEnv<Series>& e, int n) {
                       const Series& L = e.at("L");
                       return mul_to(L, L, n + 2).shift_down(2);
                     }});
    rules.push_back({"S", [](const SeriesEnv<Series>& e, int) {
                       return e.at("D") * (e.at("L") + e.at("P") + e.at("H"));
                     }});
  } else {
    rules.push_back({"S", [](const SeriesEnv<Series>& e, int) {
                       return e.at("D") * (e.at("P") + e.at("H"));
                     }});
  }
  rules.push_back({"P", [=](const SeriesEnv<Series>& e, int n) {
                     Series x2 = x_power<Rat>(2, n);
                     const Series& D = e.at("D");
                     Series r = x2 * D + half * x2 * D * D;
                     if (multi) r += x2;
                     return r;
                   }});
  rules.push_back({"H", [t](const SeriesEnv<Series>& e, int) { return polyhedral_networks(e.at("D"), t); }});
  rules.push_back({"D", [kind](const SeriesEnv<Series>& e, int) {
                     Series r = e.at("S") + e.at("P") + e.at("H");
                     if (kind != NetworkKind::Biconnected) r += e.at("L");
                     return r;
                   }});

  FixpointStats st;
  SeriesEnv<Series> env = solve_fixpoint_progressive(rules, order, 2, &st);
  NetworkBundle b;
  b.kind = kind;
  b.order = order;
  b.D = env.at("D");
  b.S = env.at("S");
  b.P = env.at("P");
  b.H = env.at("H");
  if (kind != NetworkKind::Biconnected) {
    b.L = env.at("L");
    b.I = env.at("I");
  } else {
    b.L = Series(order);
    b.I = Series(order);
  }
  b.u_of_z = u;
  b.sweeps = st.sweeps;

  for (const Series* s : {&b.D, &b.L, &b.I, &b.S, &b.P, &b.H})
    if (!s->is_even()) throw std::logic_error("network series has a nonzero odd coefficient");

  Series x2 = x_power<Rat>(2, order);
  if (kind == NetworkKind::Simple) {
    b.rooted = (b.D + b.I - b.L - x2 * b.D - b.L * b.L) * Rat(1, 3);
  } else if (kind == NetworkKind::Biconnected) {
    b.rooted = (b.D - x2 * b.D) * Rat(1, 3);
  }
  return b;
}

}  // namespace cubic::netsolve
