// Acceptance gate: one PASS/FAIL line per criterion, tolerances fixed below.

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubic/assemble.hpp"
#include "cubic/mapcount.hpp"
#include "cubic/moments.hpp"
#include "cubic/oracle.hpp"
#include "cubic/recurrence.hpp"
#include "cubic/singular.hpp"
#include "cubic/trivariate.hpp"
#include "reference_counts.hpp"

using namespace cubic;

namespace {

constexpr double constant_tol = 5e-7;      // six decimals after rounding
constexpr double derivative_tol = 1e-8;    // rho'(1), rho''(1)
constexpr double moment_tol = 1e-5;        // mu, lambda
constexpr double drift_tol = 0.15;         // relative distance to the amplitude at n = 30
constexpr int identity_order = 32;
constexpr int recurrence_order = 60;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << secs << " s]";
  if (!o.detail.empty()) os << "\n     " << o.detail;
  std::cout << os.str() << std::endl;
}

std::string fmt(double v, int prec = 9) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

Outcome table_check(Family f, const char* reference::Row::*column) {
  auto t = assemble::census(f, 30);
  int bad = 0;
  std::string first;
  for (const auto& row : reference::table)
    if (t.at(row.n) != BigInt(row.*column)) {
      if (!bad) first = "first mismatch at n=" + std::to_string(row.n) + ": " + t.at(row.n).get_str();
      ++bad;
    }
  return {bad == 0, bad ? first : "n = 2..30 exact"};
}

std::uint64_t comp1(const oracle::EnumSummary& s) {
  auto it = s.by_components.find(1);
  return it == s.by_components.end() ? 0 : it->second;
}

Outcome oracle_check() {
  auto g = assemble::census(Family::All, 8), c = assemble::census(Family::Connected, 8),
       b = assemble::census(Family::Biconnected, 8), h = assemble::census(Family::Multigraph, 8),
       t = assemble::census(Family::TriangleFree, 8);
  auto tri = trivariate::solve_triangle_marked(8);
  std::ostringstream os;
  bool ok = true;
  for (int n = 2; n <= 8; n += 2) {
    oracle::EnumFlags simple, bic, multi, free;
    bic.connectivity_min = 2;
    multi.allow_loops = multi.allow_multiedges = true;
    free.require_triangle_free = true;
    auto s = oracle::enumerate(n, simple);
    auto sb = oracle::enumerate(n, bic);
    auto sm = oracle::enumerate(n, multi);
    auto sf = oracle::enumerate(n, free);
    auto eq = [](const BigInt& a, std::uint64_t v) { return a == BigInt(std::to_string(v)); };
    bool row = eq(g.at(n), s.total) && eq(c.at(n), comp1(s)) && eq(b.at(n), sb.total) && eq(h.at(n), sm.total) &&
               eq(t.at(n), sf.total);
    oracle::EnumFlags conn;
    conn.connectivity_min = 1;
    auto sc = oracle::enumerate(n, conn);
    std::map<int, BigInt> pipe, orc;
    for (auto& [k, v] : trivariate::rooted_triangle_distribution(tri, n)) pipe[k] = v;
    for (auto [k, v] : sc.by_triangles) orc[k] = BigInt(std::to_string(v)) * n;
    row = row && pipe == orc;
    ok = ok && row;
    os << "n=" << n << (row ? " ok" : " MISMATCH") << " (g " << s.total << ", c " << comp1(s) << ", b " << sb.total
       << ", h " << sm.total << ", t " << sf.total << ", histogram classes " << orc.size() << ")  ";
  }
  return {ok, os.str()};
}

struct Ref {
  const char* name;
  double expected;
  BigFloat value;
};

Outcome constants_check() {
  auto S = singular::family_constants(Family::Connected);
  auto B = singular::family_constants(Family::Biconnected);
  auto M = singular::family_constants(Family::Multigraph);
  auto T = singular::family_constants(Family::TriangleFree);
  std::vector<Ref> refs = {
      {"rho", 0.319225, S.rho},          {"gamma", 3.132591, S.gamma},       {"c", 0.060973, S.detail("c")},
      {"g", 0.061010, S.detail("g")},    {"p", 0.999397, S.detail("p")},     {"rho_b", 0.319523, B.rho},
      {"b", 0.059244, B.detail("b")},    {"rho_m", 0.250907, M.rho},         {"h", 0.224743, M.detail("h")},
      {"h'", 0.209410, M.detail("h'")},  {"p_m", 0.931778, M.detail("p_m")}, {"rho_t", 0.378537, T.rho},
      {"f", 0.000911, T.detail("f")},    {"D0", 0.011526, S.detail("D0")},   {"D3", 0.254267, S.detail("D3")},
      {"C*3", 0.072048, S.detail("C*3")}, {"C5", -0.028819, S.detail("C5")}, {"multigraph D0", 0.187679, M.detail("D0")},
      {"G0", 1.073217, M.detail("G0")},  {"E3", 0.094744, T.detail("E3")},  {"F*3", 0.001077, T.detail("F*3")},
  };
  std::ostringstream os;
  int bad = 0;
  for (const auto& r : refs) {
    double v = to_double(r.value);
    if (std::abs(v - r.expected) > constant_tol) {
      ++bad;
      os << r.name << " = " << fmt(v, 7) << " (expected " << fmt(r.expected, 7) << ")  ";
    }
  }
  std::string head = std::to_string(refs.size() - bad) + "/" + std::to_string(refs.size()) + " constants match";
  return {bad == 0, bad ? head + "; off: " + os.str() : head};
}

Outcome triangle_law() {
  auto tm = singular::triangle_moments();
  const BigFloat d1("-0.0389371919"), d2("0.0229417852");
  bool ok = true;
  std::ostringstream os;
  auto path = [&](const char* name, const singular::RhoDerivatives& r) {
    double e1 = to_double(abs(r.d1 - d1)), e2 = to_double(abs(r.d2 - d2));
    ok = ok && e1 < derivative_tol && e2 < derivative_tol;
    os << name << " |d1| " << fmt(e1, 2) << " |d2| " << fmt(e2, 2) << "; ";
  };
  path("two-equation implicit", tm.printed_implicit);
  path("two-equation central", tm.printed_central);
  path("network implicit", tm.full_implicit);
  path("network central", tm.full_central);
  double mu = to_double(tm.moments.mu), la = to_double(tm.moments.lambda);
  ok = ok && std::abs(mu - 0.121974) < moment_tol && std::abs(la - 0.064985) < moment_tol;
  os << "mu " << fmt(mu, 8) << " lambda " << fmt(la, 8);
  return {ok, os.str()};
}

Outcome k4_minus() {
  auto m = singular::marked_moments({singular::Marking::K4Minus, 4, singular::k4_minus_aut});
  double mu = to_double(m.moments.mu), la = to_double(m.moments.lambda);
  bool ok = std::abs(mu - 0.004529) < moment_tol && std::abs(la - 0.004343) < moment_tol;
  return {ok, "mu " + fmt(mu, 8) + " lambda " + fmt(la, 8)};
}

Outcome positivity() {
  int cases = 0, bad = 0;
  std::ostringstream os;
  for (int aut : {1, 2, 6}) {
    for (int h = 6; h <= 20; ++h) {
      auto cf = singular::cherry_closed_form(h, aut);
      auto nm = singular::marked_moments({singular::Marking::Cherry, h, aut});
      ++cases;
      if (!(cf.lambda > 0 && nm.moments.lambda > 0)) {
        ++bad;
        os << "cherry h=" << h << " aut=" << aut << "  ";
      }
    }
    for (int b = 4; b <= 20; ++b) {
      auto cf = singular::brick_closed_form(b, aut);
      auto nm = singular::marked_moments({singular::Marking::Brick, b, aut});
      ++cases;
      if (!(cf.lambda > 0 && nm.moments.lambda > 0)) {
        ++bad;
        os << "brick b=" << b << " aut=" << aut << "  ";
      }
    }
  }
  return {bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " positive " + os.str()};
}

Outcome identities() {
  const int N = identity_order;
  std::vector<std::pair<std::string, bool>> r;
  auto simple = netsolve::solve_networks(netsolve::NetworkKind::Simple, N);
  Series C = assemble::connected_by_dissymmetry(simple);
  r.push_back({"x C' = C*", C.x_derivative() == *simple.rooted});
  r.push_back({"mirror", singular::mirror(singular::discriminant_simple()) == singular::discriminant_multigraph()});
  auto tri = trivariate::solve_triangle_marked(N);
  r.push_back({"u=1 collapse", eval_u(tri.E, Rat(1)) == simple.D && eval_u(tri.L, Rat(1)) == simple.L &&
                                    eval_u(tri.I, Rat(1)) == simple.I && eval_u(tri.rooted, Rat(1)) == *simple.rooted &&
                                    eval_u(tri.connected, Rat(1)) == C});
  bool even = C.is_even() && assemble::all_graphs(C).is_even();
  for (auto kind : {netsolve::NetworkKind::Simple, netsolve::NetworkKind::Multigraph,
                    netsolve::NetworkKind::Biconnected}) {
    auto b = kind == netsolve::NetworkKind::Simple ? simple : netsolve::solve_networks(kind, N);
    even = even && b.D.is_even() && b.L.is_even() && b.I.is_even() && b.S.is_even() && b.P.is_even() &&
           b.H.is_even();
    if (kind == netsolve::NetworkKind::Multigraph) {
      Series cm = assemble::connected_by_dissymmetry(b);
      even = even && cm.is_even() && assemble::all_graphs(cm).is_even();
    }
    if (kind == netsolve::NetworkKind::Biconnected) even = even && assemble::biconnected(b).is_even();
  }
  auto tf = trivariate::solve_triangle_free(N);
  even = even && tf.E.is_even() && tf.L.is_even() && tf.D0.is_even() && tf.connected.is_even() && tf.all.is_even();
  r.push_back({"evenness", even});
  Series z = x_power<Rat>(1, N);
  Series mbar = mapcount::mbar_substitution(z, mapcount::quadrangulation_u(N));
  r.push_back({"2y dMbar/dy = M", mbar.x_derivative() * Rat(6) == (mapcount::triangulations(N) - z) / Rat(2)});
  bool ok = true;
  std::string d;
  for (auto& [name, pass] : r) {
    ok = ok && pass;
    d += name + (pass ? " ok; " : " FAILED; ");
  }
  return {ok, d + "to x^" + std::to_string(N)};
}

Outcome recurrence_check() {
  auto h = assemble::census(Family::Multigraph, recurrence_order);
  int terms = int(h.rows.size());
  std::ostringstream os;
  os << terms << " terms; searched";
  for (auto [r, d] : std::vector<std::pair<int, int>>{{1, 11}, {2, 7}, {3, 5}, {4, 4}}) {
    if ((r + 1) * (d + 1) + 5 > terms) continue;
    os << " (order<=" << r << ", degree<=" << d << ")";
    auto rec = assemble::guess_recurrence(h, r, d, 5);
    if (rec) return {true, os.str() + "; found " + rec->to_string()};
  }
  return {false, os.str() + "; no recurrence survives the held-out terms"};
}

Outcome drift() {
  struct Fam {
    Family f;
    const char* name;
    double published;
  };
  bool ok = true;
  std::ostringstream os;
  for (Fam fam : {Fam{Family::Multigraph, "multigraph", 0.224743}, Fam{Family::TriangleFree, "triangle-free", 0.000911}}) {
    auto k = singular::family_constants(fam.f);
    auto t = assemble::census(fam.f, 30);
    std::vector<double> ratio;
    for (int n = 26; n <= 30; n += 2) {
      BigFloat v = to_bigfloat(Rat(t.at(n))) * pow(k.rho, n) * pow(BigFloat(n), BigFloat(7) / 2) /
                   to_bigfloat(Rat(factorial(n)));
      ratio.push_back(to_double(v));
    }
    double amp = to_double(k.amplitude);
    bool toward = true;
    for (size_t i = 1; i < ratio.size(); ++i)
      toward = toward && std::abs(ratio[i] - amp) < std::abs(ratio[i - 1] - amp);
    double rel = std::abs(ratio.back() - amp) / amp;
    double rel_pub = std::abs(ratio.back() - fam.published) / fam.published;
    bool pass = toward && rel <= drift_tol && rel_pub <= drift_tol;
    ok = ok && pass;
    os << fam.name << ": n=26,28,30 ratios " << fmt(ratio[0], 6) << ", " << fmt(ratio[1], 6) << ", "
       << fmt(ratio[2], 6) << (toward ? " (approaching)" : " (not monotone)") << "; computed amplitude "
       << fmt(amp, 6) << " off " << fmt(100 * rel, 3) << "%, published " << fam.published << " off "
       << fmt(100 * rel_pub, 3) << "%.  ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  criterion(1, "multigraph counts n=2..30 equal the published table", [] {
    return table_check(Family::Multigraph, &reference::Row::multigraphs);
  });
  criterion(2, "triangle-free counts n=2..30 equal the published table", [] {
    return table_check(Family::TriangleFree, &reference::Row::triangle_free);
  });
  criterion(3, "g, c, b, h, t and rooted triangle histograms equal exhaustive enumeration for n<=8", oracle_check);
  criterion(4, "asymptotic and intermediate constants to six decimals", constants_check);
  criterion(5, "triangle limit law: rho'(1), rho''(1) on four paths, mu and lambda", triangle_law);
  criterion(6, "K4 minus an edge: mu and lambda", k4_minus);
  criterion(7, "lambda > 0 for cherries h=6..20 and bricks b=4..20, aut in {1,2,6}", positivity);
  criterion(8, "structural identities exact to x^32", identities);
  criterion(9, "P-recurrence for multigraph counts n<=60 confirmed on held-out terms", recurrence_check);
  criterion(10, "count ratios at n=26..30 approach the amplitude within 15%", drift);
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
