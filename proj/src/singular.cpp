#include "cubic/singular.hpp"

#include <stdexcept>

#include "cubic/roots.hpp"

namespace cubic::singular {

using netsolve::NetworkKind;
using boost::multiprecision::abs;

namespace {

FloatSeries one_like(const FloatSeries& a) { return FloatSeries::constant(BigFloat(1), a.order()); }
FloatSeries sq(const FloatSeries& a) { return a * a; }
BigFloat big(const char* s) { return BigFloat(s); }

UPoly from_strings(std::initializer_list<const char*> cs) {
  std::vector<Rat> v;
  for (const char* c : cs) v.push_back(parse_rat(c));
  return UPoly(std::move(v));
}

}  // namespace

UPoly discriminant_simple() { return from_strings({"46656", "279936", "-7293760", "513216", "148716", "17496", "729"}); }

UPoly discriminant_multigraph() {
  return from_strings({"46656", "-279936", "-7293760", "-513216", "148716", "-17496", "729"});
}

UPoly discriminant_biconnected() { return from_strings({"432", "-4265", "324", "54"}); }

UPoly discriminant_triangle_free() {
  return from_strings({"64",
                       "-128",
                       "-8646784/729",
                       "130387637/972",
                       "-2805808889/3888",
                       "28819599609215/11943936",
                       "-88102457851295/15925248",
                       "148714112813428613/16307453952",
                       "-34616066062430108809/3131031158784",
                       "8988271236666325/905969664",
                       "-246713078305261/37748736",
                       "50409552353/16384",
                       "-3989098451/4096",
                       "5654783/32",
                       "-26651/4",
                       "-3630",
                       "285",
                       "180",
                       "-41",
                       "-2",
                       "1"});
}

UPoly mirror(const UPoly& p) {
  std::vector<Rat> v = p.coeffs();
  for (size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return UPoly(std::move(v));
}

// ---- network systems --------------------------------------------------------

namespace {

struct NetworkValues {
  FloatSeries L, I, S, P, H, T, w;
};

NetworkValues network_values(NetworkKind kind, const FloatSeries& x, const FloatSeries& D, const FloatSeries& U) {
  NetworkValues v;
  FloatSeries one = one_like(D);
  FloatSeries x2 = x * x;
  FloatSeries x4 = x2 * x2;
  BigFloat half(0.5);
  v.T = U * (one - U * BigFloat(2));
  v.w = U * (one - U) * sq(one - U);
  FloatSeries od = one + D;
  if (kind == NetworkKind::Simple) {
    v.L = one + x2 * half - sqrt_series(x4 / BigFloat(4) + one - x2 * (D - one));
  } else if (kind == NetworkKind::Multigraph) {
    v.L = one - x2 * half - sqrt_series(x4 / BigFloat(4) + one - x2 * (D + BigFloat(3)));
  } else {
    v.L = FloatSeries(D.order());
  }
  v.I = sq(v.L) / x2;
  v.S = sq(D) / od;
  v.P = x2 * D + x2 * sq(D) * half;
  if (kind == NetworkKind::Multigraph) v.P += x2;
  v.H = (v.T - x2 * od * sq(od)) / (od * BigFloat(2));
  return v;
}

}  // namespace

PointSystem network_system(NetworkKind kind) {
  return [kind](const FloatSeries& U, const FloatVec& y) {
    const FloatSeries &x = y.at(0), &D = y.at(1);
    NetworkValues v = network_values(kind, x, D, U);
    FloatSeries od = one_like(D) + D;
    FloatVec r;
    r.push_back(v.L + v.S + v.P + v.H - D);
    r.push_back(x * x * od * sq(od) - v.w);
    return r;
  };
}

NetworkExpansions network_expansions(NetworkKind kind, int order) {
  WorkingPrecision wp;
  std::vector<BigFloat> seed;
  switch (kind) {
    case NetworkKind::Simple: seed = {big("0.319225"), big("0.011526")}; break;
    case NetworkKind::Multigraph: seed = {big("0.250907"), big("0.187679")}; break;
    case NetworkKind::Biconnected: seed = {big("0.319523"), big("0.010896")}; break;
  }
  PointSystem f = network_system(kind);
  BigFloat quarter = BigFloat(1) / 4;
  auto pt = newton_point(f, quarter, seed);
  FoldExpansion fe = puiseux_at_fold(f, quarter, pt, 0, order, -1);

  NetworkExpansions e;
  e.kind = kind;
  e.rho = fe.rho;
  e.x = fe.y[0];
  e.D = fe.y[1];
  e.U = fe.branch;
  NetworkValues v = network_values(kind, e.x, e.D, e.U);
  e.L = v.L;
  e.I = v.I;
  e.S = v.S;
  e.P = v.P;
  e.H = v.H;
  e.residual = e.L + e.S + e.P + e.H - e.D;

  FloatSeries one = one_like(e.D);
  FloatSeries x2 = e.x * e.x;
  const FloatSeries &D = e.D, &L = e.L, &S = e.S, &P = e.P, &H = e.H;
  if (kind == NetworkKind::Biconnected) {
    e.rooted = (D - x2 * D) / BigFloat(3);
    return e;
  }
  const bool multi = kind == NetworkKind::Multigraph;
  BigFloat half(0.5);
  FloatSeries nodeM = sq(D) * half + sq(D) * D / BigFloat(6);
  if (multi) nodeM += one + D;
  nodeM = x2 * nodeM * half;
  const FloatSeries& U = e.U;
  FloatSeries nodeT = (U * U * BigFloat(4) + U * BigFloat(2) + log_series(one - U) * BigFloat(3) + v.w) /
                      BigFloat(-12);
  FloatSeries nodeL = sq(L) * L / x2 / BigFloat(6);
  if (multi) nodeL += L + sq(L);
  FloatSeries DmS = D - S;
  FloatSeries edge = log_series(one - DmS) + DmS + sq(DmS) * half + P * (S + H) + H * S + (sq(P) + sq(H)) * half +
                     sq(L) / x2;
  if (multi) edge += sq(L);
  e.C = nodeM + nodeT + nodeL - edge * half;
  e.G = exp_series(e.C);
  if (!multi) e.rooted = (D + e.I - L - x2 * D - sq(L)) / BigFloat(3);
  return e;
}

SimpleChecks simple_checks() {
  WorkingPrecision wp;
  NetworkExpansions e = network_expansions(NetworkKind::Simple, 6);
  BigFloat rho = e.rho, D0 = e.D[0];
  BigFloat r2 = rho * rho;
  BigFloat root = sqrt(r2 * r2 / 4 + 1 - r2 * (D0 - 1));
  SimpleChecks c;
  c.F_D_closed = root - r2 * (1 + D0) / (2 * root) - BigFloat(9) / (32 * (1 + D0));
  // dual numbers on F(x, D) = (1+D) sqrt(...) - T(x^2 (1+D)^3)/2 - 1 with
  // T'(tau) = U (1 - U) / tau at U = 1/4
  BigFloat tau = BigFloat(27) / 256;
  BigFloat Tp = BigFloat(3) / 16 / tau;
  auto F = [&](const FloatSeries& x, const FloatSeries& D) {
    FloatSeries one = one_like(D);
    FloatSeries x2 = x * x;
    FloatSeries od = one + D;
    FloatSeries w = x2 * od * sq(od);
    FloatSeries Tlin = (w - tau) * Tp + BigFloat(1) / 8;
    return od * sqrt_series(x2 * x2 / BigFloat(4) + one - x2 * (D - one)) - Tlin * BigFloat(0.5) - one;
  };
  FloatSeries xs = constant_series(rho, 1), Ds = constant_series(D0, 1);
  FloatSeries Dd = Ds;
  Dd[1] = 1;
  FloatSeries xd = xs;
  xd[1] = 1;
  c.F_D_numeric = F(xs, Dd)[1];
  BigFloat Fx = F(xd, Ds)[1];
  c.Dprime_from_F = -Fx / c.F_D_numeric;
  c.Dprime_from_expansion = -e.D[2] / rho;
  return c;
}

// ---- triangle-free ------------------------------------------------------------

namespace {

struct TriangleNetworkEval {
  FloatVec residual;
  FloatSeries D0, D1d, D2d, I, t;
};

TriangleNetworkEval triangle_network(const FloatSeries& x, const FloatSeries& E, const FloatSeries& L,
                                     const FloatSeries& s, const FloatSeries& V, const FloatSeries& u,
                                     const trivariate::TriangleOptions& opt) {
  BigFloat half(0.5);
  FloatSeries one = one_like(E);
  FloatSeries x2 = x * x, x4 = x2 * x2;
  FloatSeries oE = one + E;
  FloatSeries oE3 = oE * sq(oE);
  FloatSeries z = x2 * oE3;
  FloatSeries u1 = one + (u - one) / oE3;
  FloatSeries w = V * sq(one - V);
  FloatSeries T4 = w + V * (V - one) / sq(V + one) - sq(w);
  FloatSeries ps = one + s;
  TriangleNetworkEval r;
  r.t = z * s;
  r.residual.push_back(z * sq(ps) - w);
  r.residual.push_back(r.t - T4 / ps - sq(z) * (ps * sq(ps) + u1 - one));
  r.I = sq(L) / x2;
  FloatSeries EmL = E - L;
  FloatSeries corr = opt.loop == trivariate::LoopVariant::Printed ? x2 * EmL + u * x2 * L + sq(L)
                                                              : x2 * EmL + u * x2 * L * half + sq(L) * half;
  FloatSeries Lrhs = x2 * (r.I + EmL) * half + (u - one) * x2 * corr * half;
  r.residual.push_back(L - Lrhs);
  FloatSeries S1d = sq(L) * L + x2 * L * EmL * BigFloat(2) + u * x2 * sq(L) * BigFloat(2);
  FloatSeries S0 = (sq(E) - oE * S1d) / oE;
  FloatSeries P0 = x2 * EmL + x2 * sq(EmL) * half;
  FloatSeries P1d = x2 * L * EmL + u * x2 * L * to_bigfloat(opt.p1_loop_weight);
  FloatSeries P2d = x2 * sq(L) * half;
  FloatSeries E2 = sq(E), E3 = E2 * E;
  FloatSeries W0 = x4 * ((one + u) * E2 * BigFloat(2) + E3 * BigFloat(8) + E3 * E * BigFloat(5) + E3 * E2) * half;
  FloatSeries W1d = x4 * (u * E * BigFloat(4) + E2 * BigFloat(6) + E3 * BigFloat(2)) * half;
  FloatSeries W2d = x4 * (sq(u) + E) * half;
  FloatSeries H1d = x2 * r.t * half;
  FloatSeries H0 = r.t * (one - x2 * (E - u * BigFloat(2) + BigFloat(3))) / oE * half -
                   x4 * sq(oE) * (oE3 + u - one) * half;
  r.D0 = S0 + P0 + W0 + L + H0;
  r.D1d = S1d + P1d + W1d + H1d;
  r.D2d = P2d + W2d;
  r.residual.push_back(E - r.D0 - r.D1d - r.D2d);
  return r;
}

std::vector<BigFloat> triangle_seed(const BigFloat& x, const BigFloat& E) {
  BigFloat x2 = x * x;
  BigFloat z = x2 * pow(1 + E, 3);
  BigFloat s = sqrt(BigFloat(4) / 27 / z) - 1;
  // small root of (1 - x^2)/2 L^2 - (1 + x^2/2 - x^4/2) L + x^2 E (1 - x^2)/2 = 0
  BigFloat a = (1 - x2) / 2, b = -(1 + x2 / 2 - x2 * x2 / 2), c = x2 * E * (1 - x2) / 2;
  BigFloat L = (-b - sqrt(b * b - 4 * a * c)) / (2 * a);
  return {x, E, L, s};
}

}  // namespace

PointSystem triangle_free_system(const trivariate::TriangleOptions& opt) {
  return [opt](const FloatSeries& V, const FloatVec& y) {
    FloatSeries u(V.order());
    return triangle_network(y.at(0), y.at(1), y.at(2), y.at(3), V, u, opt).residual;
  };
}

// exposed for the moments module
PointSystem triangle_marked_system_in_u(const trivariate::TriangleOptions& opt) {
  return [opt](const FloatSeries& u, const FloatVec& y) {
    FloatSeries V = FloatSeries::constant(BigFloat(1) / 3, u.order());
    return triangle_network(y.at(0), y.at(1), y.at(2), y.at(3), V, u, opt).residual;
  };
}

std::vector<BigFloat> triangle_marked_seed(const BigFloat& x, const BigFloat& E) { return triangle_seed(x, E); }

TriangleFreeExpansions triangle_free_expansions(int order) {
  WorkingPrecision wp;
  PointSystem f = triangle_free_system();
  BigFloat third = BigFloat(1) / 3;
  auto pt = newton_point(f, third, triangle_seed(big("0.378537"), big("0.000951")));
  FoldExpansion fe = puiseux_at_fold(f, third, pt, 0, order, -1);
  TriangleFreeExpansions e;
  e.rho = fe.rho;
  e.x = fe.y[0];
  e.E = fe.y[1];
  e.L = fe.y[2];
  e.s = fe.y[3];
  e.V = fe.branch;
  FloatSeries u(e.x.order());
  auto ev = triangle_network(e.x, e.E, e.L, e.s, e.V, u, trivariate::TriangleOptions{});
  e.D0 = ev.D0;
  e.I = ev.I;
  FloatSeries x2 = e.x * e.x;
  e.rooted = (e.D0 + e.I - e.L - sq(e.L) - x2 * (e.E - e.L)) / BigFloat(3);
  return e;
}

// ---- constants ---------------------------------------------------------------

const BigFloat& FamilyConstants::detail(const std::string& name) const {
  for (const auto& [k, v] : details)
    if (k == name) return v;
  throw std::out_of_range("no detail " + name);
}

BigFloat amplitude_from_x3(const BigFloat& c3) { return 2 * c3 / gamma_minus_three_halves(); }
BigFloat amplitude_from_x5(const BigFloat& c5) { return 2 * c5 / gamma_minus_five_halves(); }

FamilyConstants family_constants(Family fam, int order) {
  WorkingPrecision wp;
  FamilyConstants out;
  out.family = fam;
  auto from_poly = [&](const UPoly& p) {
    PositiveRoot r = smallest_positive_root(p);
    out.rho_from_polynomial = sqrt(r.root);
    out.modulus_unique = r.unique_modulus;
  };
  auto add = [&](const std::string& k, const BigFloat& v) { out.details.emplace_back(k, v); };

  switch (fam) {
    case Family::Connected:
    case Family::All: {
      auto e = network_expansions(NetworkKind::Simple, order);
      from_poly(discriminant_simple());
      out.rho = e.rho;
      add("D0", e.D[0]);
      add("D1", e.D[1]);
      add("D2", e.D[2]);
      add("D3", e.D[3]);
      add("C*3", e.rooted[3]);
      add("C*1", e.rooted[1]);
      add("C0", e.C[0]);
      add("C1", e.C[1]);
      add("C3", e.C[3]);
      add("C5", e.C[5]);
      add("G0", e.G[0]);
      add("G5", e.G[5]);
      add("c", amplitude_from_x3(e.rooted[3]));
      add("c via C5", amplitude_from_x5(e.C[5]));
      add("g", amplitude_from_x5(e.G[5]));
      add("p", exp(-e.C[0]));
      out.amplitude = fam == Family::Connected ? out.detail("c") : out.detail("g");
      break;
    }
    case Family::Biconnected: {
      auto e = network_expansions(NetworkKind::Biconnected, order);
      from_poly(discriminant_biconnected());
      out.rho = e.rho;
      add("D0", e.D[0]);
      add("D3", e.D[3]);
      add("B*3", e.rooted[3]);
      add("b", amplitude_from_x3(e.rooted[3]));
      add("b printed form", 2 * (1 - e.rho * e.rho) * e.D[3] / (3 * gamma_minus_three_halves()));
      out.amplitude = out.detail("b");
      break;
    }
    case Family::ConnectedMultigraph:
    case Family::Multigraph: {
      auto e = network_expansions(NetworkKind::Multigraph, order);
      from_poly(discriminant_multigraph());
      out.rho = e.rho;
      add("D0", e.D[0]);
      add("D3", e.D[3]);
      add("C0", e.C[0]);
      add("C1", e.C[1]);
      add("C3", e.C[3]);
      add("C5", e.C[5]);
      add("G0", e.G[0]);
      add("G5", e.G[5]);
      add("h", amplitude_from_x5(e.G[5]));
      add("h'", amplitude_from_x5(e.C[5]));
      add("p_m", exp(-e.C[0]));
      out.amplitude = fam == Family::Multigraph ? out.detail("h") : out.detail("h'");
      break;
    }
    case Family::ConnectedTriangleFree:
    case Family::TriangleFree: {
      auto e = triangle_free_expansions(order);
      from_poly(discriminant_triangle_free());
      out.rho = e.rho;
      add("E0", e.E[0]);
      add("E1", e.E[1]);
      add("E3", e.E[3]);
      add("F*1", e.rooted[1]);
      add("F*3", e.rooted[3]);
      add("f", amplitude_from_x3(e.rooted[3]));
      out.amplitude = out.detail("f");
      break;
    }
  }
  out.gamma = 1 / out.rho;
  return out;
}

}  // namespace cubic::singular
