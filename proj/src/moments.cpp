#include "cubic/moments.hpp"

#include <algorithm>

#include "cubic/roots.hpp"
#include "cubic/singular.hpp"

namespace cubic::singular {

using boost::multiprecision::abs;

namespace {

FloatSeries one_like(const FloatSeries& a) { return FloatSeries::constant(BigFloat(1), a.order()); }
FloatSeries sq(const FloatSeries& a) { return a * a; }

BigFloat spread(std::initializer_list<BigFloat> v) {
  BigFloat lo = *std::min_element(v.begin(), v.end()), hi = *std::max_element(v.begin(), v.end());
  return hi - lo;
}

}  // namespace

MomentPair moments_from_rho(const BigFloat& rho, const BigFloat& d1, const BigFloat& d2) {
  MomentPair m;
  m.mu = -d1 / rho;
  m.lambda = m.mu * m.mu + m.mu - d2 / rho;
  return m;
}

RhoDerivatives rho_derivatives_implicit(const PointSystem& f, const std::vector<BigFloat>& seed, int x_index) {
  WorkingPrecision wp;
  BigFloat one(1);
  auto pt = newton_point(f, one, seed);
  FloatVec y = solve_regular(f, one, pt, 2);
  return {y[x_index][0], y[x_index][1], 2 * y[x_index][2]};
}

RhoDerivatives rho_derivatives_central(const PointSystem& f, const std::vector<BigFloat>& seed, const BigFloat& h,
                                       int x_index) {
  WorkingPrecision wp;
  BigFloat one(1);
  auto p0 = newton_point(f, one, seed);
  auto pp = newton_point(f, one + h, p0);
  auto pm = newton_point(f, one - h, p0);
  RhoDerivatives r;
  r.rho = p0[x_index];
  r.d1 = (pp[x_index] - pm[x_index]) / (2 * h);
  r.d2 = (pp[x_index] - 2 * p0[x_index] + pm[x_index]) / (h * h);
  return r;
}

PointSystem triangle_singular_system() {
  return [](const FloatSeries& u, const FloatVec& y) {
    const FloatSeries &x = y.at(0), &E = y.at(1);
    FloatSeries one = one_like(x);
    FloatSeries x2 = x * x, x4 = x2 * x2;
    FloatSeries um = u - one;
    FloatSeries q = one + um * x2;
    FloatSeries oE = one + E;
    FloatSeries A = sqrt_series(sq(sq(um) * x4 - x2 - BigFloat(2)) - x2 * sq(q) * E * BigFloat(4));
    FloatSeries B = sq(um) * um * sq(x4) * BigFloat(256) + sq(um) * x4 * x2 * BigFloat(768) +
                    um * (u * BigFloat(3) + one) * x4 * BigFloat(192) + (u * BigFloat(1066) - BigFloat(810)) * x2 +
                    BigFloat(517);
    FloatSeries E2 = sq(E);
    FloatVec r;
    r.push_back(x2 * oE * sq(oE) * sq(q) - BigFloat(27) / 256);
    r.push_back(sq(q) * oE * A * BigFloat(256) - x2 * sq(q) * q * (E2 * E + E2 * BigFloat(3) + E * BigFloat(3)) * BigFloat(256) -
                B);
    return r;
  };
}

TriangleMoments triangle_moments(const trivariate::TriangleOptions& opt) {
  WorkingPrecision wp;
  BigFloat x0("0.319225"), E0("0.011526");
  BigFloat h("1e-6");
  TriangleMoments t;
  PointSystem printed = triangle_singular_system();
  t.printed_implicit = rho_derivatives_implicit(printed, {x0, E0});
  t.printed_central = rho_derivatives_central(printed, {x0, E0}, h);
  PointSystem full = triangle_marked_system_in_u(opt);
  auto seed = triangle_marked_seed(x0, E0);
  t.full_implicit = rho_derivatives_implicit(full, seed);
  t.full_central = rho_derivatives_central(full, seed, h);
  t.moments = moments_from_rho(t.printed_implicit.rho, t.printed_implicit.d1, t.printed_implicit.d2);
  t.disagreement = std::max(spread({t.printed_implicit.d1, t.printed_central.d1, t.full_implicit.d1, t.full_central.d1}),
                            spread({t.printed_implicit.d2, t.printed_central.d2, t.full_implicit.d2, t.full_central.d2}));
  return t;
}

PointSystem marked_network_system(const Marking& m) {
  return [m](const FloatSeries& u, const FloatVec& y) {
    const FloatSeries &x = y.at(0), &D = y.at(1);
    FloatSeries one = one_like(x);
    FloatSeries x2 = x * x;
    FloatSeries um = u - one;
    FloatSeries od = one + D;
    BigFloat aut = to_bigfloat(m.aut);
    FloatSeries mark = pow_int(x, m.size) * um / aut;
    FloatSeries disc = x2 * x2 / BigFloat(4) + one - x2 * (D - one);
    if (m.kind == Marking::Cherry) disc -= mark * BigFloat(2);
    FloatSeries L = one + x2 / BigFloat(2) - sqrt_series(disc);
    FloatSeries S = sq(D) / od;
    FloatSeries P = x2 * D + x2 * sq(D) / BigFloat(2);
    if (m.kind == Marking::K4Minus) P += x2 * sq(L) * um / BigFloat(2);
    FloatSeries H = (BigFloat(1) / 8 - x2 * od * sq(od)) / (od * BigFloat(2));
    if (m.kind != Marking::Cherry) H += m.brick_in_core ? mark / od : mark;
    FloatVec r;
    r.push_back(L + S + P + H - D);
    r.push_back(x2 * od * sq(od) - BigFloat(27) / 256);
    return r;
  };
}

namespace {

BigFloat simple_rho() { return sqrt(smallest_positive_root(discriminant_simple()).root); }

BigFloat cherry_P1(const BigFloat& r) {
  BigFloat r2 = r * r;
  return -(2187 * pow(r2, 5) + 43740 * pow(r2, 4) + 297432 * pow(r2, 3) + 769824 * r2 * r2 - 7293760 * r2 + 139968);
}

}  // namespace

MomentPair cherry_closed_form(int h, const Rat& aut, bool literal) {
  WorkingPrecision wp;
  BigFloat r = simple_rho(), r2 = r * r;
  BigFloat a = to_bigfloat(aut);
  BigFloat P1 = cherry_P1(r);
  BigFloat k = literal ? r2 * r2 + 8 * r + 4 : r2 * r2 + 8 * r2 + 4;
  BigFloat P2 = -4374 * pow(r2 * r2 + 8 * r2 + 4, 3) * P1;
  static const long long c3[] = {-19591041024LL,     3101861081088LL,     18919725382656LL,  -457978474586624LL,
                                 32947458310656LL,   7449015918528LL,     -412656456960LL,   -464803389936LL,
                                 -95276742480LL,     -10235553660LL,      -593088156LL,      -14348907LL};
  BigFloat P3 = 0;
  for (int i = 11; i >= 0; --i) P3 = P3 * r2 + BigFloat(c3[i]);
  BigFloat rh = pow(r, h);
  MomentPair m;
  m.mu = 4374 * k * k / (r2 * P1) * rh / a;
  m.lambda = 8748 * k * (P2 * h + P3) / (r2 * r2 * pow(P1, 3)) * rh * rh / (a * a) + m.mu + m.mu * m.mu;
  return m;
}

MomentPair brick_closed_form(int b, const Rat& aut) {
  WorkingPrecision wp;
  BigFloat r = simple_rho(), r2 = r * r;
  BigFloat a = to_bigfloat(aut);
  BigFloat P1 = cherry_P1(r);
  BigFloat P2 = -854929626 * r2 * P1;
  static const long long c3[] = {3604751548416LL,     43131140739648LL,    -5760872476783424LL, -1063749220662816LL,
                                 -559899907432200LL,  -51726289953708LL,   19994308272243LL,    5407127322624LL,
                                 591404550912LL,      35202651840LL,       880066296LL};
  BigFloat P3 = 0;
  for (int i = 10; i >= 0; --i) P3 = P3 * r2 + BigFloat(c3[i]);
  BigFloat rb = pow(r, b);
  MomentPair m;
  m.mu = 10185312 * r2 / P1 * rb / a;
  // the size factor multiplying P2 is the brick size b
  m.lambda = 242688 * r2 * (P2 * b + P3) / pow(P1, 3) * rb * rb / (a * a) + m.mu + m.mu * m.mu;
  return m;
}

NumericMoments marked_moments(const Marking& m) {
  WorkingPrecision wp;
  PointSystem f = marked_network_system(m);
  std::vector<BigFloat> seed = {BigFloat("0.319225"), BigFloat("0.011526")};
  NumericMoments out;
  out.implicit = rho_derivatives_implicit(f, seed);
  out.central = rho_derivatives_central(f, seed, BigFloat("1e-6"));
  out.moments = moments_from_rho(out.implicit.rho, out.implicit.d1, out.implicit.d2);
  return out;
}

}  // namespace cubic::singular
