#include "cubic/mapcount.hpp"

#include "cubic/fixpoint.hpp"

namespace cubic::mapcount {

Series quadrangulation_u(int order) {
  std::vector<FixpointRule<Series>> rules = {
      {"U", [](const SeriesEnv<Series>& e, int n) {
         Series one_minus = Series::constant(1, n) - e.at("U");
         return x_power<Rat>(1, n) * inverse(pow_int(one_minus, 3));
       }}};
  return solve_fixpoint_progressive(rules, order, 1).at("U");
}

Series quadrangulation_u_closed(int order) {
  Series u(order);
  for (int n = 1; n <= order; ++n) {
    u[n] = Rat(binomial(4 * n - 2, n - 1), n);
    u[n].canonicalize();
  }
  return u;
}

Series triangulations(int order) {
  Series u = quadrangulation_u(order);
  return u * (Series::constant(1, order) - 2 * u);
}

Series irreducible_v(int order) {
  std::vector<FixpointRule<Series>> rules = {
      {"V", [](const SeriesEnv<Series>& e, int n) {
         Series one_minus = Series::constant(1, n) - e.at("V");
         return x_power<Rat>(1, n) * inverse(one_minus * one_minus);
       }}};
  return solve_fixpoint_progressive(rules, order, 1).at("V");
}

Series irreducible_v_closed(int order) {
  Series v(order);
  for (int n = 1; n <= order; ++n) {
    v[n] = Rat(binomial(3 * n - 2, n - 1), n);
    v[n].canonicalize();
  }
  return v;
}

Series four_connected(int order) {
  Series v = irreducible_v(order);
  Series one = Series::constant(1, order);
  Series vp1 = v + one;
  return x_power<Rat>(1, order) - x_power<Rat>(2, order) + v * (v - one) * inverse(vp1 * vp1);
}

BivarSeries triangulations_marked(int order) {
  // t starts at z^2; s = t/z is carried at order - 1 and the equation is
  // solved for s directly so that no precision is lost in the division.
  Series t4 = four_connected(order);
  std::vector<FixpointRule<BivarSeries>> rules = {
      {"s", [&t4](const SeriesEnv<BivarSeries>& e, int n) {
         const BivarSeries& s = e.at("s");
         BivarSeries one = BivarSeries::constant(UPoly(1), n);
         BivarSeries ps = one + s;
         BivarSeries z = x_power<UPoly>(1, n);
         BivarSeries arg = (ps * ps).shift_up(1);
         BivarSeries a = compose(t4, arg).shift_down(1);
         BivarSeries b = pow_int(ps, 3) + BivarSeries::constant(UPoly{Rat(-1), Rat(1)}, n);
         return a * inverse(ps) + z * b;
       }}};
  BivarSeries s = solve_fixpoint_progressive(rules, order - 1, 1).at("s");
  return s.shift_up(1);
}

Series mbar_substitution(const Series& w, const Series& u_of_z) {
  int n = w.order();
  Series u = compose(u_of_z, w);
  if (u.order() < n) throw PrecisionError("mbar_substitution: U known to too low an order");
  u = u.truncate(n);
  Series one = Series::constant(1, n);
  Series r = 4 * u * u + 2 * u + 3 * log1(one - u) + w;
  return r * Rat(-1, 12);
}

}  // namespace cubic::mapcount
