#include "cubic/trivariate.hpp"

#include <stdexcept>

#include "cubic/fixpoint.hpp"
#include "cubic/mapcount.hpp"

namespace cubic::trivariate {

std::vector<BivarSeries> t_substitution_coefficients(const BivarSeries& t, const UPoly& c, int order) {
  // t_k(1 + c s) w^k = sum_j tau_kj c^j s^j w^k = sum_j tau_kj c^j x^{2j} w^{k-j};
  // the u-degree of t_k is below k, so k - j >= 1
  BivarSeries shifted = shift_u_to_one(t);
  int K = order / 2;
  if (shifted.order() < K) throw PrecisionError("marked triangulations known to too low an order");
  std::vector<BivarSeries> B(K + 1, BivarSeries(order));
  std::vector<UPoly> cpow{UPoly(1)};
  for (int k = 0; k <= K; ++k) {
    const UPoly& p = shifted[k];
    for (int j = 0; j < int(p.coeffs().size()); ++j) {
      if (p[j] == 0) continue;
      if (j > k) throw std::logic_error("marked triangulation with too many degree-3 vertices");
      while (int(cpow.size()) <= j) cpow.push_back(cpow.back() * c);
      B[k - j][2 * j] += cpow[j] * p[j];
    }
  }
  return B;
}

namespace {

template <class K>
struct Coeff;
template <>
struct Coeff<UPoly> {
  static UPoly embed(const UPoly& p) { return p; }
};
template <>
struct Coeff<Rat> {
  static Rat embed(const UPoly& p) {
    if (p.degree() > 0) throw std::logic_error("u-dependent coefficient in a univariate system");
    return p[0];
  }
};

// coefficient series of t(w, v) specialised to the coefficient ring K
template <class K>
std::vector<TruncatedSeries<K>> convert(const std::vector<BivarSeries>& B) {
  std::vector<TruncatedSeries<K>> out;
  for (const auto& b : B) out.push_back(b.map([](const UPoly& p) { return Coeff<K>::embed(p); }));
  return out;
}

template <class K>
SeriesEnv<TruncatedSeries<K>> solve_divided(int order, const K& u, const std::vector<TruncatedSeries<K>>& B,
                                            const TriangleOptions& opt, int* sweeps) {
  using S = TruncatedSeries<K>;
  const Rat half(1, 2);
  auto x2 = [](int n) { return x_power<K>(2, n); };
  auto one = [](int n) { return S::constant(K(1), n); };

  std::vector<FixpointRule<S>> rules;
  rules.push_back({"I", [](const SeriesEnv<S>& e, int n) {
                     const S& L = e.at("L");
                     return mul_to(L, L, n + 2).shift_down(2);
                   }});
  rules.push_back({"L", [=](const SeriesEnv<S>& e, int n) {
                     const S &E = e.at("E"), &L = e.at("L"), &I = e.at("I");
                     S X2 = x2(n);
                     S EmL = E - L;
                     S corr = opt.loop == LoopVariant::Printed
                                  ? X2 * EmL + u * X2 * L + L * L
                                  : X2 * EmL + (u * half) * X2 * L + half * (L * L);
                     return half * (X2 * (I + EmL)) + ((u - K(1)) * half) * (X2 * corr);
                   }});
  rules.push_back({"P0", [=](const SeriesEnv<S>& e, int n) {
                     S EmL = e.at("E") - e.at("L");
                     S X2 = x2(n);
                     return X2 * EmL + half * (X2 * EmL * EmL);
                   }});
  rules.push_back({"P1d", [=](const SeriesEnv<S>& e, int n) {
                     const S& L = e.at("L");
                     S X2 = x2(n);
                     return X2 * L * (e.at("E") - L) + (u * opt.p1_loop_weight) * (X2 * L);
                   }});
  rules.push_back({"P2d", [=](const SeriesEnv<S>& e, int n) {
                     const S& L = e.at("L");
                     return half * (x2(n) * L * L);
                   }});
  rules.push_back({"S1d", [=](const SeriesEnv<S>& e, int n) {
                     const S &L = e.at("L"), &E = e.at("E");
                     S X2 = x2(n);
                     S L2 = L * L;
                     return L2 * L + Rat(2) * (X2 * L * (E - L)) + (u * Rat(2)) * (X2 * L2);
                   }});
  rules.push_back({"S0", [](const SeriesEnv<S>& e, int) {
                     const S &E = e.at("E"), &S1d = e.at("S1d");
                     return E * (E - (e.at("S0") + S1d)) - S1d;
                   }});
  rules.push_back({"W0", [=](const SeriesEnv<S>& e, int n) {
                     const S& E = e.at("E");
                     S E2 = E * E, E3 = E2 * E, E4 = E3 * E, E5 = E4 * E;
                     S in = (Rat(2) * (K(1) + u)) * E2 + Rat(8) * E3 + Rat(5) * E4 + E5;
                     return half * (x_power<K>(4, n) * in);
                   }});
  rules.push_back({"W1d", [=](const SeriesEnv<S>& e, int n) {
                     const S& E = e.at("E");
                     S E2 = E * E;
                     S in = (Rat(4) * u) * E + Rat(6) * E2 + Rat(2) * (E2 * E);
                     return half * (x_power<K>(4, n) * in);
                   }});
  rules.push_back({"W2d", [=](const SeriesEnv<S>& e, int n) {
                     return half * (x_power<K>(4, n) * (e.at("E") + u * u));
                   }});
  rules.push_back({"T", [&B](const SeriesEnv<S>& e, int n) {
                     // t(x^2 (1+E)^3, 1 + (u-1)/(1+E)^3) by Horner in w
                     S oE = S::constant(K(1), n) + e.at("E");
                     S w = mul_to(x_power<K>(2, n), pow_int(oE, 3), n);
                     int M = n / 2;
                     S r = B[M].truncate(n);
                     for (int m = M - 1; m >= 0; --m) r = r * w + B[m].truncate(n);
                     return r;
                   }});
  rules.push_back({"H1d", [=](const SeriesEnv<S>& e, int n) { return half * (x2(n) * e.at("T")); }});
  rules.push_back({"H0", [=](const SeriesEnv<S>& e, int n) {
                     const S& E = e.at("E");
                     S oE = one(n) + E;
                     S X2 = x2(n);
                     S a = half * e.at("T") * (one(n) - X2 * (E + (Rat(3) - Rat(2) * u))) * inverse(oE);
                     S b = half * (x_power<K>(4, n) * oE * oE * (pow_int(oE, 3) + (u - K(1))));
                     return a - b;
                   }});
  rules.push_back({"D0", [](const SeriesEnv<S>& e, int) {
                     return e.at("S0") + e.at("P0") + e.at("W0") + e.at("L") + e.at("H0");
                   }});
  rules.push_back({"D1d", [](const SeriesEnv<S>& e, int) {
                     return e.at("S1d") + e.at("P1d") + e.at("W1d") + e.at("H1d");
                   }});
  rules.push_back({"D2d", [](const SeriesEnv<S>& e, int) { return e.at("P2d") + e.at("W2d"); }});
  rules.push_back({"E", [](const SeriesEnv<S>& e, int) { return e.at("D0") + e.at("D1d") + e.at("D2d"); }});

  FixpointStats st;
  auto env = solve_fixpoint_progressive(rules, order, 2, &st);
  if (sweeps) *sweeps = st.sweeps;
  return env;
}

void check_order(int order) {
  if (order < 4) throw std::invalid_argument("triangle systems need order >= 4");
}

}  // namespace

TriangleBundle solve_triangle_marked(int order, const TriangleOptions& opt) {
  check_order(order);
  const UPoly u{Rat(0), Rat(1)};
  BivarSeries t = mapcount::triangulations_marked(order / 2 + 1);
  auto B = t_substitution_coefficients(t, u - UPoly(1), order);
  TriangleBundle b;
  b.order = order;
  auto env = solve_divided<UPoly>(order, u, B, opt, &b.sweeps);
  b.E = env.at("E");
  b.L = env.at("L");
  b.I = env.at("I");
  b.D0 = env.at("D0");
  b.D1 = env.at("D1d") * u;
  b.D2 = env.at("D2d") * (u * u);
  BivarSeries Dsum = b.D0 + b.D1 + b.D2;
  BivarSeries x2 = x_power<UPoly>(2, order);
  BivarSeries doubled = opt.rooting == RootingForm::ParallelTerms ? x2 * (b.E - b.L) + (u * u) * (x2 * b.L)
                                                                  : x2 * Dsum;
  b.rooted = (Dsum + b.I - b.L - doubled - b.L * b.L) * Rat(1, 3);
  b.connected = b.rooted.integrate_over_x();
  return b;
}

TriangleFreeBundle solve_triangle_free(int order, const TriangleOptions& opt) {
  check_order(order);
  BivarSeries t = mapcount::triangulations_marked(order / 2 + 1);
  auto B = convert<Rat>(t_substitution_coefficients(t, UPoly(-1), order));
  TriangleFreeBundle b;
  b.order = order;
  auto env = solve_divided<Rat>(order, Rat(0), B, opt, &b.sweeps);
  b.E = env.at("E");
  b.L = env.at("L");
  b.I = env.at("I");
  b.D0 = env.at("D0");
  b.rooted = (b.D0 + b.I - b.L - b.L * b.L - x_power<Rat>(2, order) * (b.E - b.L)) * Rat(1, 3);
  b.connected = b.rooted.integrate_over_x();
  b.all = exp0(b.connected);
  return b;
}

std::vector<std::pair<int, BigInt>> rooted_triangle_distribution(const TriangleBundle& b, int n) {
  if (n < 0 || n > b.order) throw std::out_of_range("n outside the computed order");
  std::vector<std::pair<int, BigInt>> out;
  BigInt f = factorial(n);
  const UPoly& p = b.rooted[n];
  for (int k = 0; k < int(p.coeffs().size()); ++k) {
    Rat c = p[k] * Rat(f);
    if (!is_integer(c) || c < 0) throw std::logic_error("non-integral rooted triangle count");
    if (c != 0) out.push_back({k, c.get_num()});
  }
  return out;
}

std::vector<std::pair<int, BigInt>> triangle_distribution(const TriangleBundle& b, int n) {
  auto out = rooted_triangle_distribution(b, n);
  for (auto& [k, c] : out) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), n)) throw std::logic_error("rooted count not divisible by n");
    c /= n;
  }
  return out;
}

Rat mean_triangles(const TriangleBundle& b, int n) {
  const UPoly& p = b.rooted[n];
  Rat total = p.eval(1);
  if (total == 0) throw std::domain_error("no graphs of this size");
  return p.derivative().eval(1) / total;
}

}  // namespace cubic::trivariate
