#include "cubic/series.hpp"

namespace cubic {

BivarSeries lift(const Series& a) {
  return a.map([](const Rat& q) { return UPoly(q); });
}

Series eval_u(const BivarSeries& a, const Rat& u) {
  return a.map([&](const UPoly& p) { return p.eval(u); });
}

Series eval_u(const BivarSeries& a, const Series& v) {
  int N = std::min(a.order(), v.order());
  int dmax = 0;
  for (int n = 0; n <= N; ++n) dmax = std::max(dmax, a[n].degree());
  std::vector<Series> pw;
  pw.push_back(Series::constant(1, N));
  for (int j = 1; j <= dmax; ++j) pw.push_back(pw.back() * v.truncate(N));
  Series r(N);
  for (int n = 0; n <= N; ++n) {
    const auto& p = a[n].coeffs();
    for (size_t j = 0; j < p.size(); ++j) {
      if (p[j] == 0) continue;
      for (int m = 0; m + n <= N; ++m) CoeffOps<Rat>::fma(r[n + m], p[j], pw[j][m]);
    }
  }
  return r;
}

BivarSeries u_derivative(const BivarSeries& a) {
  return a.map([](const UPoly& p) { return p.derivative(); });
}

BivarSeries shift_u_to_one(const BivarSeries& a) {
  return a.map([](const UPoly& p) { return p.shift_to_one(); });
}

}  // namespace cubic
