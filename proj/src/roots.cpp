#include "cubic/roots.hpp"

#include <stdexcept>

namespace cubic::singular {

namespace {

Complex add(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex sub(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex mul(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex div(const Complex& a, const Complex& b) {
  BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// p(z) and p'(z) by Horner
void horner(const std::vector<BigFloat>& c, const Complex& z, Complex& p, Complex& dp) {
  p = {c.back(), BigFloat(0)};
  dp = {BigFloat(0), BigFloat(0)};
  for (int k = int(c.size()) - 2; k >= 0; --k) {
    dp = add(mul(dp, z), p);
    p = add(mul(p, z), Complex{c[k], BigFloat(0)});
  }
}

}  // namespace

BigFloat abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

BigFloat eval(const UPoly& p, const BigFloat& y) {
  BigFloat r = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * y + to_bigfloat(*it);
  return r;
}

BigFloat eval_derivative(const UPoly& p, const BigFloat& y) { return eval(p.derivative(), y); }

std::vector<Complex> all_roots(const UPoly& p) {
  WorkingPrecision wp;
  int n = p.degree();
  if (p.is_zero() || n < 1) throw std::invalid_argument("all_roots: polynomial must have degree >= 1");
  std::vector<BigFloat> c;
  BigFloat lead = to_bigfloat(p[n]);
  for (int k = 0; k <= n; ++k) c.push_back(to_bigfloat(p[k]) / lead);
  // Fujiwara bound for the starting circle
  BigFloat R = 0;
  for (int k = 1; k <= n; ++k) {
    BigFloat a = boost::multiprecision::abs(c[n - k]);
    if (k == n) a /= 2;
    if (a > 0) R = std::max(R, BigFloat(pow(a, BigFloat(1) / k)));
  }
  R = std::max(R, BigFloat(1));
  std::vector<Complex> z(n);
  BigFloat pi = big_pi();
  for (int k = 0; k < n; ++k) {
    BigFloat a = 2 * pi * k / n + BigFloat("0.4");
    z[k] = {R * cos(a), R * sin(a)};
  }
  BigFloat eps = precision_epsilon(16);
  BigFloat last = 1;
  for (int iter = 0; iter < 2000; ++iter) {
    BigFloat worst = 0;
    for (int k = 0; k < n; ++k) {
      Complex pv, dpv;
      horner(c, z[k], pv, dpv);
      if (pv.re == 0 && pv.im == 0) continue;
      Complex w = div(pv, dpv);
      Complex s{BigFloat(0), BigFloat(0)};
      for (int j = 0; j < n; ++j)
        if (j != k) s = add(s, div(Complex{BigFloat(1), BigFloat(0)}, sub(z[k], z[j])));
      Complex corr = div(w, sub(Complex{BigFloat(1), BigFloat(0)}, mul(w, s)));
      z[k] = sub(z[k], corr);
      BigFloat rel = abs(corr) / (1 + abs(z[k]));
      if (rel > worst) worst = rel;
    }
    if (worst < eps) return z;
    last = worst;
  }
  // clustered or repeated roots stall early; still fine for locating them
  if (last < BigFloat("1e-30")) return z;
  throw std::runtime_error("all_roots: Aberth iteration did not converge");
}

PositiveRoot smallest_positive_root(const UPoly& p) {
  WorkingPrecision wp;
  auto roots = all_roots(p);
  BigFloat tol = sqrt(precision_epsilon(0));
  int best = -1;
  for (int k = 0; k < int(roots.size()); ++k) {
    const auto& z = roots[k];
    if (boost::multiprecision::abs(z.im) < tol * (1 + abs(z)) && z.re > 0)
      if (best < 0 || z.re < roots[best].re) best = k;
  }
  if (best < 0) throw std::runtime_error("no positive real root");
  BigFloat r0 = roots[best].re;

  // bracket, bisect, then polish
  BigFloat h = r0 * BigFloat("1e-30");
  BigFloat a = r0 - h, b = r0 + h;
  BigFloat fa = eval(p, a), fb = eval(p, b);
  while (fa * fb > 0) {
    h *= 16;
    if (h > r0 / 1000) throw std::runtime_error("root candidate does not bracket a sign change");
    a = r0 - h;
    b = r0 + h;
    fa = eval(p, a);
    fb = eval(p, b);
  }
  for (int it = 0; it < 40; ++it) {
    BigFloat m = (a + b) / 2, fm = eval(p, m);
    if (fm == 0) {
      a = b = m;
      break;
    }
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  BigFloat r = (a + b) / 2;
  for (int it = 0; it < 20; ++it) {
    BigFloat d = eval(p, r) / eval_derivative(p, r);
    r -= d;
    if (boost::multiprecision::abs(d) <= precision_epsilon(4) * r) break;
  }

  PositiveRoot out;
  out.root = r;
  bool have_next = false;
  out.unique_modulus = true;
  BigFloat ring = BigFloat("1e-12");
  for (int k = 0; k < int(roots.size()); ++k) {
    if (k == best) continue;
    BigFloat m = abs(roots[k]);
    BigFloat gap = boost::multiprecision::abs(m - r);
    if (!have_next || gap < out.next_modulus_gap) out.next_modulus_gap = gap;
    have_next = true;
    if (gap <= ring * r) out.unique_modulus = false;
  }
  return out;
}

}  // namespace cubic::singular
