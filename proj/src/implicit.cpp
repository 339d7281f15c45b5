#include "cubic/implicit.hpp"

#include <algorithm>

namespace cubic::singular {

using boost::multiprecision::abs;

FloatSeries constant_series(const BigFloat& c, int order) { return FloatSeries::constant(c, order); }

Matrix jacobian(const PointSystem& f, const BigFloat& param, const std::vector<BigFloat>& y) {
  int m = int(y.size());
  Matrix J(m, std::vector<BigFloat>(m));
  FloatSeries p = constant_series(param, 1);
  for (int j = 0; j < m; ++j) {
    FloatVec yy;
    for (int i = 0; i < m; ++i) {
      FloatSeries s = constant_series(y[i], 1);
      if (i == j) s[1] = 1;
      yy.push_back(s);
    }
    FloatVec r = f(p, yy);
    if (int(r.size()) != m) throw std::invalid_argument("system is not square");
    for (int i = 0; i < m; ++i) J[i][j] = r[i][1];
  }
  return J;
}

std::vector<BigFloat> linear_solve(Matrix A, std::vector<BigFloat> b) {
  int n = int(b.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (abs(A[i][c]) > abs(A[piv][c])) piv = i;
    if (A[piv][c] == 0) throw std::domain_error("singular Jacobian");
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (int i = c + 1; i < n; ++i) {
      BigFloat f = A[i][c] / A[c][c];
      if (f == 0) continue;
      for (int j = c; j < n; ++j) A[i][j] -= f * A[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<BigFloat> x(n);
  for (int i = n - 1; i >= 0; --i) {
    BigFloat s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A[i][j] * x[j];
    x[i] = s / A[i][i];
  }
  return x;
}

Matrix invert(const Matrix& A) {
  int n = int(A.size());
  Matrix inv(n, std::vector<BigFloat>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<BigFloat> e(n, BigFloat(0));
    e[j] = 1;
    auto col = linear_solve(A, e);
    for (int i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

std::vector<BigFloat> newton_point(const PointSystem& f, const BigFloat& param, std::vector<BigFloat> y,
                                   int max_iter) {
  BigFloat eps = precision_epsilon(24);
  int m = int(y.size());
  FloatSeries p = constant_series(param, 0);
  for (int it = 0; it < max_iter; ++it) {
    FloatVec yy;
    for (const auto& v : y) yy.push_back(constant_series(v, 0));
    FloatVec r = f(p, yy);
    std::vector<BigFloat> rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = r[i][0];
    auto d = linear_solve(jacobian(f, param, y), rhs);
    BigFloat worst = 0;
    for (int i = 0; i < m; ++i) {
      y[i] -= d[i];
      worst = std::max(worst, BigFloat(abs(d[i]) / (1 + abs(y[i]))));
    }
    if (worst < eps) return y;
  }
  throw ConvergenceError("Newton iteration did not converge");
}

FloatVec solve_regular(const PointSystem& f, const BigFloat& param0, const std::vector<BigFloat>& y0, int order) {
  int m = int(y0.size());
  Matrix Jinv = invert(jacobian(f, param0, y0));
  FloatSeries p = constant_series(param0, order);
  if (order >= 1) p[1] = 1;
  FloatVec y;
  for (const auto& v : y0) y.push_back(constant_series(v, order));
  // constant Jacobian: each pass fixes one more coefficient
  for (int it = 0; it <= order + 1; ++it) {
    FloatVec r = f(p, y);
    for (int i = 0; i < m; ++i) {
      FloatSeries corr(order);
      for (int j = 0; j < m; ++j) corr += r[j] * Jinv[i][j];
      y[i] -= corr;
    }
  }
  FloatVec r = f(p, y);
  BigFloat worst = 0;
  for (const auto& ri : r)
    for (int n = 0; n <= order; ++n) worst = std::max(worst, BigFloat(abs(ri[n])));
  if (worst > sqrt(precision_epsilon(0))) throw ConvergenceError("series solution leaves a residual");
  return y;
}

FoldExpansion puiseux_at_fold(const PointSystem& f, const BigFloat& b0, const std::vector<BigFloat>& point,
                              int x_index, int order, int sign) {
  int K = order + 3;
  FloatVec yd = solve_regular(f, b0, point, K);
  const FloatSeries& xd = yd.at(x_index);
  BigFloat rho = xd[0];
  FloatSeries r = FloatSeries::constant(BigFloat(1), K) - xd / rho;
  BigFloat tol = sqrt(precision_epsilon(0));
  if (abs(r[0]) > tol || abs(r[1]) > tol) throw ConvergenceError("not a fold: x'(b0) does not vanish");
  if (r[2] <= 0) throw ConvergenceError("fold opens the wrong way: x has a minimum at b0");
  r[0] = 0;
  r[1] = 0;
  FloatSeries q = r.shift_down(2);
  FloatSeries Xd = (sqrt_series(q) * BigFloat(sign)).shift_up(1);  // order K - 1
  FloatSeries db = revert(Xd);
  FoldExpansion out;
  out.rho = rho;
  out.branch = db + b0;
  for (const auto& s : yd) out.y.push_back(compose(s, db));
  return out;
}

}  // namespace cubic::singular
