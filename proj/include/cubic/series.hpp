#pragma once

// Dense truncated power series a_0 + a_1 x + ... + a_N x^N with coefficients
// in a ring K (Q, Q[u], or a big float).  Arithmetic never reports a
// coefficient past the smallest order that is actually known.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/rational.hpp"
#include "cubic/upoly.hpp"

namespace cubic {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class K>
struct CoeffOps;

template <>
struct CoeffOps<Rat> {
  static Rat zero() { return Rat(0); }
  static bool is_zero(const Rat& a) { return a == 0; }
  static bool is_one(const Rat& a) { return a == 1; }
  static Rat inverse(const Rat& a) {
    if (a == 0) throw std::domain_error("series not invertible: zero constant term");
    return 1 / a;
  }
  static Rat scale(const Rat& a, const Rat& s) { return a * s; }
  static void fma(Rat& acc, const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) return;
    Rat t;
    mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    acc += t;
  }
};

template <>
struct CoeffOps<UPoly> {
  static UPoly zero() { return UPoly(); }
  static bool is_zero(const UPoly& a) { return a.is_zero(); }
  static bool is_one(const UPoly& a) { return a.degree() == 0 && a[0] == 1; }
  static UPoly inverse(const UPoly& a) {
    if (a.is_zero() || a.degree() != 0)
      throw std::domain_error("series not invertible: constant term is not a unit of Q[u]");
    return UPoly(1 / a[0]);
  }
  static UPoly scale(const UPoly& a, const Rat& s) { return a * s; }
  static void fma(UPoly& acc, const UPoly& a, const UPoly& b) { UPoly::fma(acc, a, b); }
};

// Coefficient embedding used by mixed-ring composition.
template <class To, class From>
struct Embed {
  static To apply(const From& a) { return To(a); }
};
template <class K>
struct Embed<K, K> {
  static const K& apply(const K& a) { return a; }
};

template <class K>
class TruncatedSeries {
  using Ops = CoeffOps<K>;

 public:
  using coeff_type = K;

  TruncatedSeries() : c_(1, Ops::zero()) {}
  explicit TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    c_.assign(order + 1, Ops::zero());
  }
  explicit TruncatedSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static TruncatedSeries constant(const K& c, int order) {
    TruncatedSeries r(order);
    r.c_[0] = c;
    return r;
  }
  static TruncatedSeries monomial(int k, const K& c, int order) {
    TruncatedSeries r(order);
    if (k <= order) r.c_[k] = c;
    return r;
  }

  int order() const { return int(c_.size()) - 1; }
  const K& operator[](int n) const { return c_.at(n); }
  K& operator[](int n) { return c_.at(n); }
  const std::vector<K>& coeffs() const { return c_; }

  // first nonzero index; order()+1 when every known coefficient vanishes
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (!Ops::is_zero(c_[i])) return i;
    return order() + 1;
  }
  bool is_zero() const { return valuation() > order(); }
  bool is_even() const {
    for (int i = 1; i <= order(); i += 2)
      if (!Ops::is_zero(c_[i])) return false;
    return true;
  }

  TruncatedSeries truncate(int n) const {
    if (n > order()) throw PrecisionError("truncate: requested order " + std::to_string(n) +
                                          " exceeds known order " + std::to_string(order()));
    return TruncatedSeries(std::vector<K>(c_.begin(), c_.begin() + n + 1));
  }
  // pad with zeros; only meaningful for polynomials or warm starts
  TruncatedSeries padded(int n) const {
    TruncatedSeries r = *this;
    if (n > order()) r.c_.resize(n + 1, Ops::zero());
    return n < order() ? truncate(n) : r;
  }

  TruncatedSeries shift_up(int k) const {
    std::vector<K> v(k, Ops::zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return TruncatedSeries(std::move(v));
  }
  // exact division by x^k; low coefficients must vanish
  TruncatedSeries shift_down(int k) const {
    if (valuation() < k) throw std::domain_error("shift_down: series not divisible by x^" + std::to_string(k));
    if (k > order()) throw PrecisionError("shift_down: nothing known after division");
    return TruncatedSeries(std::vector<K>(c_.begin() + k, c_.end()));
  }

  TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries(0);
    std::vector<K> v;
    for (int n = 1; n <= order(); ++n) v.push_back(Ops::scale(c_[n], Rat(n)));
    return TruncatedSeries(std::move(v));
  }
  // x d/dx, order preserved
  TruncatedSeries x_derivative() const {
    TruncatedSeries r = *this;
    for (int n = 0; n <= order(); ++n) r.c_[n] = Ops::scale(c_[n], Rat(n));
    return r;
  }
  // \int_0^x a(t) dt, order grows by one
  TruncatedSeries antiderivative() const {
    std::vector<K> v(1, Ops::zero());
    for (int n = 0; n <= order(); ++n) v.push_back(Ops::scale(c_[n], Rat(1, n + 1)));
    return TruncatedSeries(std::move(v));
  }
  // coefficientwise a_n / n, i.e. \int a(t)/t dt; requires a_0 = 0
  TruncatedSeries integrate_over_x() const {
    if (!Ops::is_zero(c_[0])) throw std::domain_error("integrate_over_x: nonzero constant term");
    TruncatedSeries r(order());
    for (int n = 1; n <= order(); ++n) r.c_[n] = Ops::scale(c_[n], Rat(1, n));
    return r;
  }

  template <class F>
  auto map(F&& f) const {
    using R = decltype(f(c_[0]));
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(f(a));
    return TruncatedSeries<R>(std::move(v));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& b) {
    if (b.order() < order()) c_.resize(b.order() + 1);
    for (int i = 0; i <= order(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& b) {
    if (b.order() < order()) c_.resize(b.order() + 1);
    for (int i = 0; i <= order(); ++i) c_[i] -= b.c_[i];
    return *this;
  }
  TruncatedSeries& operator+=(const K& s) {
    c_[0] += s;
    return *this;
  }
  TruncatedSeries& operator-=(const K& s) {
    c_[0] -= s;
    return *this;
  }
  TruncatedSeries& operator*=(const K& s) {
    for (auto& a : c_) a *= s;
    return *this;
  }
  TruncatedSeries& operator/=(const K& s) {
    for (auto& a : c_) a /= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const K& s) { return a += s; }
  friend TruncatedSeries operator+(const K& s, TruncatedSeries a) { return a += s; }
  friend TruncatedSeries operator-(TruncatedSeries a, const K& s) { return a -= s; }
  friend TruncatedSeries operator-(const K& s, TruncatedSeries a) { return (-a) += s; }
  friend TruncatedSeries operator*(TruncatedSeries a, const K& s) { return a *= s; }
  friend TruncatedSeries operator*(const K& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator/(TruncatedSeries a, const K& s) { return a /= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul_to(a, b, std::min(a.order(), b.order()));
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  // Product computed up to `target`, which may exceed both operand orders when
  // their valuations make the extra coefficients determined.
  friend TruncatedSeries mul_to(const TruncatedSeries& a, const TruncatedSeries& b, int target) {
    int va = a.valuation(), vb = b.valuation();
    int limit = std::min(a.order() + vb, b.order() + va);
    if (target > limit)
      throw PrecisionError("mul_to: target order " + std::to_string(target) + " exceeds determined order " +
                           std::to_string(limit));
    TruncatedSeries r(target);
    for (int i = va; i <= std::min(a.order(), target - vb); ++i) {
      if (Ops::is_zero(a.c_[i])) continue;
      int jmax = std::min(b.order(), target - i);
      for (int j = vb; j <= jmax; ++j) Ops::fma(r.c_[i + j], a.c_[i], b.c_[j]);
    }
    return r;
  }

 private:
  std::vector<K> c_;
};

using Series = TruncatedSeries<Rat>;
using BivarSeries = TruncatedSeries<UPoly>;

// ---- elementary operations ------------------------------------------------

template <class K>
TruncatedSeries<K> x_power(int k, int order) {
  return TruncatedSeries<K>::monomial(k, K(1), order);
}

template <class K>
TruncatedSeries<K> inverse(const TruncatedSeries<K>& a) {
  using Ops = CoeffOps<K>;
  int N = a.order();
  TruncatedSeries<K> b(N);
  K b0 = Ops::inverse(a[0]);
  b[0] = b0;
  for (int n = 1; n <= N; ++n) {
    K s = Ops::zero();
    for (int k = 1; k <= n; ++k) Ops::fma(s, a[k], b[n - k]);
    b[n] = -(s * b0);
  }
  return b;
}

template <class K>
TruncatedSeries<K> operator/(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
  return a * inverse(b);
}

// sqrt(a) for a_0 = 1
template <class K>
TruncatedSeries<K> sqrt1(const TruncatedSeries<K>& a) {
  using Ops = CoeffOps<K>;
  if (!Ops::is_one(a[0])) throw std::domain_error("sqrt1: constant term must be 1");
  int N = a.order();
  TruncatedSeries<K> r(N);
  r[0] = a[0];
  for (int n = 1; n <= N; ++n) {
    K s = Ops::zero();
    for (int k = 1; k < n; ++k) Ops::fma(s, r[k], r[n - k]);
    r[n] = Ops::scale(a[n] - s, Rat(1, 2));
  }
  return r;
}

// log(a) for a_0 = 1, via n b_n = n a_n - sum_{k<n} k b_k a_{n-k}
template <class K>
TruncatedSeries<K> log1(const TruncatedSeries<K>& a) {
  using Ops = CoeffOps<K>;
  if (!Ops::is_one(a[0])) throw std::domain_error("log1: constant term must be 1");
  int N = a.order();
  TruncatedSeries<K> b(N);
  for (int n = 1; n <= N; ++n) {
    K s = Ops::scale(a[n], Rat(n));
    for (int k = 1; k < n; ++k) {
      K t = Ops::zero();
      Ops::fma(t, b[k], a[n - k]);
      s -= Ops::scale(t, Rat(k));
    }
    b[n] = Ops::scale(s, Rat(1, n));
  }
  return b;
}

// exp(a) for a_0 = 0, via n e_n = sum_{k=1}^n k a_k e_{n-k}
template <class K>
TruncatedSeries<K> exp0(const TruncatedSeries<K>& a) {
  using Ops = CoeffOps<K>;
  if (!Ops::is_zero(a[0])) throw std::domain_error("exp0: constant term must be 0");
  int N = a.order();
  TruncatedSeries<K> e(N);
  std::vector<K> ka(N + 1, Ops::zero());
  for (int k = 1; k <= N; ++k) ka[k] = Ops::scale(a[k], Rat(k));
  e[0] = K(1);
  for (int n = 1; n <= N; ++n) {
    K s = Ops::zero();
    for (int k = 1; k <= n; ++k) Ops::fma(s, ka[k], e[n - k]);
    e[n] = Ops::scale(s, Rat(1, n));
  }
  return e;
}

template <class K>
TruncatedSeries<K> pow_int(const TruncatedSeries<K>& a, unsigned k) {
  TruncatedSeries<K> r = TruncatedSeries<K>::constant(K(1), a.order());
  TruncatedSeries<K> b = a;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

// outer(inner(x)) with inner_0 = 0.  Known to min(N_inner, v (N_outer + 1) - 1)
// where v is the valuation of inner.
template <class KO, class KI>
TruncatedSeries<KI> compose(const TruncatedSeries<KO>& outer, const TruncatedSeries<KI>& inner) {
  if (!CoeffOps<KI>::is_zero(inner[0])) throw std::domain_error("compose: inner series has nonzero constant term");
  int v = inner.valuation();
  long bound = long(v) * (outer.order() + 1) - 1;
  int R = int(std::min<long>(inner.order(), bound));
  int K = std::min(outer.order(), R / v);
  TruncatedSeries<KI> in = inner.truncate(R);
  TruncatedSeries<KI> r = TruncatedSeries<KI>::constant(Embed<KI, KO>::apply(outer[K]), R);
  for (int k = K - 1; k >= 0; --k) {
    r = r * in;
    r += Embed<KI, KO>::apply(outer[k]);
  }
  return r;
}

// ---- bivariate helpers ----------------------------------------------------

BivarSeries lift(const Series& a);
Series eval_u(const BivarSeries& a, const Rat& u);
// substitute a series (in the same x) for u
Series eval_u(const BivarSeries& a, const Series& v);
// d/du applied coefficientwise
BivarSeries u_derivative(const BivarSeries& a);
// shift u -> 1 + e, so that coefficient polynomials are in e
BivarSeries shift_u_to_one(const BivarSeries& a);

}  // namespace cubic
