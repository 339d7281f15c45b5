#include "cubic/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace cubic {

unsigned default_precision_bits() {
  if (const char* s = std::getenv("CUBICPLANAR_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 64 && v <= 100000) return unsigned(v);
  }
  return 256;
}

namespace {
thread_local int scope_depth = 0;
}

PrecisionScope::PrecisionScope(unsigned bits) : bits_(bits), saved_digits_(BigFloat::default_precision()) {
  BigFloat::default_precision(unsigned(std::ceil(bits * 0.30103)) + 1);
  ++scope_depth;
}

PrecisionScope::~PrecisionScope() {
  BigFloat::default_precision(saved_digits_);
  --scope_depth;
}

bool precision_scope_active() { return scope_depth > 0; }

WorkingPrecision::WorkingPrecision() {
  if (!precision_scope_active()) scope_.emplace(default_precision_bits());
}

BigFloat to_bigfloat(const Rat& q) {
  BigFloat r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat to_bigfloat(const std::string& decimal) { return BigFloat(decimal); }

std::string to_decimal(const BigFloat& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string to_fixed(const BigFloat& x, int places) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(places) << x;
  return os.str();
}

double to_double(const BigFloat& x) { return x.convert_to<double>(); }

BigFloat big_pi() {
  BigFloat r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

BigFloat gamma_minus_three_halves() { return 4 * sqrt(big_pi()) / 3; }
BigFloat gamma_minus_five_halves() { return -8 * sqrt(big_pi()) / 15; }

BigFloat precision_epsilon(int slack_bits) {
  long bits = long(std::floor(BigFloat::default_precision() / 0.30103));
  return ldexp(BigFloat(1), int(slack_bits - bits));
}

FloatSeries to_float_series(const Series& a) {
  return a.map([](const Rat& q) { return to_bigfloat(q); });
}

FloatSeries sqrt_series(const FloatSeries& a) {
  if (a[0] <= 0) throw std::domain_error("sqrt_series: constant term must be positive");
  BigFloat c = a[0];
  BigFloat r = sqrt(c);
  FloatSeries n = a / c;
  n[0] = 1;
  return sqrt1(n) * r;
}

FloatSeries log_series(const FloatSeries& a) {
  if (a[0] <= 0) throw std::domain_error("log_series: constant term must be positive");
  BigFloat c = a[0];
  FloatSeries n = a / c;
  n[0] = 1;
  FloatSeries r = log1(n);
  r[0] = log(c);
  return r;
}

FloatSeries exp_series(const FloatSeries& a) {
  BigFloat c = a[0];
  FloatSeries n = a;
  n[0] = 0;
  return exp0(n) * BigFloat(exp(c));
}

FloatSeries revert(const FloatSeries& a) {
  if (a[0] != 0 || a[1] == 0) throw std::domain_error("revert: need a_0 = 0 and a_1 != 0");
  int N = a.order();
  FloatSeries X = x_power<BigFloat>(1, N);
  BigFloat inv1 = 1 / a[1];
  FloatSeries g = X * inv1;
  // each step fixes at least one more coefficient
  for (int it = 0; it < N + 1; ++it) {
    FloatSeries err = compose(a, g) - X;
    err[0] = 0;
    g -= err * inv1;
    g[0] = 0;
  }
  return g;
}

}  // namespace cubic
