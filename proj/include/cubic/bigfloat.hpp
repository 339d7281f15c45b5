#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cubic/series.hpp"

namespace cubic {

using BigFloat = boost::multiprecision::mpfr_float;

// working precision in bits: $CUBICPLANAR_PRECISION if set, else 256
unsigned default_precision_bits();

// Sets the precision of newly created BigFloats for the enclosing scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;
  unsigned bits() const { return bits_; }

 private:
  unsigned bits_;
  unsigned saved_digits_;
};

// true while some PrecisionScope is alive on this thread
bool precision_scope_active();

// Opens a PrecisionScope at default_precision_bits() unless one is already
// active; numeric entry points use it so callers may pick their own precision.
class WorkingPrecision {
 public:
  WorkingPrecision();

 private:
  std::optional<PrecisionScope> scope_;
};

BigFloat to_bigfloat(const Rat& q);
BigFloat to_bigfloat(const std::string& decimal);
std::string to_decimal(const BigFloat& x, int digits);
// round to `places` decimals, as printed in tables
std::string to_fixed(const BigFloat& x, int places);
double to_double(const BigFloat& x);

BigFloat big_pi();
BigFloat gamma_minus_three_halves();  // 4 sqrt(pi) / 3
BigFloat gamma_minus_five_halves();   // -8 sqrt(pi) / 15
// 2^-bits * 2^slack, a tolerance that tracks the working precision
BigFloat precision_epsilon(int slack_bits = 32);

template <>
struct CoeffOps<BigFloat> {
  static BigFloat zero() { return BigFloat(0); }
  static bool is_zero(const BigFloat& a) { return a == 0; }
  static bool is_one(const BigFloat& a) { return a == 1; }
  static BigFloat inverse(const BigFloat& a) {
    if (a == 0) throw std::domain_error("series not invertible: zero constant term");
    return 1 / a;
  }
  static BigFloat scale(const BigFloat& a, const Rat& s) { return a * to_bigfloat(s); }
  static void fma(BigFloat& acc, const BigFloat& a, const BigFloat& b) { acc += a * b; }
};

template <>
struct Embed<BigFloat, Rat> {
  static BigFloat apply(const Rat& q) { return to_bigfloat(q); }
};

using FloatSeries = TruncatedSeries<BigFloat>;

FloatSeries to_float_series(const Series& a);
// elementary functions for any nonzero (positive for sqrt/log) constant term
FloatSeries sqrt_series(const FloatSeries& a);
FloatSeries log_series(const FloatSeries& a);
FloatSeries exp_series(const FloatSeries& a);
// compositional inverse g with a(g(X)) = X; a_0 = 0, a_1 != 0
FloatSeries revert(const FloatSeries& a);

}  // namespace cubic
