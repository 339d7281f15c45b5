#pragma once

#include <initializer_list>
#include <vector>

#include "cubic/rational.hpp"

namespace cubic {

// Polynomial in the marking variable u over Q. Trailing zeros are trimmed,
// so the zero polynomial has no stored coefficients.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rat& c);  // NOLINT: constants embed implicitly
  UPoly(int c) : UPoly(Rat(c)) {}
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(std::initializer_list<Rat> coeffs) : UPoly(std::vector<Rat>(coeffs)) {}

  static UPoly monomial(int k, const Rat& c = 1);

  bool is_zero() const { return c_.empty(); }
  // zero polynomial reports degree 0
  int degree() const { return c_.empty() ? 0 : int(c_.size()) - 1; }
  Rat operator[](int k) const { return (k >= 0 && k < int(c_.size())) ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& u) const;
  UPoly derivative() const;
  // (u - 1) Taylor coefficients: p(1 + e) = sum out[k] e^k
  UPoly shift_to_one() const;
  bool nonnegative() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& s);
  UPoly& operator/=(const Rat& s);
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) { return a *= Rat(-1); }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend UPoly operator*(const Rat& s, UPoly a) { return a *= s; }
  friend UPoly operator/(UPoly a, const Rat& s) { return a /= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // a += b * c without a temporary product polynomial
  static void fma(UPoly& acc, const UPoly& b, const UPoly& c);

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace cubic
