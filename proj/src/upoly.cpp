#include "cubic/upoly.hpp"

#include <stdexcept>

namespace cubic {

UPoly::UPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int k, const Rat& c) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::eval(const Rat& u) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * u + *it;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Rat> v;
  for (size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * Rat(long(k)));
  return UPoly(std::move(v));
}

UPoly UPoly::shift_to_one() const {
  // repeated synthetic division by (u - 1)
  std::vector<Rat> a = c_, out;
  while (!a.empty()) {
    for (size_t i = a.size() - 1; i > 0; --i) a[i - 1] += a[i];
    out.push_back(a[0]);
    a.erase(a.begin());
  }
  return UPoly(std::move(out));
}

bool UPoly::nonnegative() const {
  for (const auto& q : c_)
    if (q < 0) return false;
  return true;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

UPoly& UPoly::operator/=(const Rat& s) {
  if (s == 0) throw std::domain_error("UPoly division by zero");
  for (auto& q : c_) q /= s;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  UPoly::fma(r, a, b);
  return r;
}

void UPoly::fma(UPoly& acc, const UPoly& b, const UPoly& c) {
  if (b.c_.empty() || c.c_.empty()) return;
  size_t need = b.c_.size() + c.c_.size() - 1;
  if (acc.c_.size() < need) acc.c_.resize(need);
  Rat t;
  for (size_t i = 0; i < b.c_.size(); ++i) {
    if (b.c_[i] == 0) continue;
    for (size_t j = 0; j < c.c_.size(); ++j) {
      if (c.c_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), b.c_[i].get_mpq_t(), c.c_[j].get_mpq_t());
      acc.c_[i + j] += t;
    }
  }
  acc.trim();
}

}  // namespace cubic
