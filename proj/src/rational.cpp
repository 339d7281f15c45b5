#include "cubic/rational.hpp"

#include <stdexcept>

namespace cubic {

std::string to_fraction_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view s) {
  std::string str(s);
  Rat q;
  if (q.set_str(str, 10) != 0) throw std::invalid_argument("not a rational: " + str);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + str);
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace cubic
