#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubic {

using Rat = mpq_class;
using BigInt = mpz_class;

// Always "num/den", den > 0, lowest terms.
std::string to_fraction_string(const Rat& q);
Rat parse_rat(std::string_view s);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace cubic
