#pragma once

// Guessing linear recurrences with polynomial coefficients,
//   sum_{i=0}^{r} p_i(n) a_{n+i} = 0,
// by exact nullspace computation on a training prefix, confirmed on held-out
// terms that played no part in the fit.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubic/assemble.hpp"

namespace cubic::assemble {

class InsufficientTerms : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Recurrence {
  int order = 0;
  int degree = 0;
  // p[i][j] is the coefficient of n^j in p_i(n); integral, content 1,
  // leading coefficient of p_order positive
  std::vector<std::vector<BigInt>> p;
  int first_index = 0;  // index n of terms[0]
  int training_equations = 0;
  int holdout_equations = 0;

  BigInt eval(int i, const BigInt& n) const;
  // residual of the relation at index n over the given sequence
  BigInt residual(const std::vector<BigInt>& terms, int first_index, int n) const;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

// terms[k] = a_{first_index + k}.  Tries ansatz sizes in increasing
// (order + 1)(degree + 1).  Throws InsufficientTerms when
// (max_order + 1)(max_degree + 1) + holdout exceeds the number of terms.
std::optional<Recurrence> guess_recurrence(const std::vector<BigInt>& terms, int first_index, int max_order,
                                           int max_degree, int holdout = 5);

// count tables are reindexed by k = n / 2 (even n only)
std::optional<Recurrence> guess_recurrence(const CountTable& table, int max_order, int max_degree,
                                           int holdout = 5);

// null space of an integer matrix over Q, as integral primitive vectors
std::vector<std::vector<BigInt>> rational_nullspace(const std::vector<std::vector<BigInt>>& rows, int ncols);

}  // namespace cubic::assemble
