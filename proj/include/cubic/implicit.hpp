#pragma once

// Solving systems F(p, y) = 0 given as functions on float series: Newton at
// a point, power series in the parameter at a regular point, and Puiseux
// series at a fold where the parameter is a branch variable.

#include <functional>
#include <vector>

#include "cubic/bigfloat.hpp"

namespace cubic::singular {

using FloatVec = std::vector<FloatSeries>;
using PointSystem = std::function<FloatVec(const FloatSeries& param, const FloatVec& y)>;
using Matrix = std::vector<std::vector<BigFloat>>;

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FloatSeries constant_series(const BigFloat& c, int order);

Matrix jacobian(const PointSystem& f, const BigFloat& param, const std::vector<BigFloat>& y);
// solves A x = b by Gaussian elimination with partial pivoting
std::vector<BigFloat> linear_solve(Matrix A, std::vector<BigFloat> b);
Matrix invert(const Matrix& A);

std::vector<BigFloat> newton_point(const PointSystem& f, const BigFloat& param, std::vector<BigFloat> seed,
                                   int max_iter = 200);

// y(param0 + e) as series in e to the given order; the Jacobian at the base
// point must be invertible
FloatVec solve_regular(const PointSystem& f, const BigFloat& param0, const std::vector<BigFloat>& y0, int order);

struct FoldExpansion {
  BigFloat rho;        // value of the x unknown at the fold
  FloatSeries branch;  // branch variable as a series in X = sqrt(1 - x/rho)
  FloatVec y;          // every unknown as a series in X
};

// The parameter is a branch variable b (for instance U or V) near b0 with
// x(b) having a quadratic extremum at b0.  `sign` picks the branch:
// b - b0 = sign * c X + ..., c > 0.
FoldExpansion puiseux_at_fold(const PointSystem& f, const BigFloat& b0, const std::vector<BigFloat>& point,
                              int x_index, int order, int sign = -1);

}  // namespace cubic::singular
