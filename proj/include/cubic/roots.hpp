#pragma once

#include <vector>

#include "cubic/bigfloat.hpp"

namespace cubic::singular {

struct Complex {
  BigFloat re, im;
};

BigFloat abs(const Complex& z);

// all complex roots of p (coefficients in increasing degree), Aberth-Ehrlich
std::vector<Complex> all_roots(const UPoly& p);

struct PositiveRoot {
  BigFloat root;
  // the root is simple and every other complex root is strictly larger in modulus
  bool unique_modulus = false;
  // the root is unique on its circle |y| = r; other roots may lie inside
  BigFloat next_modulus_gap;  // min over other roots of ||y_k| - r|
};

// smallest positive real root, located from the complex roots and refined by
// bisection on a sign change followed by Newton steps
PositiveRoot smallest_positive_root(const UPoly& p);

BigFloat eval(const UPoly& p, const BigFloat& y);
BigFloat eval_derivative(const UPoly& p, const BigFloat& y);

}  // namespace cubic::singular
