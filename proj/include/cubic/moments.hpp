#pragma once

// Gaussian limit laws for subgraph counts: rho(u) near u = 1 and the
// quasi-powers moments mu = -rho'/rho, lambda = mu^2 + mu - rho''/rho.

#include "cubic/implicit.hpp"
#include "cubic/trivariate.hpp"

namespace cubic::singular {

struct MomentPair {
  BigFloat mu, lambda;
};

MomentPair moments_from_rho(const BigFloat& rho, const BigFloat& d1, const BigFloat& d2);

// rho(1), rho'(1), rho''(1) of one system by one method
struct RhoDerivatives {
  BigFloat rho, d1, d2;
};

// series in u - 1 (implicit differentiation)
RhoDerivatives rho_derivatives_implicit(const PointSystem& f, const std::vector<BigFloat>& seed, int x_index = 0);
// central differences with step h
RhoDerivatives rho_derivatives_central(const PointSystem& f, const std::vector<BigFloat>& seed, const BigFloat& h,
                                       int x_index = 0);

// the two-equation system in (x, E) for triangle-marked graphs, param u
PointSystem triangle_singular_system();

struct TriangleMoments {
  RhoDerivatives printed_implicit;  // two-equation system, implicit
  RhoDerivatives printed_central;   // two-equation system, central differences
  RhoDerivatives full_implicit;     // all network equations
  RhoDerivatives full_central;
  MomentPair moments;               // from printed_implicit
  BigFloat disagreement;            // max spread of rho', rho'' among the four
};

TriangleMoments triangle_moments(const trivariate::TriangleOptions& opt = {});

// network system for (x, D) at the fold of T, param u, with the marking of
//   a cherry: L gains x^h/aut (u-1)
//   a brick:  M(x, 1+D) gains x^b/aut (u-1), so H gains that over 1+D
//   K4^-:     the brick term with b = 4 plus x^2 L^2 (u-1)/2 in P
// brick_in_core = false adds the brick term to H itself instead.
struct Marking {
  enum Kind { Cherry, Brick, K4Minus } kind = Cherry;
  int size = 6;
  Rat aut = 1;
  bool brick_in_core = true;
};

// weight of K4^- reproducing the reference constants (poles unordered)
inline const Rat k4_minus_aut{4};
PointSystem marked_network_system(const Marking& m);

// closed forms.  The cherry mean uses (rho^4 + 8 rho^2 + 4)^2; the literal
// reading (rho^4 + 8 rho + 4)^2 is available for comparison.
MomentPair cherry_closed_form(int h, const Rat& aut, bool literal_reading = false);
MomentPair brick_closed_form(int b, const Rat& aut);

struct NumericMoments {
  RhoDerivatives implicit, central;
  MomentPair moments;  // from implicit
};
NumericMoments marked_moments(const Marking& m);

}  // namespace cubic::singular
