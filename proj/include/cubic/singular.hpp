#pragma once

// Dominant singularities, Puiseux expansions in X = sqrt(1 - x/rho) and
// asymptotic constants  count_n ~ amplitude * n^{-7/2} rho^{-n} n!.

#include <string>
#include <utility>
#include <vector>

#include "cubic/implicit.hpp"
#include "cubic/netsolve.hpp"
#include "cubic/trivariate.hpp"

namespace cubic::singular {

// printed discriminant polynomials in y = x^2
UPoly discriminant_simple();
UPoly discriminant_multigraph();
UPoly discriminant_biconnected();
UPoly discriminant_triangle_free();
// q(y) -> q(-y)
UPoly mirror(const UPoly& p);

// Point systems.  Unknowns are (x, D) resp. (x, E, L, s); the parameter is the
// branch variable U (quadrangulations) or V (irreducible triangulations).
PointSystem network_system(netsolve::NetworkKind kind);
PointSystem triangle_free_system(const trivariate::TriangleOptions& opt = {});
// triangle-marked networks at V = 1/3 with the marking variable u as parameter
PointSystem triangle_marked_system_in_u(const trivariate::TriangleOptions& opt = {});
// (x, E, L, s) from approximate (x, E)
std::vector<BigFloat> triangle_marked_seed(const BigFloat& x, const BigFloat& E);

struct NetworkExpansions {
  netsolve::NetworkKind kind;
  BigFloat rho;
  FloatSeries x, U, D, L, I, S, P, H;
  FloatSeries C, rooted, G;  // C, G unset for the biconnected kind; rooted = C* or B*
  FloatSeries residual;      // D - (L + S + P + H), should vanish
};

NetworkExpansions network_expansions(netsolve::NetworkKind kind, int order = 10);

struct TriangleFreeExpansions {
  BigFloat rho;
  FloatSeries x, V, E, L, s, D0, I, rooted;
};

TriangleFreeExpansions triangle_free_expansions(int order = 10);

// -(1/16) F_D at the singular point of the simple family, in the printed
// closed form, and D'(rho) from implicit differentiation of F
struct SimpleChecks {
  BigFloat F_D_closed, F_D_numeric, Dprime_from_F, Dprime_from_expansion;
};
SimpleChecks simple_checks();

struct FamilyConstants {
  Family family;
  BigFloat rho, gamma, amplitude;
  BigFloat rho_from_polynomial;
  bool modulus_unique = false;
  std::vector<std::pair<std::string, BigFloat>> details;

  const BigFloat& detail(const std::string& name) const;
};

// transfer for rooted (X^3-leading) and unrooted (X^5-leading) series
BigFloat amplitude_from_x3(const BigFloat& c3);
BigFloat amplitude_from_x5(const BigFloat& c5);

FamilyConstants family_constants(Family f, int order = 10);

}  // namespace cubic::singular
