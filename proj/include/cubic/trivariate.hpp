#pragma once

// Networks refined by the number of triangles incident with the root edge.
// D_i counts networks whose root edge lies on i triangles; the system is
// carried in the divided form D_i / u^i so that every series stays
// polynomial in u.  The triangle-free system is the same system at u = 0.

#include <map>
#include <utility>
#include <vector>

#include "cubic/series.hpp"

namespace cubic::trivariate {

enum class LoopVariant {
  Printed,    // (u-1) x^2/2 (x^2 (E-L) + u x^2 L + L^2)
  ProofText,  // (u-1) x^2/2 (x^2 (E-L) + u x^2 L / 2 + L^2 / 2)
};

// Networks whose root edge closes into a double edge, removed when passing
// from networks to vertex-rooted graphs.
enum class RootingForm {
  // x^2 (E - L) + u^2 x^2 L: the single-network parallel terms of P_0 and P_1
  ParallelTerms,
  // x^2 (D_0 + D_1 + D_2); gives negative counts from n = 6 on
  AllNetworks,
};

struct TriangleOptions {
  LoopVariant loop = LoopVariant::Printed;
  RootingForm rooting = RootingForm::ParallelTerms;
  // coefficient of u^2 x^2 L^2 in S_1; only changed to check that
  // verification notices a wrong system
  Rat p1_loop_weight = 1;  // coefficient of u^2 x^2 L in P1
};

struct TriangleBundle {
  int order = 0;
  BivarSeries E, L, I, D0, D1, D2;  // D1, D2 undivided
  BivarSeries rooted;     // C*(x, u), vertex-rooted connected graphs
  BivarSeries connected;  // C(x, u)
  int sweeps = 0;
};

struct TriangleFreeBundle {
  int order = 0;
  Series E, L, I, D0;
  Series rooted;     // F*
  Series connected;  // F
  Series all;        // exp(F)
  int sweeps = 0;
};

TriangleBundle solve_triangle_marked(int order, const TriangleOptions& opt = {});
TriangleFreeBundle solve_triangle_free(int order, const TriangleOptions& opt = {});

// (k, count) for vertex-rooted connected graphs on n vertices with k triangles
std::vector<std::pair<int, BigInt>> rooted_triangle_distribution(const TriangleBundle& b, int n);
// same, unrooted (divided by n)
std::vector<std::pair<int, BigInt>> triangle_distribution(const TriangleBundle& b, int n);
// exact mean number of triangles in connected graphs on n vertices
Rat mean_triangles(const TriangleBundle& b, int n);

// Marked triangulations evaluated at z = w, u = 1 + c s where w s = x^2:
// returned as the coefficients B_m(x) with t = sum_m B_m w^m.
std::vector<BivarSeries> t_substitution_coefficients(const BivarSeries& t, const UPoly& c, int order);

}  // namespace cubic::trivariate
