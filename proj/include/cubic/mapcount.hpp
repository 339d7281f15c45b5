#pragma once

// Exact series for rooted maps.  z counts vertices minus two throughout.

#include "cubic/series.hpp"

namespace cubic::mapcount {

// U = z (1 - U)^{-3}
Series quadrangulation_u(int order);
// Lagrange inversion: [z^n] U = C(4n-2, n-1) / n
Series quadrangulation_u_closed(int order);
// rooted triangulations, T = U (1 - 2U)
Series triangulations(int order);

// V = z (1 - V)^{-2}
Series irreducible_v(int order);
// [z^n] V = C(3n-2, n-1) / n
Series irreducible_v_closed(int order);
// 4-connected triangulations, T4 = z + V (V - 1) / (V + 1)^2 - z^2
Series four_connected(int order);

// Triangulations with u marking inner vertices of degree 3, from
//   t = T4(z (1 + t/z)^2) / (1 + t/z) + z^2 ((1 + t/z)^3 + u - 1).
BivarSeries triangulations_marked(int order);

// Unrooted 3-connected cubic planar graphs Mbar(x, y) after substituting
// w = x^2 y^3:  -(4U(w)^2 + 2U(w) + 3 log(1 - U(w)) + w) / 12.
// `u_of_z` must be quadrangulation_u of order >= w.order() / valuation(w).
Series mbar_substitution(const Series& w, const Series& u_of_z);

}  // namespace cubic::mapcount
