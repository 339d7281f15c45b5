#include "cubic/moments.hpp"
#include "cubic/roots.hpp"
#include "cubic/singular.hpp"
#include "doctest.h"

using namespace cubic;
using namespace cubic::singular;

namespace {

double d(const BigFloat& x) { return to_double(x); }

}  // namespace

TEST_CASE("discriminant polynomials") {
  CHECK(mirror(discriminant_simple()) == discriminant_multigraph());
  CHECK(mirror(mirror(discriminant_biconnected())) == discriminant_biconnected());
  CHECK(discriminant_simple().degree() == 6);
  CHECK(discriminant_biconnected().degree() == 3);
  WorkingPrecision wp;
  auto r = smallest_positive_root(discriminant_simple());
  CHECK(d(sqrt(r.root)) == doctest::Approx(0.319225).epsilon(1e-6));
  CHECK(r.unique_modulus);
  auto rb = smallest_positive_root(discriminant_biconnected());
  CHECK(d(sqrt(rb.root)) == doctest::Approx(0.319523).epsilon(1e-6));
  auto rm = smallest_positive_root(discriminant_multigraph());
  CHECK(d(sqrt(rm.root)) == doctest::Approx(0.250907).epsilon(1e-6));
}

TEST_CASE("root finder") {
  WorkingPrecision wp;
  // (y - 1)(y - 2)(y + 3) = y^3 - 7y + 6
  UPoly p{Rat(6), Rat(-7), Rat(0), Rat(1)};
  auto roots = all_roots(p);
  CHECK(roots.size() == 3);
  for (const auto& z : roots) CHECK(d(abs(z.im)) < 1e-40);
  auto r = smallest_positive_root(p);
  CHECK(d(abs(r.root - 1)) < 1e-60);
  CHECK(d(eval(p, BigFloat(2))) == 0);
  CHECK(d(eval_derivative(p, BigFloat(1))) == -4);
  // y^2 + 1 has no positive root
  CHECK_THROWS(smallest_positive_root(UPoly{Rat(1), Rat(0), Rat(1)}));
}

TEST_CASE("precision scope") {
  unsigned before = BigFloat::default_precision();
  {
    PrecisionScope s(512);
    CHECK(precision_scope_active());
    WorkingPrecision nested;  // must not override
    CHECK(BigFloat::default_precision() >= 150);
  }
  CHECK(BigFloat::default_precision() == before);
}

TEST_CASE("network expansions") {
  auto e = network_expansions(netsolve::NetworkKind::Simple);
  CHECK(d(e.rho) == doctest::Approx(0.31922461).epsilon(1e-8));
  for (int k = 0; k <= e.residual.order(); ++k) CHECK(d(abs(e.residual[k])) < 1e-40);
  CHECK(d(e.D[0]) == doctest::Approx(0.011526).epsilon(1e-5));
  CHECK(d(e.D[1]) == 0);
  auto sc = simple_checks();
  CHECK(d(abs(sc.Dprime_from_F - sc.Dprime_from_expansion)) < 1e-30);
  CHECK(d(abs(sc.F_D_closed - sc.F_D_numeric)) < 1e-30);
}

TEST_CASE("family constants") {
  auto S = family_constants(Family::Connected);
  CHECK(d(S.gamma) == doctest::Approx(3.132591).epsilon(1e-7));
  CHECK(d(S.amplitude) == doctest::Approx(0.060973).epsilon(1e-5));
  CHECK(d(S.detail("C*1")) == 0);
  CHECK(d(abs(S.detail("C3"))) < 1e-30);
  CHECK(d(S.detail("p")) == doctest::Approx(0.999397).epsilon(1e-6));
  CHECK(d(abs(S.rho - S.rho_from_polynomial)) < 1e-30);
  auto B = family_constants(Family::Biconnected);
  CHECK(d(B.gamma) == doctest::Approx(3.129666).epsilon(1e-7));
  CHECK(d(abs(B.detail("b") - B.detail("b printed form"))) < 1e-20);
  auto M = family_constants(Family::Multigraph);
  CHECK(d(M.detail("p_m")) == doctest::Approx(0.931778).epsilon(1e-6));
  CHECK(d(abs(M.detail("C3"))) < 1e-30);
  CHECK_THROWS(M.detail("no such constant"));
  // the connected family shares rho and gets the amplitude from C5
  auto C = family_constants(Family::All);
  CHECK(d(abs(C.rho - S.rho)) < 1e-40);
}

TEST_CASE("amplitudes") {
  BigFloat g32 = gamma_minus_three_halves(), g52 = gamma_minus_five_halves();
  CHECK(d(g32) == doctest::Approx(4 * std::sqrt(M_PI) / 3));
  CHECK(d(g52) == doctest::Approx(-8 * std::sqrt(M_PI) / 15));
  CHECK(d(amplitude_from_x3(g32)) == doctest::Approx(2));
  CHECK(d(amplitude_from_x5(g52)) == doctest::Approx(2));
}

TEST_CASE("triangle moments") {
  auto tm = triangle_moments();
  CHECK(d(tm.printed_implicit.d1) == doctest::Approx(-0.0389371919).epsilon(1e-9));
  CHECK(d(tm.printed_implicit.d2) == doctest::Approx(0.0229417852).epsilon(1e-9));
  CHECK(d(tm.disagreement) < 1e-8);
  CHECK(d(tm.moments.mu) == doctest::Approx(0.121974).epsilon(1e-5));
  CHECK(d(tm.moments.lambda) == doctest::Approx(0.064985).epsilon(1e-5));
  trivariate::TriangleOptions proof;
  proof.loop = trivariate::LoopVariant::ProofText;
  auto pt = triangle_moments(proof);
  CHECK(d(pt.full_implicit.d1) == doctest::Approx(-0.0389364095).epsilon(1e-8));
  CHECK(d(pt.disagreement) > 1e-8);
  trivariate::TriangleOptions corrupt;
  corrupt.p1_loop_weight = 2;
  CHECK(d(triangle_moments(corrupt).disagreement) > 1e-8);
  auto m = moments_from_rho(BigFloat(2), BigFloat(-2), BigFloat(0));
  CHECK(d(m.mu) == 1);
  CHECK(d(m.lambda) == 2);
}

TEST_CASE("cherries and bricks") {
  for (int h : {6, 8, 12}) {
    auto c = cherry_closed_form(h, 1);
    auto n = marked_moments({Marking::Cherry, h, 1});
    CHECK(d(abs(c.mu - n.moments.mu)) < 1e-12);
    CHECK(d(abs(c.lambda - n.moments.lambda)) < 1e-12);
    CHECK(d(c.lambda) > 0);
  }
  auto lit = cherry_closed_form(6, 1, true);
  CHECK(d(abs(lit.mu - cherry_closed_form(6, 1).mu)) > 1e-6);
  for (int b : {4, 6, 10}) {
    auto c = brick_closed_form(b, 2);
    auto n = marked_moments({Marking::Brick, b, 2});
    CHECK(d(abs(c.mu - n.moments.mu)) < 1e-12);
    CHECK(d(n.moments.lambda) > 0);
    CHECK(d(abs(n.implicit.d1 - n.central.d1)) < 1e-8);
  }
  auto k4 = marked_moments({Marking::K4Minus, 4, k4_minus_aut});
  CHECK(d(k4.moments.mu) == doctest::Approx(0.004529).epsilon(1e-3));
  CHECK(d(k4.moments.lambda) == doctest::Approx(0.004343).epsilon(1e-3));
}
