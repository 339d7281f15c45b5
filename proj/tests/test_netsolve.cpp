#include "cubic/mapcount.hpp"
#include "cubic/netsolve.hpp"
#include "doctest.h"

using namespace cubic;
using netsolve::NetworkKind;

namespace {

Rat count_of(const Series& rooted, int n) { return rooted[n] * Rat(factorial(n)) / n; }

}  // namespace

TEST_CASE("simple networks") {
  auto b = netsolve::solve_networks(NetworkKind::Simple, 16);
  REQUIRE(b.rooted);
  const Series& C = *b.rooted;
  CHECK(C[4] == Rat(1, 6));
  CHECK(C[6] == Rat(1, 2));
  CHECK(C.is_even());
  for (int n = 2; n <= 16; n += 2) {
    Rat c = count_of(C, n);
    CHECK(is_integer(c));
    CHECK(c >= 0);
  }
}

TEST_CASE("biconnected networks") {
  auto b = netsolve::solve_networks(NetworkKind::Biconnected, 16);
  auto s = netsolve::solve_networks(NetworkKind::Simple, 16);
  REQUIRE(b.rooted);
  CHECK((*b.rooted)[4] == Rat(1, 6));
  CHECK((*b.rooted)[6] == Rat(1, 2));
  for (int n = 2; n <= 16; n += 2) CHECK((*b.rooted)[n] <= (*s.rooted)[n]);
  CHECK(b.L.is_zero());
  CHECK(b.D == b.S + b.P + b.H);
}

TEST_CASE("multigraph networks") {
  auto b = netsolve::solve_networks(NetworkKind::Multigraph, 12);
  CHECK(b.P[2] == 1);  // the 3-bond
  CHECK(b.L[2] == 1);  // loop at the root edge
  for (const Series* s : {&b.D, &b.L, &b.I, &b.S, &b.P, &b.H}) CHECK(s->is_even());
  CHECK(!b.rooted);
}

TEST_CASE("re-substitution") {
  for (auto kind : {NetworkKind::Simple, NetworkKind::Multigraph, NetworkKind::Biconnected}) {
    int N = 20;
    auto b = netsolve::solve_networks(kind, N);
    Series x2 = x_power<Rat>(2, N);
    Series half = Series::constant(Rat(1, 2), N);
    const bool multi = kind == NetworkKind::Multigraph;
    Series P = x2 * b.D + x2 * b.D * b.D * Rat(1, 2);
    if (multi) P += x2;
    CHECK(b.P == P);
    CHECK(b.H == netsolve::polyhedral_networks(b.D, mapcount::triangulations(N / 2)));
    if (kind == NetworkKind::Biconnected) {
      CHECK(b.S == b.D * (b.P + b.H));
      continue;
    }
    CHECK(b.D == b.L + b.S + b.P + b.H);
    CHECK(b.S == b.D * (b.L + b.P + b.H));
    CHECK(mul_to(b.L, b.L, N + 2) == b.I.shift_up(2));
    // the raw forms: D - L = S + P + H with S = D^2/(1+D)
    Series one = Series::constant(1, N);
    CHECK((b.D - b.L - b.P - b.H) * (one + b.D) == b.D * b.D);
  }
}

TEST_CASE("closed form of L") {
  int N = 20;
  Series x2 = x_power<Rat>(2, N), x4 = x_power<Rat>(4, N), one = Series::constant(1, N);
  auto s = netsolve::solve_networks(NetworkKind::Simple, N);
  CHECK(s.L == one + x2 / Rat(2) - sqrt1(x4 / Rat(4) + one - x2 * (s.D - one)));
  auto m = netsolve::solve_networks(NetworkKind::Multigraph, N);
  CHECK(m.L == one - x2 / Rat(2) - sqrt1(x4 / Rat(4) + one - x2 * (m.D + Rat(3) * one)));
}

TEST_CASE("single-equation form") {
  int N = 20;
  Series x2 = x_power<Rat>(2, N), x4 = x_power<Rat>(4, N), one = Series::constant(1, N);
  Series T = mapcount::triangulations(N / 2);
  for (auto kind : {NetworkKind::Simple, NetworkKind::Multigraph}) {
    auto b = netsolve::solve_networks(kind, N);
    Series inner = kind == NetworkKind::Simple ? x2 * (b.D - one) : x2 * (b.D + Rat(3) * one);
    Series root = sqrt1(x4 / Rat(4) + one - inner);
    Series w = x2 * pow_int(one + b.D, 3);
    Series lhs = (one + b.D) * root - compose(T, w).truncate(N) / Rat(2) - one;
    CHECK(lhs == Series(N));
  }
}
