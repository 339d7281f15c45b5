#include "cubic/assemble.hpp"
#include "doctest.h"
#include "reference_counts.hpp"

using namespace cubic;

TEST_CASE("simple graph counts") {
  auto c = assemble::census(Family::Connected, 12);
  auto g = assemble::census(Family::All, 12);
  auto b = assemble::census(Family::Biconnected, 12);
  CHECK(c.at(2) == 0);
  CHECK(c.at(4) == 1);
  CHECK(c.at(6) == 60);
  CHECK(c.at(8) == 13440);
  CHECK(g.at(4) == 1);
  CHECK(g.at(6) == 60);
  // two disjoint K4s: choose the 4 labels of the part containing vertex 1
  CHECK(g.at(8) == c.at(8) + 35);
  CHECK(b.at(8) == 13440);
  for (int n = 2; n <= 12; n += 2) {
    CHECK(g.at(n) >= c.at(n));
    CHECK(c.at(n) >= b.at(n));
  }
}

TEST_CASE("rooting identity") {
  auto nb = netsolve::solve_networks(netsolve::NetworkKind::Simple, 24);
  Series C = assemble::connected_by_dissymmetry(nb);
  CHECK(C.x_derivative() == *nb.rooted);
  CHECK(assemble::connected_by_rooting(nb) == C);
  Series G = assemble::all_graphs(C);
  CHECK(log1(G) == C);
}

TEST_CASE("multigraph table") {
  auto h = assemble::census(Family::Multigraph, 30);
  auto hc = assemble::census(Family::ConnectedMultigraph, 30);
  for (const auto& row : reference::table) {
    CHECK(h.at(row.n) == BigInt(row.multigraphs));
    CHECK(hc.at(row.n) <= h.at(row.n));
  }
  CHECK(hc.at(2) == 2);
  CHECK(hc.at(4) == 35);
}

TEST_CASE("triangle-free table") {
  auto t = assemble::census(Family::TriangleFree, 30);
  auto f = assemble::census(Family::ConnectedTriangleFree, 30);
  for (const auto& row : reference::table) CHECK(t.at(row.n) == BigInt(row.triangle_free));
  CHECK(f.at(8) == 840);
  CHECK(f.at(10) == 181440);
}

TEST_CASE("extraction refuses non-integral counts") {
  Series s(4);
  s[2] = Rat(1, 3);
  CHECK_THROWS_AS(assemble::extract_counts(s, Family::All), std::logic_error);
  Series odd(3);
  odd[3] = 1;
  CHECK_THROWS_AS(assemble::extract_counts(odd, Family::All), std::logic_error);
}

TEST_CASE("table export") {
  auto h = assemble::census(Family::Multigraph, 6);
  CHECK(h.to_csv() == "n,count\n2,2\n4,47\n6,4710\n");
  auto j = h.to_json();
  CHECK(j["family"] == "multigraph");
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["count"] == "4710");
  CHECK(h.max_n() == 6);
  CHECK_THROWS(h.at(8));
}
