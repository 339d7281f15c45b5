#pragma once

// Cubic networks: D (all), L (loop), I (isthmus), S (series), P (parallel),
// H (polyhedral).  x marks vertices; the poles are unlabeled.

#include <optional>
#include <string>

#include "cubic/series.hpp"

namespace cubic {

enum class Family {
  Connected,
  All,
  Biconnected,
  ConnectedMultigraph,
  Multigraph,
  ConnectedTriangleFree,
  TriangleFree,
};

std::string family_name(Family f);
Family parse_family(const std::string& s);
bool family_is_exponential(Family f);  // counts all (possibly disconnected) graphs

}  // namespace cubic

namespace cubic::netsolve {

enum class NetworkKind { Simple, Multigraph, Biconnected };

NetworkKind kind_for(Family f);

struct NetworkBundle {
  NetworkKind kind;
  int order = 0;
  Series D, L, I, S, P, H;
  // vertex-rooted connected graphs (simple kind: C*, biconnected kind: B*)
  std::optional<Series> rooted;
  // U(z), kept for the 3-connected term of the unrooted assembly
  Series u_of_z;
  int sweeps = 0;
};

NetworkBundle solve_networks(NetworkKind kind, int order);

// H = (T(w) - w) / (2 (1 + D)) with w = x^2 (1 + D)^3
Series polyhedral_networks(const Series& D, const Series& t_of_z);

}  // namespace cubic::netsolve
