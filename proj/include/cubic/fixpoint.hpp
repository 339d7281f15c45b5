#pragma once

// Gauss-Seidel iteration of a well-founded system X_i = F_i(X) of truncated
// series.  Rules are applied in declaration order, each seeing the values
// already updated in the same sweep.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/series.hpp"

namespace cubic {

class IllFoundedSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
using SeriesEnv = std::map<std::string, S>;

template <class S>
struct FixpointRule {
  std::string name;
  std::function<S(const SeriesEnv<S>&, int order)> rhs;
};

struct FixpointStats {
  int sweeps = 0;
};

// Iterates from `start` (missing names start at zero) until a full sweep
// changes nothing.  Throws IllFoundedSystem after order + 2 sweeps.
template <class S>
SeriesEnv<S> solve_fixpoint(const std::vector<FixpointRule<S>>& rules, int order, SeriesEnv<S> start = {},
                            FixpointStats* stats = nullptr) {
  SeriesEnv<S> env;
  for (const auto& r : rules) {
    if (env.count(r.name)) throw std::invalid_argument("duplicate rule for " + r.name);
    auto it = start.find(r.name);
    env[r.name] = it == start.end() ? S(order) : it->second.padded(order);
  }
  int max_sweeps = order + 2;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bool changed = false;
    for (const auto& r : rules) {
      S next = r.rhs(env, order);
      if (next.order() < order)
        throw PrecisionError("rule " + r.name + " returned order " + std::to_string(next.order()) +
                             " < " + std::to_string(order));
      if (next.order() > order) next = next.truncate(order);
      S& cur = env[r.name];
      if (!(next == cur)) {
        changed = true;
        cur = std::move(next);
      }
    }
    if (!changed) {
      if (stats) stats->sweeps = sweep;
      return env;
    }
  }
  throw IllFoundedSystem("no fixpoint after " + std::to_string(max_sweeps) + " sweeps at order " +
                         std::to_string(order));
}

// Same fixpoint, reached by solving at orders step, 2 step, ..., order and
// warm-starting each stage from the previous one.
template <class S>
SeriesEnv<S> solve_fixpoint_progressive(const std::vector<FixpointRule<S>>& rules, int order, int step = 2,
                                        FixpointStats* stats = nullptr) {
  SeriesEnv<S> env;
  int total = 0;
  for (int n = std::min(step, order);; n = std::min(n + step, order)) {
    FixpointStats st;
    env = solve_fixpoint(rules, n, std::move(env), &st);
    total += st.sweeps;
    if (n == order) break;
  }
  if (stats) stats->sweeps = total;
  return env;
}

}  // namespace cubic
