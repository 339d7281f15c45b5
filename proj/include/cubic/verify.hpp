#pragma once

// Self-checks behind `cubicplanar verify`.

#include <string>
#include <vector>

#include "cubic/trivariate.hpp"

namespace cubic::verify {

enum class Level { Quick, Full };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool all_pass() const;
};

// quick: oracle agreement for n <= 6 and the exact identities;
// full: oracle for n <= 8, identities to x^32, constants and moments.
// `triangle_options` lets a test run the suite against a modified system.
Report run(Level level, const trivariate::TriangleOptions& triangle_options = {});

}  // namespace cubic::verify
