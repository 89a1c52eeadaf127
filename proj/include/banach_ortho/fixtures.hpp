#pragma once

#include <string>
#include <vector>

#include "banach_ortho/pairing.hpp"

namespace banach_ortho {

// Bundled example operators with exactly reproducible claims. Names:
//   prop-basic-c2        C^2 operator with columns (7i, 1), (2, 3i)
//   direction-example    C^2 operator with columns (0, i), (1, 3i)
//   nonbijective-l22     real l_2^2 operator with columns (1, -1), (2, -2)
//   lemma-counterexample real l_2^2 operator, columns (0, 1), (1/sqrt2, 1/sqrt2)

struct FixtureClaim {
  std::string description;
  double error = 0.0;  // measured deviation from the claimed value
  bool pass = false;
};

struct FixtureResult {
  std::string name;
  std::vector<FixtureClaim> claims;
  bool pass = false;
};

const std::vector<std::string>& fixture_names();

// The operator behind a fixture, for reuse in tests and suites.
PairingOperator fixture_operator(const std::string& name);

// Replays every claim of one fixture; each claim must hold to 1e-12.
FixtureResult run_fixture(const std::string& name);

std::vector<FixtureResult> run_all_fixtures();

}  // namespace banach_ortho
