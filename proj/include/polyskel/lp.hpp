#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyskel/geometry.hpp"
#include "polyskel/rational.hpp"

namespace polyskel {

// Feasibility problem over `num_vars` free real variables. Sign restrictions,
// when wanted, are ordinary constraints.
struct LPProblem {
  std::size_t num_vars = 0;
  std::vector<Hyperplane> constraints;
};

struct LPResult {
  bool feasible = false;
  // Present iff feasible; satisfies every constraint exactly.
  std::optional<std::vector<Rational>> witness;
  std::size_t pivots = 0;
};

// Exact phase-one simplex (auxiliary-variable start, Bland's rule) over the
// rationals. Throws std::invalid_argument if a constraint's length differs from
// num_vars, and std::logic_error if a computed witness fails re-substitution.
LPResult lp_feasible(const LPProblem& problem);

}  // namespace polyskel
