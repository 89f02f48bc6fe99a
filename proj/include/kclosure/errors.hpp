#pragma once

#include <stdexcept>
#include <string>

namespace kclosure {

// Two permutations or a group and a point set disagree on degree.
struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A guard (tuple count, enumeration size, oracle/backtrack degree, max k)
// would be exceeded. Callers that sweep a catalog treat this as "skip".
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sylow machinery was applied to a group that is not nilpotent.
struct NotNilpotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orbit grids of a Sylow subgroup and its complement failed to mesh.
// Cannot happen for transitive nilpotent input; reaching it means the
// preconditions were bypassed or there is a bug upstream.
struct DecompositionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The Sylow-split closure was requested for k < 2, where the split is unsound.
struct KLessThanTwo : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Cross-validation inside an algorithm failed; always a bug, never bad input.
struct InternalContradiction : std::logic_error {
  using std::logic_error::logic_error;
};

// Cycle notation or group spec text could not be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A block list is not permuted setwise by the group.
struct InvalidBlockSystem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace kclosure
