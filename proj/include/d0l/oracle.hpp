#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "d0l/lsystem.hpp"
#include "d0l/word.hpp"

namespace d0l {

struct OracleLimits {
  /// Search nodes visited before InstanceTooLarge is raised.
  std::uint64_t node_budget = 50'000'000;
};

/// Direct backtracking inference over the split points of every w_{i+1}
/// into |w_i| blocks. Shares no code with the graph pipeline; used as the
/// reference verdict in tests. nullopt means infeasible.
std::optional<D0LSystem> oracle_infer(const WordSequence& theta, OracleLimits limits = {});

/// Every compatible production map over the symbols of w_0..w_{m-1}, in
/// search order, up to max_solutions.
std::vector<D0LSystem> oracle_enumerate(const WordSequence& theta, std::size_t max_solutions,
                                        OracleLimits limits = {});

}  // namespace d0l
