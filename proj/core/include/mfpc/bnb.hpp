// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mfpc/instance.hpp"

namespace mfpc {

enum class SolveStatus {
  optimal,             // lower == upper, search closed
  feasible,            // limits expired; bounds are valid but not closed
  infeasible_nonzero,  // reserved: no solution with positive flow exists
};

std::string_view to_string(SolveStatus status);

/// Branch-and-bound state: arcs forced to zero flow plus the relaxation
/// bound (max flow with `forbidden` disabled) computed at creation.
struct SearchNode {
  std::vector<int> forbidden;
  std::int64_t bound = 0;
  int depth = 0;
  std::uint64_t seq = 0;
};

struct SolveOutcome {
  FlowAssignment best;  // incumbent; always passes check_feasible
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  SolveStatus status = SolveStatus::feasible;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  std::chrono::milliseconds time_to_best{0};  // first time the final
                                              // incumbent value was reached
  std::vector<std::int64_t> incumbent_values;  // improvement trace
};

// Exact solver. Relaxation at a node is the classical max flow with the
// forbidden arcs disabled; a node whose relaxed flow violates no conflict
// pair closes with that flow as an incumbent candidate, otherwise the most
// violated pair is branched by forbidding one arc per child. Nodes are
// processed best-bound-first (ties: deeper, then insertion order) and pruned
// when their bound cannot beat the incumbent. The incumbent is seeded with
// solve_greedy before the search. Hitting a limit is a status, not an error:
// the outcome then carries the proven (lower, upper) interval.
// Single-threaded and deterministic.
SolveOutcome solve_bnb(
    const Instance& inst, std::chrono::milliseconds time_limit,
    std::optional<std::uint64_t> node_limit = std::nullopt);

inline constexpr int kBruteforceConflictArcLimit = 20;

// Independent oracle: enumerates every subset T of the conflict-involved
// arcs S that is independent in the conflict graph and takes the best
// max flow with S \ T disabled. Always returns status optimal.
// nodes_explored counts evaluated subsets. Throws std::invalid_argument when
// |S| exceeds kBruteforceConflictArcLimit.
SolveOutcome solve_bruteforce(const Instance& inst);

// The violated conflict pair (both arcs positive in `relaxed`, neither
// forbidden) maximizing min(flow of the two arcs); ties go to the smallest
// pair index. Throws std::invalid_argument when no pair is violated.
int select_branch_pair(const Instance& inst, const FlowAssignment& relaxed,
                       std::span<const int> forbidden);

}  // namespace mfpc
