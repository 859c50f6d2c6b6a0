// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "mfpc/instance.hpp"

namespace mfpc {

inline constexpr int kDefaultGreedyRestarts = 16;

// Conflict-aware augmenting-path heuristic. Each restart repeatedly pushes
// bottleneck flow along a shortest (fewest-arc) residual s-t path that avoids
// arcs blocked by earlier activations; activating an arc permanently blocks
// its conflict partners for the rest of the restart, so the result is
// conflict-feasible by construction. Restart 0 breaks path ties by
// lexicographic arc-index sequence; later restarts use a seeded shuffle of
// the arc order. Returns the best restart, never worse than the zero flow.
// Deterministic in (seed, restarts).
FlowAssignment solve_greedy(const Instance& inst, std::uint64_t seed,
                            int restarts = kDefaultGreedyRestarts);

}  // namespace mfpc
