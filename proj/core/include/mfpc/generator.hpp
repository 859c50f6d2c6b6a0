// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mfpc/instance.hpp"

namespace mfpc {

inline constexpr std::array<int, 5> kGridNodes{40, 50, 60, 70, 80};
inline constexpr std::array<double, 4> kGridArcDensities{0.3, 0.4, 0.5, 0.6};
inline constexpr std::array<double, 4> kGridConflictDensities{0.3, 0.4, 0.5,
                                                              0.6};
inline constexpr std::array<int, 2> kGridCapacityRegimes{1, 2};

// Benchmark-grid parameters. Arc density p and conflict density d are ratios:
// m = round(p * n * (n-1)) arcs out of all ordered pairs and
// w = round(d * m * (m-1) / 2) conflict pairs out of all unordered arc pairs.
// Capacity regime 1 draws capacities uniformly from [10, 15], regime 2 from
// [15, 20], both ends inclusive.
struct GenParams {
  int nodes = 40;
  double arc_density = 0.3;
  double conflict_density = 0.3;
  int capacity_regime = 1;
  std::uint64_t seed = 0;

  std::int64_t arc_target() const;
  std::int64_t conflict_target() const;  // from arc_target()
  std::pair<std::int64_t, std::int64_t> capacity_interval() const;

  // "mfpc_n40_p0.3_d0.3_I1" -- the grid file stem.
  std::string id() const;
};

// True when every field sits on the documented benchmark grid. Off-grid
// values are still generated (ad-hoc experiments); callers decide whether
// to warn.
bool in_documented_grid(const GenParams& params);

// Deterministic in params.seed. The instance uses source 0 and sink n-1 and
// embeds a random simple s-t path as its first arcs; no conflict is placed
// between two embedded-path arcs, so the path carries its bottleneck as a
// certified non-zero feasible flow. Throws std::invalid_argument on
// unusable parameters or when the conflict target exceeds the pairs left
// after protecting the path.
Instance generate(const GenParams& params);

// The 160 grid combinations in fixed order (n, then p, then d, then I),
// instance seeds drawn from SplitMix64(master_seed) in that order.
std::vector<GenParams> grid_params(std::uint64_t master_seed);

// Generates the full grid one instance at a time (the whole grid does not
// fit in memory comfortably) and hands each to `visit`.
void for_each_grid_instance(
    std::uint64_t master_seed,
    const std::function<void(const GenParams&, const Instance&)>& visit);

}  // namespace mfpc
