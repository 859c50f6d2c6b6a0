// SPDX-License-Identifier: Apache-2.0
#include "mfpc/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "mfpc/rng.hpp"

namespace mfpc {

std::int64_t GenParams::arc_target() const {
  return std::llround(arc_density * nodes * (nodes - 1));
}

std::int64_t GenParams::conflict_target() const {
  const double m = static_cast<double>(arc_target());
  return std::llround(conflict_density * m * (m - 1) / 2.0);
}

std::pair<std::int64_t, std::int64_t> GenParams::capacity_interval() const {
  return capacity_regime == 1 ? std::pair<std::int64_t, std::int64_t>{10, 15}
                              : std::pair<std::int64_t, std::int64_t>{15, 20};
}

std::string GenParams::id() const {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "mfpc_n%d_p%g_d%g_I%d", nodes,
                arc_density, conflict_density, capacity_regime);
  return buffer;
}

bool in_documented_grid(const GenParams& params) {
  const auto has = [](const auto& values, auto v) {
    return std::find(values.begin(), values.end(), v) != values.end();
  };
  return has(kGridNodes, params.nodes) &&
         has(kGridArcDensities, params.arc_density) &&
         has(kGridConflictDensities, params.conflict_density) &&
         has(kGridCapacityRegimes, params.capacity_regime);
}

Instance generate(const GenParams& params) {
  const int n = params.nodes;
  if (n < 2) throw std::invalid_argument("generate: need at least two nodes");
  if (params.arc_density <= 0.0 || params.arc_density > 1.0)
    throw std::invalid_argument("generate: arc density must be in (0, 1]");
  if (params.conflict_density < 0.0 || params.conflict_density > 1.0)
    throw std::invalid_argument(
        "generate: conflict density must be in [0, 1]");
  if (params.capacity_regime != 1 && params.capacity_regime != 2)
    throw std::invalid_argument("generate: capacity regime must be 1 or 2");

  const std::int64_t m = params.arc_target();
  const std::int64_t w = params.conflict_target();
  const std::int64_t all_ordered = static_cast<std::int64_t>(n) * (n - 1);
  if (m < 1 || m > all_ordered)
    throw std::invalid_argument("generate: arc target out of range");

  // Draw order is fixed: path length, path nodes, arcs, capacities,
  // conflicts. Changing it would change every seeded instance.
  SplitMix64 rng(params.seed);

  Instance inst;
  inst.node_count = n;
  inst.source = 0;
  inst.sink = n - 1;

  // Embedded simple s-t path, 2..4 arcs (1 when the graph is too small);
  // its arcs occupy indices 0..path_len-1.
  std::int64_t path_len = n > 2 ? 2 + static_cast<std::int64_t>(
                                          uniform_below(rng, 3))
                                : 1;
  path_len = std::min({path_len, static_cast<std::int64_t>(n) - 1, m});

  std::vector<int> interior(static_cast<std::size_t>(n > 2 ? n - 2 : 0));
  for (std::size_t i = 0; i < interior.size(); ++i)
    interior[i] = static_cast<int>(i) + 1;
  shuffle_prefix(interior, static_cast<std::size_t>(path_len - 1), rng);

  std::vector<int> path_nodes;
  path_nodes.push_back(inst.source);
  for (std::int64_t i = 0; i + 1 < path_len; ++i)
    path_nodes.push_back(interior[static_cast<std::size_t>(i)]);
  path_nodes.push_back(inst.sink);
  for (std::size_t i = 0; i + 1 < path_nodes.size(); ++i)
    inst.arcs.push_back({path_nodes[i], path_nodes[i + 1], 1});

  // Remaining arcs: uniform without replacement over the ordered pairs not
  // already used by the path.
  std::vector<std::int64_t> pair_pool;
  pair_pool.reserve(static_cast<std::size_t>(all_ordered - path_len));
  std::vector<bool> on_path(static_cast<std::size_t>(n) *
                                static_cast<std::size_t>(n),
                            false);
  for (const Arc& arc : inst.arcs)
    on_path[static_cast<std::size_t>(arc.tail) * n + arc.head] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (on_path[static_cast<std::size_t>(i) * n + j]) continue;
      pair_pool.push_back(static_cast<std::int64_t>(i) * n + j);
    }
  shuffle_prefix(pair_pool, static_cast<std::size_t>(m - path_len), rng);
  for (std::int64_t i = 0; i < m - path_len; ++i) {
    const std::int64_t packed = pair_pool[static_cast<std::size_t>(i)];
    inst.arcs.push_back({static_cast<int>(packed / n),
                         static_cast<int>(packed % n), 1});
  }

  const auto [cap_lo, cap_hi] = params.capacity_interval();
  for (Arc& arc : inst.arcs)
    arc.capacity = cap_lo + static_cast<std::int64_t>(uniform_below(
                                rng, static_cast<std::uint64_t>(
                                         cap_hi - cap_lo + 1)));

  // Conflicts: uniform without replacement over unordered arc pairs, never
  // between two embedded-path arcs (they are the first path_len indices).
  const std::int64_t protected_pairs = path_len * (path_len - 1) / 2;
  const std::int64_t eligible = m * (m - 1) / 2 - protected_pairs;
  if (w > eligible)
    throw std::invalid_argument(
        "generate: conflict target exceeds the eligible arc pairs after "
        "protecting the embedded path");

  inst.conflicts.reserve(static_cast<std::size_t>(w));
  // The whole benchmark grid fits the pool strategy; rejection sampling
  // covers ad-hoc instances whose pair population would not fit in memory.
  constexpr std::int64_t kPoolLimit = 16'000'000;
  if (eligible <= kPoolLimit) {
    std::vector<std::int64_t> conflict_pool;
    conflict_pool.reserve(static_cast<std::size_t>(eligible));
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = i + 1; j < m; ++j) {
        if (i < path_len && j < path_len) continue;
        conflict_pool.push_back(i * m + j);
      }
    shuffle_prefix(conflict_pool, static_cast<std::size_t>(w), rng);
    for (std::int64_t i = 0; i < w; ++i) {
      const std::int64_t packed = conflict_pool[static_cast<std::size_t>(i)];
      inst.conflicts.push_back(
          {static_cast<int>(packed / m), static_cast<int>(packed % m)});
    }
  } else {
    if (w > eligible / 2)
      throw std::invalid_argument(
          "generate: conflict target too dense to sample at this size");
    std::unordered_set<std::int64_t> drawn;
    drawn.reserve(static_cast<std::size_t>(w) * 2);
    while (static_cast<std::int64_t>(inst.conflicts.size()) < w) {
      const auto i = static_cast<std::int64_t>(
          uniform_below(rng, static_cast<std::uint64_t>(m)));
      const auto j = static_cast<std::int64_t>(
          uniform_below(rng, static_cast<std::uint64_t>(m)));
      if (i == j) continue;
      if (i < path_len && j < path_len) continue;
      const std::int64_t lo = std::min(i, j), hi = std::max(i, j);
      if (!drawn.insert(lo * m + hi).second) continue;
      inst.conflicts.push_back({static_cast<int>(lo), static_cast<int>(hi)});
    }
  }
  return inst;
}

std::vector<GenParams> grid_params(std::uint64_t master_seed) {
  SplitMix64 seeds(master_seed);
  std::vector<GenParams> grid;
  grid.reserve(kGridNodes.size() * kGridArcDensities.size() *
               kGridConflictDensities.size() * kGridCapacityRegimes.size());
  for (int n : kGridNodes)
    for (double p : kGridArcDensities)
      for (double d : kGridConflictDensities)
        for (int regime : kGridCapacityRegimes)
          grid.push_back({n, p, d, regime, seeds.next()});
  return grid;
}

void for_each_grid_instance(
    std::uint64_t master_seed,
    const std::function<void(const GenParams&, const Instance&)>& visit) {
  for (const GenParams& params : grid_params(master_seed))
    visit(params, generate(params));
}

}  // namespace mfpc
