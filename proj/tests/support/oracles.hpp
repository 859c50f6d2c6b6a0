// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, deliberately independent of the library's solver code:
// a matrix Edmonds-Karp for flow values, a random generator for desk-size
// instances, and a brute-force evaluator that reads a ModelIR directly.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "mfpc/instance.hpp"
#include "mfpc/milp.hpp"
#include "mfpc/rng.hpp"

namespace mfpc::test {

// Max-flow value by Edmonds-Karp on an adjacency matrix. Quadratic and
// proud of it; only the value is used, never the flow decomposition.
inline std::int64_t reference_max_flow_value(
    int n, int source, int sink,
    const std::vector<std::vector<std::int64_t>>& capacity) {
  std::vector<std::vector<std::int64_t>> residual = capacity;
  std::int64_t total = 0;
  for (;;) {
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
      const int v = queue.front();
      queue.pop_front();
      for (int w = 0; w < n; ++w)
        if (parent[static_cast<std::size_t>(w)] < 0 &&
            residual[static_cast<std::size_t>(v)][static_cast<std::size_t>(
                w)] > 0) {
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) return total;

    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (int w = sink; w != source; w = parent[static_cast<std::size_t>(w)])
      bottleneck = std::min(
          bottleneck, residual[static_cast<std::size_t>(
                          parent[static_cast<std::size_t>(w)])]
                              [static_cast<std::size_t>(w)]);
    for (int w = sink; w != source; w = parent[static_cast<std::size_t>(w)]) {
      const int v = parent[static_cast<std::size_t>(w)];
      residual[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] -=
          bottleneck;
      residual[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] +=
          bottleneck;
    }
    total += bottleneck;
  }
}

inline std::int64_t reference_max_flow_value(
    const Instance& inst, const std::vector<bool>& disabled = {}) {
  std::vector<std::vector<std::int64_t>> capacity(
      static_cast<std::size_t>(inst.node_count),
      std::vector<std::int64_t>(static_cast<std::size_t>(inst.node_count),
                                0));
  for (int a = 0; a < inst.arc_count(); ++a) {
    if (!disabled.empty() && disabled[static_cast<std::size_t>(a)]) continue;
    const Arc& arc = inst.arcs[static_cast<std::size_t>(a)];
    capacity[static_cast<std::size_t>(arc.tail)]
            [static_cast<std::size_t>(arc.head)] += arc.capacity;
  }
  return reference_max_flow_value(inst.node_count, inst.source, inst.sink,
                                  capacity);
}

// Random desk-size instance: n <= 10, m <= 30, w <= max_conflicts (<= 8 keeps
// solve_bruteforce comfortable). May be disconnected; that is part of the
// point.
inline Instance random_small_instance(SplitMix64& rng, int max_nodes = 10,
                                      int max_arcs = 30,
                                      int max_conflicts = 8) {
  Instance inst;
  inst.node_count =
      2 + static_cast<int>(uniform_below(rng, std::max(1, max_nodes - 1)));
  inst.source = 0;
  inst.sink = inst.node_count - 1;

  const int n = inst.node_count;
  std::vector<std::int64_t> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.push_back(static_cast<std::int64_t>(i) * n + j);
  const int max_m = std::min<int>(max_arcs, static_cast<int>(pairs.size()));
  const int m = 1 + static_cast<int>(uniform_below(
                        rng, static_cast<std::uint64_t>(max_m)));
  shuffle_prefix(pairs, static_cast<std::size_t>(m), rng);
  for (int a = 0; a < m; ++a) {
    const std::int64_t packed = pairs[static_cast<std::size_t>(a)];
    inst.arcs.push_back({static_cast<int>(packed / n),
                         static_cast<int>(packed % n),
                         1 + static_cast<std::int64_t>(uniform_below(rng, 10))});
  }

  if (m >= 2 && max_conflicts > 0) {
    std::vector<std::int64_t> arc_pairs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        arc_pairs.push_back(static_cast<std::int64_t>(i) * m + j);
    const int w = static_cast<int>(uniform_below(
        rng, std::min<std::uint64_t>(static_cast<std::uint64_t>(
                                         max_conflicts),
                                     arc_pairs.size()) +
                 1));
    shuffle_prefix(arc_pairs, static_cast<std::size_t>(w), rng);
    for (int p = 0; p < w; ++p) {
      const std::int64_t packed = arc_pairs[static_cast<std::size_t>(p)];
      inst.conflicts.push_back(
          {static_cast<int>(packed / m), static_cast<int>(packed % m)});
    }
  }
  return inst;
}

// Optimum of a build_model()-shaped ModelIR by brute force: enumerate the
// binary patterns over the x variables that appear in conflict rows (the
// others are free to be 1), check the conflict rows, and evaluate the
// continuous part -- a max flow over the activated arcs -- with the
// reference Edmonds-Karp. Everything is read from the model rows, not from
// the Instance, so this cross-checks build_model too.
inline std::int64_t model_bruteforce_optimum(const ModelIR& model) {
  const std::size_t m = model.variables.size() / 2;
  const int z_var = static_cast<int>(2 * m);

  // node topology from the conservation rows
  int node_count = 0;
  for (const Constraint& row : model.constraints)
    if (row.name.rfind("cons_", 0) == 0) ++node_count;
  std::vector<int> tail(m, -1), head(m, -1);
  int source = -1, sink = -1;
  for (int v = 0; v < node_count; ++v) {
    const Constraint& row = model.constraints[static_cast<std::size_t>(v)];
    for (const LinearTerm& term : row.terms) {
      if (term.var == z_var) {
        (term.coeff > 0 ? source : sink) = v;
      } else if (term.coeff > 0) {
        head[static_cast<std::size_t>(term.var)] = v;
      } else {
        tail[static_cast<std::size_t>(term.var)] = v;
      }
    }
  }

  // capacities from the linking rows, conflict pairs from the conf rows
  std::vector<std::int64_t> capacity(m, 0);
  std::vector<std::pair<int, int>> conflict_pairs;
  for (const Constraint& row : model.constraints) {
    if (row.name.rfind("link_", 0) == 0) {
      capacity[static_cast<std::size_t>(row.terms[0].var)] =
          -row.terms[1].coeff;
    } else if (row.name.rfind("conf_", 0) == 0) {
      conflict_pairs.push_back({row.terms[0].var - static_cast<int>(m),
                                row.terms[1].var - static_cast<int>(m)});
    }
  }

  std::vector<int> conflicted;
  {
    std::vector<bool> seen(m, false);
    for (const auto& [a, b] : conflict_pairs) {
      if (!seen[static_cast<std::size_t>(a)]) conflicted.push_back(a);
      seen[static_cast<std::size_t>(a)] = true;
      if (!seen[static_cast<std::size_t>(b)]) conflicted.push_back(b);
      seen[static_cast<std::size_t>(b)] = true;
    }
  }

  const int k = static_cast<int>(conflicted.size());
  std::int64_t best = -1;
  std::vector<bool> active(m, true);
  for (std::uint32_t pattern = 0; pattern < (1u << k); ++pattern) {
    for (int i = 0; i < k; ++i)
      active[static_cast<std::size_t>(conflicted[static_cast<std::size_t>(
          i)])] = (pattern >> i) & 1u;
    bool conflict_ok = true;
    for (const auto& [a, b] : conflict_pairs)
      if (active[static_cast<std::size_t>(a)] &&
          active[static_cast<std::size_t>(b)]) {
        conflict_ok = false;
        break;
      }
    if (!conflict_ok) continue;

    std::vector<std::vector<std::int64_t>> cap(
        static_cast<std::size_t>(node_count),
        std::vector<std::int64_t>(static_cast<std::size_t>(node_count), 0));
    for (std::size_t a = 0; a < m; ++a)
      if (active[a])
        cap[static_cast<std::size_t>(tail[a])]
           [static_cast<std::size_t>(head[a])] += capacity[a];
    best = std::max(best, reference_max_flow_value(node_count, source, sink,
                                                   cap));
  }
  return best;
}

}  // namespace mfpc::test
