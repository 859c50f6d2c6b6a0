// SPDX-License-Identifier: Apache-2.0
#include "mfpc/bnb.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "mfpc/greedy.hpp"
#include "mfpc/max_flow.hpp"

namespace mfpc {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::feasible:
      return "feasible";
    case SolveStatus::infeasible_nonzero:
      return "infeasible-nonzero";
  }
  return "feasible";
}

int select_branch_pair(const Instance& inst, const FlowAssignment& relaxed,
                       std::span<const int> forbidden) {
  std::vector<bool> off(inst.arcs.size(), false);
  for (int a : forbidden) off[static_cast<std::size_t>(a)] = true;

  int best_pair = -1;
  std::int64_t best_min = 0;
  for (int p = 0; p < static_cast<int>(inst.conflicts.size()); ++p) {
    const ConflictPair& pair = inst.conflicts[static_cast<std::size_t>(p)];
    if (off[static_cast<std::size_t>(pair.first)] ||
        off[static_cast<std::size_t>(pair.second)])
      continue;
    const std::int64_t fa = relaxed.flow[static_cast<std::size_t>(pair.first)];
    const std::int64_t fb =
        relaxed.flow[static_cast<std::size_t>(pair.second)];
    if (fa <= 0 || fb <= 0) continue;
    const std::int64_t m = std::min(fa, fb);
    if (m > best_min) {
      best_min = m;
      best_pair = p;
    }
  }
  if (best_pair < 0)
    throw std::invalid_argument("select_branch_pair: no violated pair");
  return best_pair;
}

namespace {

// Seed for the root incumbent; fixed so runs are reproducible.
constexpr std::uint64_t kRootHeuristicSeed = 1;

int first_violated_pair(const Instance& inst, const FlowAssignment& flow) {
  for (int p = 0; p < static_cast<int>(inst.conflicts.size()); ++p) {
    const ConflictPair& pair = inst.conflicts[static_cast<std::size_t>(p)];
    if (flow.flow[static_cast<std::size_t>(pair.first)] > 0 &&
        flow.flow[static_cast<std::size_t>(pair.second)] > 0)
      return p;
  }
  return -1;
}

struct NodeOrder {
  // max-heap: highest bound first, then deepest, then earliest created.
  bool operator()(const SearchNode& a, const SearchNode& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

std::vector<int> with_arc(const std::vector<int>& forbidden, int arc) {
  std::vector<int> result;
  result.reserve(forbidden.size() + 1);
  auto it = std::lower_bound(forbidden.begin(), forbidden.end(), arc);
  result.insert(result.end(), forbidden.begin(), it);
  result.push_back(arc);
  result.insert(result.end(), it, forbidden.end());
  return result;
}

}  // namespace

SolveOutcome solve_bnb(const Instance& inst,
                       std::chrono::milliseconds time_limit,
                       std::optional<std::uint64_t> node_limit) {
  const auto start = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
  };
  const auto out_of_time = [&] { return elapsed_ms() >= time_limit; };

  SolveOutcome outcome;
  outcome.best = solve_greedy(inst, kRootHeuristicSeed);
  outcome.lower = outcome.best.total;
  outcome.time_to_best = elapsed_ms();
  outcome.incumbent_values.push_back(outcome.lower);

  std::priority_queue<SearchNode, std::vector<SearchNode>, NodeOrder> open;
  std::uint64_t next_seq = 0;
  open.push({{}, max_flow(inst).total, 0, next_seq++});
  outcome.upper = std::max(open.top().bound, outcome.lower);

  const auto record_incumbent = [&](FlowAssignment flow) {
    outcome.lower = flow.total;
    outcome.best = std::move(flow);
    outcome.time_to_best = elapsed_ms();
    outcome.incumbent_values.push_back(outcome.lower);
  };

  bool limits_hit = false;
  while (!open.empty()) {
    // Drop nodes that can no longer beat the incumbent. The root is always
    // expanded: its relaxation establishes the upper bound.
    if (open.top().depth > 0 && open.top().bound <= outcome.lower) {
      open.pop();
      continue;
    }
    if (out_of_time() ||
        (node_limit && outcome.nodes_explored >= *node_limit)) {
      limits_hit = true;
      break;
    }

    const SearchNode node = open.top();
    open.pop();
    ++outcome.nodes_explored;

    const FlowAssignment relaxed = max_flow(inst, node.forbidden);
    assert(relaxed.total == node.bound);

    if (first_violated_pair(inst, relaxed) < 0) {
      // Conflict-feasible relaxation: its value is attainable here, close.
      if (relaxed.total > outcome.lower) record_incumbent(relaxed);
      continue;
    }

    const int pair_index =
        select_branch_pair(inst, relaxed, node.forbidden);
    const ConflictPair& pair =
        inst.conflicts[static_cast<std::size_t>(pair_index)];
    for (int arc : {pair.first, pair.second}) {
      SearchNode child;
      child.forbidden = with_arc(node.forbidden, arc);
      child.bound = max_flow(inst, child.forbidden).total;
      child.depth = node.depth + 1;
      child.seq = next_seq++;
      assert(child.bound <= node.bound);
      if (child.bound > outcome.lower) open.push(std::move(child));
    }
  }

  if (limits_hit) {
    std::int64_t open_bound = outcome.lower;
    while (!open.empty() && open.top().bound <= outcome.lower) open.pop();
    if (!open.empty()) open_bound = open.top().bound;
    outcome.upper = std::max(outcome.lower, open_bound);
  } else {
    outcome.upper = outcome.lower;
  }
  outcome.status = outcome.lower == outcome.upper ? SolveStatus::optimal
                                                  : SolveStatus::feasible;
  outcome.elapsed = elapsed_ms();
  return outcome;
}

SolveOutcome solve_bruteforce(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
  };

  // S = arcs involved in at least one conflict.
  std::vector<bool> involved(inst.arcs.size(), false);
  for (const ConflictPair& pair : inst.conflicts) {
    involved[static_cast<std::size_t>(pair.first)] = true;
    involved[static_cast<std::size_t>(pair.second)] = true;
  }
  std::vector<int> conflicted;
  for (int a = 0; a < inst.arc_count(); ++a)
    if (involved[static_cast<std::size_t>(a)]) conflicted.push_back(a);

  const int k = static_cast<int>(conflicted.size());
  if (k > kBruteforceConflictArcLimit)
    throw std::invalid_argument(
        "solve_bruteforce: too many conflict-involved arcs (" +
        std::to_string(k) + " > " +
        std::to_string(kBruteforceConflictArcLimit) + ")");

  // Conflict graph over S as bitmasks.
  std::vector<int> position(inst.arcs.size(), -1);
  for (int i = 0; i < k; ++i)
    position[static_cast<std::size_t>(conflicted[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint32_t> neighbour(static_cast<std::size_t>(k), 0);
  for (const ConflictPair& pair : inst.conflicts) {
    const int a = position[static_cast<std::size_t>(pair.first)];
    const int b = position[static_cast<std::size_t>(pair.second)];
    neighbour[static_cast<std::size_t>(a)] |= 1u << b;
    neighbour[static_cast<std::size_t>(b)] |= 1u << a;
  }

  SolveOutcome outcome;
  outcome.lower = -1;

  std::vector<int> disabled;
  const auto evaluate = [&](std::uint32_t kept) {
    disabled.clear();
    for (int i = 0; i < k; ++i)
      if (!(kept & (1u << i)))
        disabled.push_back(conflicted[static_cast<std::size_t>(i)]);
    FlowAssignment flow = max_flow(inst, disabled);
    ++outcome.nodes_explored;
    if (flow.total > outcome.lower) {
      outcome.lower = flow.total;
      outcome.best = std::move(flow);
      outcome.time_to_best = elapsed_ms();
      outcome.incumbent_values.push_back(outcome.lower);
    }
  };

  // Every independent subset of the conflict graph, by include/exclude.
  const auto enumerate = [&](auto&& self, int index,
                             std::uint32_t kept) -> void {
    if (index == k) {
      evaluate(kept);
      return;
    }
    self(self, index + 1, kept);  // exclude conflicted[index]
    if (!(neighbour[static_cast<std::size_t>(index)] & kept))
      self(self, index + 1, kept | (1u << index));
  };
  enumerate(enumerate, 0, 0);

  outcome.upper = outcome.lower;
  outcome.status = SolveStatus::optimal;
  outcome.elapsed = elapsed_ms();
  return outcome;
}

}  // namespace mfpc
