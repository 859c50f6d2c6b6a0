// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mfpc/instance.hpp"

namespace mfpc {

// Residual graph over an instance. Arc k owns the paired half-edges 2k
// (forward) and 2k+1 (reverse); pushing on one transfers residual to the
// other, so forward residual plus pushed flow always equals the original
// capacity and the reverse residual equals the flow. Disabled arcs get zero
// forward residual. Per-node edge lists are in ascending arc order, which is
// what makes every traversal in this module reproducible.
class ResidualNetwork {
 public:
  struct HalfEdge {
    int to = 0;
    int arc = 0;
    bool forward = false;
    std::int64_t residual = 0;
  };

  explicit ResidualNetwork(const Instance& inst,
                           std::span<const int> disabled = {});

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int arc_count() const { return static_cast<int>(edges_.size() / 2); }

  std::span<const int> edges_at(int node) const { return adjacency_[node]; }
  const HalfEdge& edge(int id) const { return edges_[id]; }

  void push(int edge_id, std::int64_t amount) {
    edges_[edge_id].residual -= amount;
    edges_[edge_id ^ 1].residual += amount;
  }

  std::int64_t flow_on_arc(int arc) const {
    return edges_[2 * arc + 1].residual;
  }

  // Current flow vector; total is the net outflow of `source`.
  FlowAssignment extract_flow(int source) const;

 private:
  std::vector<HalfEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Maximum s-t flow on the subgraph excluding `disabled`, conflicts ignored.
// Integral, deterministic (Dinic with fixed edge order); an instance with no
// s-t path yields total 0.
FlowAssignment max_flow(const Instance& inst,
                        std::span<const int> disabled = {});

// Saturated arcs of a minimum s-t cut for the same subproblem, ascending by
// arc index. Their capacities sum to the max-flow value and removing them
// disconnects s from t among the enabled arcs.
std::vector<int> min_cut(const Instance& inst,
                         std::span<const int> disabled = {});

}  // namespace mfpc
