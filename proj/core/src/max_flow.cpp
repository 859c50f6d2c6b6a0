// SPDX-License-Identifier: Apache-2.0
#include "mfpc/max_flow.hpp"

#include <algorithm>
#include <limits>

namespace mfpc {

ResidualNetwork::ResidualNetwork(const Instance& inst,
                                 std::span<const int> disabled) {
  std::vector<bool> off(inst.arcs.size(), false);
  for (int a : disabled) off[static_cast<std::size_t>(a)] = true;

  edges_.reserve(inst.arcs.size() * 2);
  adjacency_.resize(static_cast<std::size_t>(inst.node_count));
  for (int a = 0; a < inst.arc_count(); ++a) {
    const Arc& arc = inst.arcs[static_cast<std::size_t>(a)];
    const std::int64_t cap = off[static_cast<std::size_t>(a)] ? 0
                                                              : arc.capacity;
    adjacency_[static_cast<std::size_t>(arc.tail)].push_back(
        static_cast<int>(edges_.size()));
    edges_.push_back({arc.head, a, true, cap});
    adjacency_[static_cast<std::size_t>(arc.head)].push_back(
        static_cast<int>(edges_.size()));
    edges_.push_back({arc.tail, a, false, 0});
  }
}

FlowAssignment ResidualNetwork::extract_flow(int source) const {
  FlowAssignment sol;
  sol.flow.reserve(edges_.size() / 2);
  for (int a = 0; a < arc_count(); ++a) sol.flow.push_back(flow_on_arc(a));
  for (int id : adjacency_[static_cast<std::size_t>(source)]) {
    const HalfEdge& e = edges_[static_cast<std::size_t>(id)];
    if (e.forward)
      sol.total += flow_on_arc(e.arc);
    else
      sol.total -= flow_on_arc(e.arc);
  }
  return sol;
}

namespace {

class Dinic {
 public:
  Dinic(ResidualNetwork& net, int source, int sink)
      : net_(net),
        source_(source),
        sink_(sink),
        level_(static_cast<std::size_t>(net.node_count())),
        next_edge_(static_cast<std::size_t>(net.node_count())) {}

  std::int64_t run() {
    std::int64_t total = 0;
    while (build_levels()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (;;) {
        const std::int64_t pushed =
            augment(source_, std::numeric_limits<std::int64_t>::max());
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

 private:
  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(source_);
    level_[static_cast<std::size_t>(source_)] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int v = queue_[head];
      for (int id : net_.edges_at(v)) {
        const auto& e = net_.edge(id);
        if (e.residual > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] =
              level_[static_cast<std::size_t>(v)] + 1;
          queue_.push_back(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink_)] >= 0;
  }

  std::int64_t augment(int v, std::int64_t limit) {
    if (v == sink_) return limit;
    const auto edges = net_.edges_at(v);
    for (int& i = next_edge_[static_cast<std::size_t>(v)];
         i < static_cast<int>(edges.size()); ++i) {
      const int id = edges[static_cast<std::size_t>(i)];
      const auto& e = net_.edge(id);
      if (e.residual <= 0 || level_[static_cast<std::size_t>(e.to)] !=
                                 level_[static_cast<std::size_t>(v)] + 1)
        continue;
      const std::int64_t pushed =
          augment(e.to, std::min(limit, e.residual));
      if (pushed > 0) {
        net_.push(id, pushed);
        return pushed;
      }
    }
    return 0;
  }

  ResidualNetwork& net_;
  int source_;
  int sink_;
  std::vector<int> level_;
  std::vector<int> next_edge_;
  std::vector<int> queue_;
};

ResidualNetwork solved_network(const Instance& inst,
                               std::span<const int> disabled) {
  ResidualNetwork net(inst, disabled);
  Dinic(net, inst.source, inst.sink).run();
  return net;
}

}  // namespace

FlowAssignment max_flow(const Instance& inst, std::span<const int> disabled) {
  return solved_network(inst, disabled).extract_flow(inst.source);
}

std::vector<int> min_cut(const Instance& inst, std::span<const int> disabled) {
  const ResidualNetwork net = solved_network(inst, disabled);

  // Nodes reachable from s in the final residual graph.
  std::vector<bool> reachable(static_cast<std::size_t>(inst.node_count),
                              false);
  std::vector<int> stack{inst.source};
  reachable[static_cast<std::size_t>(inst.source)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int id : net.edges_at(v)) {
      const auto& e = net.edge(id);
      if (e.residual > 0 && !reachable[static_cast<std::size_t>(e.to)]) {
        reachable[static_cast<std::size_t>(e.to)] = true;
        stack.push_back(e.to);
      }
    }
  }

  std::vector<bool> off(inst.arcs.size(), false);
  for (int a : disabled) off[static_cast<std::size_t>(a)] = true;

  std::vector<int> cut;
  for (int a = 0; a < inst.arc_count(); ++a) {
    if (off[static_cast<std::size_t>(a)]) continue;
    const Arc& arc = inst.arcs[static_cast<std::size_t>(a)];
    if (reachable[static_cast<std::size_t>(arc.tail)] &&
        !reachable[static_cast<std::size_t>(arc.head)])
      cut.push_back(a);
  }
  return cut;
}

}  // namespace mfpc
