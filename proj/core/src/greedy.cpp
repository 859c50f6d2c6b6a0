// SPDX-License-Identifier: Apache-2.0
#include "mfpc/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <vector>

#include "mfpc/max_flow.hpp"
#include "mfpc/rng.hpp"

namespace mfpc {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// One restart of the conflict-aware augmenting-path loop.
//
// `active` holds every arc that ever carried positive flow (an arc stays
// committed even if later augmentations drain it) and `blocked` holds the
// conflict partners of active arcs; neither is ever used in forward
// direction again, so active never contains a conflict pair and the flow
// stays feasible. While a path is being walked, partners of the arcs
// already chosen are skipped as well; if that leaves no admissible step,
// the last committed arc is dropped for the current augmentation round and
// the search starts over.
class Restart {
 public:
  Restart(const Instance& inst,
          const std::vector<std::vector<int>>& partners,
          const std::vector<int>& tie_key)
      : inst_(inst),
        partners_(partners),
        tie_key_(tie_key),
        net_(inst),
        active_(inst.arcs.size(), false),
        blocked_(inst.arcs.size(), false),
        banned_(inst.arcs.size(), false),
        walk_blocked_(inst.arcs.size(), false),
        dist_(static_cast<std::size_t>(inst.node_count), kUnreached) {}

  FlowAssignment run() {
    while (augment_once()) {
    }
    return net_.extract_flow(inst_.source);
  }

 private:
  bool usable(const ResidualNetwork::HalfEdge& e) const {
    if (e.residual <= 0) return false;
    if (e.forward && (blocked_[static_cast<std::size_t>(e.arc)] ||
                      banned_[static_cast<std::size_t>(e.arc)]))
      return false;
    return true;
  }

  // Pushes along one internally conflict-free shortest path if any remains.
  // Walk dead-ends ban the arc that caused them and retry; the bans only
  // live until the next successful push.
  bool augment_once() {
    std::vector<int> retry_bans;
    bool pushed = false;
    std::vector<int> path;
    while (compute_distances()) {
      const int clash = walk_path(path);
      if (clash >= 0) {
        banned_[static_cast<std::size_t>(clash)] = true;
        retry_bans.push_back(clash);
        continue;
      }
      push_and_commit(path);
      pushed = true;
      break;
    }
    for (int arc : retry_bans) banned_[static_cast<std::size_t>(arc)] = false;
    return pushed;
  }

  // Fewest-arc distance to the sink over usable residual edges.
  bool compute_distances() {
    std::fill(dist_.begin(), dist_.end(), kUnreached);
    queue_.clear();
    dist_[static_cast<std::size_t>(inst_.sink)] = 0;
    queue_.push_back(inst_.sink);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int w = queue_[head];
      for (int id : net_.edges_at(w)) {
        // edge id^1 runs from the neighbour into w
        const auto& rev = net_.edge(id ^ 1);
        const int u = net_.edge(id).to;
        if (!usable(rev) || dist_[static_cast<std::size_t>(u)] != kUnreached)
          continue;
        dist_[static_cast<std::size_t>(u)] =
            dist_[static_cast<std::size_t>(w)] + 1;
        queue_.push_back(u);
      }
    }
    return dist_[static_cast<std::size_t>(inst_.source)] != kUnreached;
  }

  // Walks source -> sink along edges that step one level closer to the
  // sink, taking the smallest tie key among the arcs compatible with the
  // walk so far. Returns -1 on success (path filled with edge ids) or the
  // arc to ban before retrying.
  int walk_path(std::vector<int>& path) {
    path.clear();
    touched_.clear();
    int banned_arc = -1;
    int v = inst_.source;
    while (v != inst_.sink) {
      int best_edge = -1;
      int best_key = std::numeric_limits<int>::max();
      for (int id : net_.edges_at(v)) {
        const auto& e = net_.edge(id);
        if (!usable(e)) continue;
        if (e.forward && walk_blocked_[static_cast<std::size_t>(e.arc)])
          continue;
        if (dist_[static_cast<std::size_t>(e.to)] !=
            dist_[static_cast<std::size_t>(v)] - 1)
          continue;
        const int key = tie_key_[static_cast<std::size_t>(e.arc)];
        if (key < best_key) {
          best_key = key;
          best_edge = id;
        }
      }
      if (best_edge < 0) {
        // Every continuation conflicts with an arc already on the walk;
        // drop the most recent commitment and search again.
        banned_arc = last_forward_arc(path);
        assert(banned_arc >= 0);
        break;
      }
      const auto& chosen = net_.edge(best_edge);
      if (chosen.forward)
        for (int partner : partners_[static_cast<std::size_t>(chosen.arc)])
          if (!walk_blocked_[static_cast<std::size_t>(partner)]) {
            walk_blocked_[static_cast<std::size_t>(partner)] = true;
            touched_.push_back(partner);
          }
      path.push_back(best_edge);
      v = chosen.to;
    }
    for (int arc : touched_) walk_blocked_[static_cast<std::size_t>(arc)] =
        false;
    return banned_arc;
  }

  int last_forward_arc(const std::vector<int>& path) const {
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      if (net_.edge(*it).forward) return net_.edge(*it).arc;
    return -1;
  }

  void push_and_commit(const std::vector<int>& path) {
    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (int id : path)
      bottleneck = std::min(bottleneck, net_.edge(id).residual);
    assert(bottleneck > 0);
    for (int id : path) net_.push(id, bottleneck);
    for (int id : path) {
      const auto& e = net_.edge(id);
      if (!e.forward || active_[static_cast<std::size_t>(e.arc)]) continue;
      if (net_.flow_on_arc(e.arc) <= 0) continue;
      active_[static_cast<std::size_t>(e.arc)] = true;
      for (int partner : partners_[static_cast<std::size_t>(e.arc)]) {
        assert(!active_[static_cast<std::size_t>(partner)]);
        blocked_[static_cast<std::size_t>(partner)] = true;
      }
    }
  }

  const Instance& inst_;
  const std::vector<std::vector<int>>& partners_;
  const std::vector<int>& tie_key_;
  ResidualNetwork net_;
  std::vector<bool> active_;
  std::vector<bool> blocked_;
  std::vector<bool> banned_;
  std::vector<bool> walk_blocked_;
  std::vector<int> dist_;
  std::vector<int> queue_;
  std::vector<int> touched_;
};

}  // namespace

FlowAssignment solve_greedy(const Instance& inst, std::uint64_t seed,
                            int restarts) {
  if (restarts < 1) restarts = 1;
  const auto partners = conflict_adjacency(inst);

  std::vector<int> tie_key(inst.arcs.size());
  std::iota(tie_key.begin(), tie_key.end(), 0);

  FlowAssignment best;
  best.flow.assign(inst.arcs.size(), 0);

  SplitMix64 restart_seeds(seed);
  for (int r = 0; r < restarts; ++r) {
    if (r > 0) {
      // Seeded permutation of the arc order; restart 0 keeps arc indices.
      SplitMix64 rng(restart_seeds.next());
      std::iota(tie_key.begin(), tie_key.end(), 0);
      shuffle(tie_key, rng);
    }
    FlowAssignment candidate = Restart(inst, partners, tie_key).run();
    if (candidate.total > best.total) best = std::move(candidate);
  }
  return best;
}

}  // namespace mfpc
