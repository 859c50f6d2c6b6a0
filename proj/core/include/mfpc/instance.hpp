// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfpc {

/// Directed arc with an integer capacity (capacities are always >= 1).
struct Arc {
  int tail = 0;
  int head = 0;
  std::int64_t capacity = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Unordered pair of arc indices that may not both carry positive flow.
/// Stored canonically with first < second.
struct ConflictPair {
  int first = 0;
  int second = 0;

  static ConflictPair canonical(int a, int b) {
    return a < b ? ConflictPair{a, b} : ConflictPair{b, a};
  }
  bool contains(int arc) const { return arc == first || arc == second; }

  friend bool operator==(const ConflictPair&, const ConflictPair&) = default;
  friend auto operator<=>(const ConflictPair&, const ConflictPair&) = default;
};

// A flow network with pairwise arc conflicts. Node ids are dense 0-based
// integers; arc indices are positions in `arcs`. Instances are treated as
// immutable once built and are safe to share across threads.
struct Instance {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;
  std::vector<ConflictPair> conflicts;

  int arc_count() const { return static_cast<int>(arcs.size()); }
  std::int64_t conflict_count() const {
    return static_cast<std::int64_t>(conflicts.size());
  }

  // Throws std::invalid_argument if any structural invariant is broken:
  // source == sink, endpoint out of range, self-loop, duplicate arc,
  // capacity < 1, or a bad/duplicate conflict pair.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Per-arc flow values plus the total routed from source to sink.
struct FlowAssignment {
  std::vector<std::int64_t> flow;
  std::int64_t total = 0;

  friend bool operator==(const FlowAssignment&, const FlowAssignment&) =
      default;
};

/// Arc activation indicators; the model-side companion of a flow.
struct ActivationPattern {
  std::vector<bool> active;

  static ActivationPattern from_flow(const FlowAssignment& sol);

  friend bool operator==(const ActivationPattern&, const ActivationPattern&) =
      default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, semantic };

  ParseError(Kind kind, int line, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

// Instance file format (line oriented, `#` starts a comment line):
//
//   p mfpc <n> <m> <w>
//   n s <node-id>
//   n t <node-id>
//   a <tail> <head> <capacity>     exactly m lines; arc index = appearance
//   c <arc-index-1> <arc-index-2>  exactly w lines
//
// Tokens are whitespace-separated decimal integers. parse_instance preserves
// arc order and conflict order as given; conflict pairs are canonicalized.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

void serialize_instance(const Instance& inst, std::ostream& out);
std::string serialize_instance(const Instance& inst);

// Solution file format: first line `z <total>`, then one `f <arc-index>
// <flow>` line per arc with positive flow. Arcs not listed carry zero.
FlowAssignment parse_solution(std::istream& in, const Instance& inst);
FlowAssignment parse_solution(const std::string& text, const Instance& inst);

void serialize_solution(const FlowAssignment& sol, std::ostream& out);
std::string serialize_solution(const FlowAssignment& sol);

enum class ViolationKind {
  capacity,          // flow[arc] < 0 or flow[arc] > capacity[arc]
  conservation,      // inflow != outflow at an internal node
  source_imbalance,  // net outflow of the source != total
  sink_imbalance,    // net inflow of the sink != total
  conflict,          // both arcs of a conflict pair carry positive flow
};

struct Violation {
  ViolationKind kind;
  int arc = -1;   // capacity violations
  int node = -1;  // conservation / imbalance violations
  int pair = -1;  // conflict violations (index into Instance::conflicts)
  std::int64_t actual = 0;
  std::int64_t expected = 0;

  std::string message() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks capacity bounds, flow conservation, source/sink balance against
// sol.total, and the conflict constraints. Collects every violation rather
// than stopping at the first; violations are reported in a fixed order
// (capacity by arc, conservation by node, source, sink, conflicts by pair).
// Throws std::invalid_argument if sol.flow length differs from arc count.
FeasibilityReport check_feasible(const Instance& inst,
                                 const FlowAssignment& sol);

// arc -> arcs in conflict with it, in conflict-list order.
std::vector<std::vector<int>> conflict_adjacency(const Instance& inst);

}  // namespace mfpc
