// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mfpc/instance.hpp"

namespace mfpc {

enum class VarKind { continuous, integer, binary };

struct Variable {
  std::string name;
  VarKind kind = VarKind::continuous;
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;  // nullopt = +infinity
};

enum class Relation { less_equal, equal, greater_equal };

struct LinearTerm {
  std::int64_t coeff = 0;
  int var = 0;  // index into ModelIR::variables
};

struct Constraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Relation relation = Relation::less_equal;
  std::int64_t rhs = 0;
};

enum class ObjectiveSense { maximize };

// Solver-agnostic linear model. For a model built from an Instance the
// variable layout is fixed: f_0..f_{m-1}, x_0..x_{m-1}, z; the constraint
// layout is cons_<node> (flow conservation), link_<arc> (activation
// linking), conf_<pair> (one row per unordered conflict pair).
struct ModelIR {
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  ObjectiveSense sense = ObjectiveSense::maximize;
  std::vector<LinearTerm> objective;
};

// maximize z
// s.t.  sum_in f - sum_out f + z = 0          at the source
//       sum_in f - sum_out f - z = 0          at the sink
//       sum_in f - sum_out f     = 0          elsewhere
//       f_a - u_a x_a <= 0                    per arc
//       x_a + x_b <= 1                        per conflict pair
// with f, z integer >= 0 and x binary.
ModelIR build_model(const Instance& inst);

// Plain-text LP interchange document: MAXIMIZE / SUBJECT TO / BOUNDS /
// GENERAL / BINARY / END, `\` starts a comment. One named row per line.
// Deterministic: the same model always produces byte-identical output.
// BOUNDS lists only variables whose range differs from the format default
// of [0, +inf); binaries are covered by the BINARY section.
void export_lp(const ModelIR& model, std::ostream& out);
std::string export_lp(const ModelIR& model);

struct ModelCheck {
  // Violated rows by constraint name, then "bound_<var>" and
  // "integrality_<var>" entries, in declaration order.
  std::vector<std::string> violated;

  bool ok() const { return violated.empty(); }
};

// Evaluates every constraint row, bound, and integrality condition of a
// build_model()-shaped model for the assignment (f, x, z). Throws
// std::invalid_argument on dimension mismatch.
ModelCheck validate_against_model(const ModelIR& model,
                                  const FlowAssignment& f,
                                  const ActivationPattern& x, std::int64_t z);

}  // namespace mfpc
