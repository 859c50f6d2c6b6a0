// SPDX-License-Identifier: Apache-2.0
#include "mfpc/milp.hpp"

#include <ostream>
#include <sstream>

namespace mfpc {

ModelIR build_model(const Instance& inst) {
  const int m = inst.arc_count();
  const int n = inst.node_count;

  ModelIR model;
  model.variables.reserve(static_cast<std::size_t>(2 * m + 1));
  for (int a = 0; a < m; ++a)
    model.variables.push_back(
        {"f_" + std::to_string(a), VarKind::integer, 0, std::nullopt});
  for (int a = 0; a < m; ++a)
    model.variables.push_back(
        {"x_" + std::to_string(a), VarKind::binary, 0, 1});
  const int z = 2 * m;
  model.variables.push_back({"z", VarKind::integer, 0, std::nullopt});

  model.sense = ObjectiveSense::maximize;
  model.objective = {{1, z}};

  model.constraints.reserve(static_cast<std::size_t>(n + m) +
                            inst.conflicts.size());

  // Flow conservation; z enters the source and sink rows.
  for (int v = 0; v < n; ++v) {
    Constraint row;
    row.name = "cons_" + std::to_string(v);
    row.relation = Relation::equal;
    row.rhs = 0;
    for (int a = 0; a < m; ++a)
      if (inst.arcs[static_cast<std::size_t>(a)].head == v)
        row.terms.push_back({1, a});
    for (int a = 0; a < m; ++a)
      if (inst.arcs[static_cast<std::size_t>(a)].tail == v)
        row.terms.push_back({-1, a});
    if (v == inst.source) row.terms.push_back({1, z});
    if (v == inst.sink) row.terms.push_back({-1, z});
    model.constraints.push_back(std::move(row));
  }

  // Activation linking: f_a <= u_a x_a.
  for (int a = 0; a < m; ++a) {
    Constraint row;
    row.name = "link_" + std::to_string(a);
    row.relation = Relation::less_equal;
    row.rhs = 0;
    row.terms = {{1, a},
                 {-inst.arcs[static_cast<std::size_t>(a)].capacity, m + a}};
    model.constraints.push_back(std::move(row));
  }

  // One row per unordered conflict pair.
  for (std::size_t p = 0; p < inst.conflicts.size(); ++p) {
    const ConflictPair& pair = inst.conflicts[p];
    Constraint row;
    row.name = "conf_" + std::to_string(p);
    row.relation = Relation::less_equal;
    row.rhs = 1;
    row.terms = {{1, m + pair.first}, {1, m + pair.second}};
    model.constraints.push_back(std::move(row));
  }

  return model;
}

namespace {

void write_terms(std::ostream& out, const std::vector<LinearTerm>& terms,
                 const std::vector<Variable>& variables) {
  bool first = true;
  for (const LinearTerm& term : terms) {
    const std::int64_t c = term.coeff;
    if (first) {
      if (c < 0) out << "- ";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out << mag << ' ';
    out << variables[static_cast<std::size_t>(term.var)].name;
    first = false;
  }
  if (first) out << '0';
}

const char* relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::less_equal:
      return "<=";
    case Relation::equal:
      return "=";
    case Relation::greater_equal:
      return ">=";
  }
  return "=";
}

}  // namespace

void export_lp(const ModelIR& model, std::ostream& out) {
  out << "\\ mfpc model: " << model.variables.size() << " variables, "
      << model.constraints.size() << " constraints\n";
  out << "MAXIMIZE\n obj: ";
  write_terms(out, model.objective, model.variables);
  out << '\n';

  out << "SUBJECT TO\n";
  for (const Constraint& row : model.constraints) {
    out << ' ' << row.name << ": ";
    write_terms(out, row.terms, model.variables);
    out << ' ' << relation_symbol(row.relation) << ' ' << row.rhs << '\n';
  }

  // Only ranges that differ from the LP default [0, +inf); binaries are
  // declared below.
  out << "BOUNDS\n";
  for (const Variable& var : model.variables) {
    if (var.kind == VarKind::binary) continue;
    if (var.lower == 0 && !var.upper) continue;
    if (var.upper && var.lower == *var.upper) {
      out << ' ' << var.name << " = " << var.lower << '\n';
    } else if (var.upper) {
      out << ' ' << var.lower << " <= " << var.name << " <= " << *var.upper
          << '\n';
    } else {
      out << ' ' << var.name << " >= " << var.lower << '\n';
    }
  }

  out << "GENERAL\n";
  for (const Variable& var : model.variables)
    if (var.kind == VarKind::integer) out << ' ' << var.name << '\n';
  out << "BINARY\n";
  for (const Variable& var : model.variables)
    if (var.kind == VarKind::binary) out << ' ' << var.name << '\n';
  out << "END\n";
}

std::string export_lp(const ModelIR& model) {
  std::ostringstream out;
  export_lp(model, out);
  return out.str();
}

ModelCheck validate_against_model(const ModelIR& model,
                                  const FlowAssignment& f,
                                  const ActivationPattern& x, std::int64_t z) {
  if (model.variables.size() % 2 == 0)
    throw std::invalid_argument("model does not have 2m+1 variables");
  const std::size_t m = model.variables.size() / 2;
  if (f.flow.size() != m || x.active.size() != m)
    throw std::invalid_argument("assignment dimensions do not match model");

  std::vector<std::int64_t> value(model.variables.size());
  for (std::size_t a = 0; a < m; ++a) value[a] = f.flow[a];
  for (std::size_t a = 0; a < m; ++a) value[m + a] = x.active[a] ? 1 : 0;
  value[2 * m] = z;

  ModelCheck check;
  for (const Constraint& row : model.constraints) {
    std::int64_t lhs = 0;
    for (const LinearTerm& term : row.terms)
      lhs += term.coeff * value[static_cast<std::size_t>(term.var)];
    const bool holds = row.relation == Relation::less_equal ? lhs <= row.rhs
                       : row.relation == Relation::equal    ? lhs == row.rhs
                                                            : lhs >= row.rhs;
    if (!holds) check.violated.push_back(row.name);
  }

  for (std::size_t i = 0; i < model.variables.size(); ++i) {
    const Variable& var = model.variables[i];
    if (value[i] < var.lower || (var.upper && value[i] > *var.upper))
      check.violated.push_back("bound_" + var.name);
    if (var.kind == VarKind::binary && value[i] != 0 && value[i] != 1)
      check.violated.push_back("integrality_" + var.name);
  }
  return check;
}

}  // namespace mfpc
