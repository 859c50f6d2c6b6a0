// SPDX-License-Identifier: Apache-2.0
#include "mfpc/bench.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "mfpc/greedy.hpp"
#include "mfpc/max_flow.hpp"

namespace mfpc {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::bnb:
      return "bnb";
    case Method::brute:
      return "brute";
    case Method::greedy:
      return "greedy";
    case Method::maxflow_relax:
      return "maxflow-relax";
  }
  return "bnb";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "bnb") return Method::bnb;
  if (name == "brute") return Method::brute;
  if (name == "greedy") return Method::greedy;
  if (name == "maxflow-relax") return Method::maxflow_relax;
  return std::nullopt;
}

double gap_lb(std::int64_t bk_lb, std::int64_t lb) {
  if (bk_lb <= 0)
    throw std::domain_error("gap_lb: best-known lower bound must be > 0");
  return 100.0 * static_cast<double>(bk_lb - lb) / static_cast<double>(bk_lb);
}

double gap_ub(std::int64_t bk_ub, std::int64_t ub) {
  if (bk_ub <= 0)
    throw std::domain_error("gap_ub: best-known upper bound must be > 0");
  return 100.0 * static_cast<double>(ub - bk_ub) / static_cast<double>(bk_ub);
}

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  out << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.w << ','
      << method_name(r.method) << ',' << r.lower << ',' << r.upper << ','
      << to_string(r.status) << ',' << r.time_total_ms << ','
      << r.time_first_best_ms << ',' << r.seed << '\n';
}

namespace {

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

BenchRecord solve_instance(const Instance& inst,
                           const std::string& instance_id, Method method,
                           const RunOptions& options,
                           FlowAssignment* witness) {
  BenchRecord record;
  record.instance_id = instance_id;
  record.n = inst.node_count;
  record.m = inst.arc_count();
  record.w = inst.conflict_count();
  record.method = method;
  record.seed = options.seed;

  FlowAssignment lower_witness;
  const auto start = std::chrono::steady_clock::now();

  switch (method) {
    case Method::bnb: {
      SolveOutcome outcome = solve_bnb(inst, options.time_limit);
      record.lower = outcome.lower;
      record.upper = outcome.upper;
      record.status = outcome.status;
      record.time_total_ms = outcome.elapsed.count();
      record.time_first_best_ms = outcome.time_to_best.count();
      lower_witness = std::move(outcome.best);
      break;
    }
    case Method::brute: {
      SolveOutcome outcome = solve_bruteforce(inst);
      record.lower = outcome.lower;
      record.upper = outcome.upper;
      record.status = outcome.status;
      record.time_total_ms = outcome.elapsed.count();
      record.time_first_best_ms = outcome.time_to_best.count();
      lower_witness = std::move(outcome.best);
      break;
    }
    case Method::greedy: {
      lower_witness = solve_greedy(inst, options.seed, options.restarts);
      record.lower = lower_witness.total;
      // The conflict-free relaxation is the cheapest valid upper bound.
      record.upper = max_flow(inst).total;
      record.status = record.lower == record.upper ? SolveStatus::optimal
                                                   : SolveStatus::feasible;
      record.time_total_ms = ms_since(start);
      record.time_first_best_ms = record.time_total_ms;
      break;
    }
    case Method::maxflow_relax: {
      FlowAssignment relaxed = max_flow(inst);
      record.upper = relaxed.total;
      if (check_feasible(inst, relaxed).ok()) {
        record.lower = relaxed.total;
        record.status = SolveStatus::optimal;
        lower_witness = std::move(relaxed);
      } else {
        // The relaxation violates a conflict; only the zero flow is
        // certified, the relaxed value stays as an upper bound.
        record.lower = 0;
        record.status = SolveStatus::feasible;
        lower_witness.flow.assign(inst.arcs.size(), 0);
        lower_witness.total = 0;
      }
      record.time_total_ms = ms_since(start);
      record.time_first_best_ms = record.time_total_ms;
      break;
    }
  }

  if (!check_feasible(inst, lower_witness).ok() ||
      lower_witness.total != record.lower)
    throw std::logic_error(
        "solve_instance: lower bound witness failed the feasibility check");
  if (witness) *witness = std::move(lower_witness);
  return record;
}

std::vector<BenchRecord> run_bench(
    const std::vector<std::filesystem::path>& instance_files,
    const std::vector<Method>& methods, const RunOptions& options,
    std::ostream& csv_out) {
  if (methods.empty()) throw std::invalid_argument("unknown method ''");

  std::vector<BenchRecord> records;
  records.reserve(instance_files.size() * methods.size());
  csv_out << kCsvHeader << '\n';
  for (const auto& path : instance_files) {
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error("cannot open instance file: " + path.string());
    const Instance inst = parse_instance(in);
    for (Method method : methods) {
      BenchRecord record =
          solve_instance(inst, path.stem().string(), method, options);
      write_csv_row(csv_out, record);
      records.push_back(std::move(record));
    }
  }
  return records;
}

}  // namespace mfpc
