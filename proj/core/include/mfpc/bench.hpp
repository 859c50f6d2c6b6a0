// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfpc/bnb.hpp"
#include "mfpc/instance.hpp"

namespace mfpc {

enum class Method { bnb, brute, greedy, maxflow_relax };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// One benchmark result row.
struct BenchRecord {
  std::string instance_id;
  int n = 0;
  int m = 0;
  std::int64_t w = 0;
  Method method = Method::bnb;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  SolveStatus status = SolveStatus::feasible;
  std::int64_t time_total_ms = 0;
  std::int64_t time_first_best_ms = 0;
  std::uint64_t seed = 0;
};

struct RunOptions {
  std::chrono::milliseconds time_limit{60'000};
  std::uint64_t seed = 1;
  int restarts = 16;
};

// Percentage gaps against best-known bounds: 100*(bk - lb)/bk for lower
// bounds, 100*(ub - bk)/bk for upper bounds. Negative means the bound
// improves on the best known. Throws std::domain_error unless bk > 0.
double gap_lb(std::int64_t bk_lb, std::int64_t lb);
double gap_ub(std::int64_t bk_ub, std::int64_t ub);

inline constexpr std::string_view kCsvHeader =
    "instance_id,n,m,w,method,lower,upper,status,time_total_ms,"
    "time_first_best_ms,seed";

void write_csv_row(std::ostream& out, const BenchRecord& record);

// Runs one method on one instance. The returned lower bound is always
// witnessed by an assignment that passed check_feasible before the record
// was made; `witness` receives it when non-null.
BenchRecord solve_instance(const Instance& inst,
                           const std::string& instance_id, Method method,
                           const RunOptions& options,
                           FlowAssignment* witness = nullptr);

// One record per (instance file, method), instances in the given order,
// methods in the given order; writes the CSV (kCsvHeader first) to csv_out.
// Throws std::invalid_argument for an empty or unknown method list and
// std::runtime_error for unreadable files.
std::vector<BenchRecord> run_bench(
    const std::vector<std::filesystem::path>& instance_files,
    const std::vector<Method>& methods, const RunOptions& options,
    std::ostream& csv_out);

}  // namespace mfpc
