// SPDX-License-Identifier: Apache-2.0
//
// mfpc -- generate, solve, verify, export, and benchmark MFPC instances.
// Exit codes: 0 success, 1 infeasible/violation, 2 usage error, 3 I/O or
// parse error.
#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mfpc/bench.hpp"
#include "mfpc/bnb.hpp"
#include "mfpc/generator.hpp"
#include "mfpc/greedy.hpp"
#include "mfpc/instance.hpp"
#include "mfpc/max_flow.hpp"
#include "mfpc/milp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

mfpc::Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return mfpc::parse_instance(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

std::chrono::milliseconds to_duration(double seconds) {
  return std::chrono::milliseconds(
      static_cast<std::int64_t>(std::llround(seconds * 1000.0)));
}

int run_generate(const mfpc::GenParams& params, const std::string& out_path) {
  if (!mfpc::in_documented_grid(params))
    std::cerr << "warning: parameters are outside the documented benchmark "
                 "grid\n";
  const mfpc::Instance inst = mfpc::generate(params);
  auto out = open_output(out_path);
  mfpc::serialize_instance(inst, out);
  std::cout << "wrote " << out_path << " (n=" << inst.node_count
            << " m=" << inst.arc_count() << " w=" << inst.conflict_count()
            << ")\n";
  return kExitOk;
}

int run_generate_grid(std::uint64_t seed, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  int written = 0;
  mfpc::for_each_grid_instance(
      seed, [&](const mfpc::GenParams& params, const mfpc::Instance& inst) {
        const fs::path path = fs::path(out_dir) / (params.id() + ".txt");
        auto out = open_output(path.string());
        mfpc::serialize_instance(inst, out);
        std::cout << path.string() << '\n';
        ++written;
      });
  std::cout << "wrote " << written << " instances to " << out_dir << '\n';
  return kExitOk;
}

int run_solve(const std::string& instance_path, const std::string& method_name,
              const mfpc::RunOptions& options,
              const std::string& solution_out) {
  const auto method = mfpc::parse_method(method_name);
  if (!method)
    throw CLI::ValidationError("--method",
                               "unknown method '" + method_name + "'");
  const mfpc::Instance inst = read_instance(instance_path);

  mfpc::FlowAssignment witness;
  const mfpc::BenchRecord record = mfpc::solve_instance(
      inst, std::filesystem::path(instance_path).stem().string(), *method,
      options, &witness);

  std::cout << mfpc::kCsvHeader << '\n';
  mfpc::write_csv_row(std::cout, record);
  if (!solution_out.empty()) {
    auto out = open_output(solution_out);
    mfpc::serialize_solution(witness, out);
  }
  return kExitOk;
}

int run_verify(const std::string& instance_path,
               const std::string& solution_path) {
  const mfpc::Instance inst = read_instance(instance_path);
  std::ifstream in(solution_path);
  if (!in)
    throw std::runtime_error("cannot open solution file: " + solution_path);
  const mfpc::FlowAssignment sol = mfpc::parse_solution(in, inst);

  const mfpc::FeasibilityReport report = mfpc::check_feasible(inst, sol);
  std::cout << "total " << sol.total << '\n';
  if (report.ok()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const mfpc::Violation& violation : report.violations)
    std::cout << "violation: " << violation.message() << '\n';
  return kExitViolation;
}

int run_export(const std::string& instance_path, const std::string& out_path) {
  const mfpc::ModelIR model = mfpc::build_model(read_instance(instance_path));
  if (out_path.empty()) {
    mfpc::export_lp(model, std::cout);
  } else {
    auto out = open_output(out_path);
    mfpc::export_lp(model, out);
  }
  return kExitOk;
}

int run_bench_cmd(const std::vector<std::string>& instance_paths,
                  const std::vector<std::string>& method_names,
                  const mfpc::RunOptions& options,
                  const std::string& out_path) {
  std::vector<mfpc::Method> methods;
  for (const std::string& name : method_names) {
    const auto method = mfpc::parse_method(name);
    if (!method)
      throw CLI::ValidationError("--method", "unknown method '" + name + "'");
    methods.push_back(*method);
  }
  std::vector<std::filesystem::path> files(instance_paths.begin(),
                                           instance_paths.end());
  if (out_path.empty()) {
    mfpc::run_bench(files, methods, options, std::cout);
  } else {
    auto out = open_output(out_path);
    mfpc::run_bench(files, methods, options, out);
    std::cout << "wrote " << files.size() * methods.size() << " records to "
              << out_path << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-flow-with-conflicts toolkit"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate one instance");
  mfpc::GenParams params;
  std::string out_path;
  generate->add_option("--nodes", params.nodes, "Node count")->required();
  generate->add_option("--arc-density", params.arc_density,
                       "Arc density p in (0,1]")
      ->required();
  generate->add_option("--conflict-density", params.conflict_density,
                       "Conflict density d in [0,1]")
      ->required();
  generate->add_option("--capacity-regime", params.capacity_regime,
                       "Capacity regime: 1 = [10,15], 2 = [15,20]");
  generate->add_option("--seed", params.seed, "Generator seed");
  generate->add_option("--out", out_path, "Output instance file")->required();

  // generate-grid
  auto* grid = app.add_subcommand("generate-grid",
                                  "Generate the 160-instance benchmark grid");
  std::uint64_t grid_seed = 1;
  std::string out_dir;
  grid->add_option("--seed", grid_seed, "Master seed");
  grid->add_option("--out-dir", out_dir, "Output directory")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  std::string instance_path, method_name = "bnb", solution_out;
  double time_limit_seconds = 60.0;
  mfpc::RunOptions options;
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_option("--method", method_name,
                    "bnb | brute | greedy | maxflow-relax");
  solve->add_option("--time-limit", time_limit_seconds, "Seconds");
  solve->add_option("--seed", options.seed, "Heuristic seed");
  solve->add_option("--restarts", options.restarts, "Greedy restarts");
  solve->add_option("--solution-out", solution_out,
                    "Write the witness solution file");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a solution file");
  std::string verify_instance, verify_solution;
  verify->add_option("instance", verify_instance, "Instance file")->required();
  verify->add_option("solution", verify_solution, "Solution file")->required();

  // export
  auto* export_cmd =
      app.add_subcommand("export", "Export the MILP model as LP text");
  std::string export_instance, export_out;
  export_cmd->add_option("instance", export_instance, "Instance file")
      ->required();
  export_cmd->add_option("--out", export_out, "Output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run methods over instance files");
  std::vector<std::string> bench_instances, bench_methods;
  std::string bench_out;
  bench->add_option("instances", bench_instances, "Instance files")
      ->required();
  bench->add_option("--method", bench_methods, "Methods (repeatable)")
      ->required();
  bench->add_option("--time-limit", time_limit_seconds, "Seconds per solve");
  bench->add_option("--seed", options.seed, "Heuristic seed");
  bench->add_option("--restarts", options.restarts, "Greedy restarts");
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
    options.time_limit = to_duration(time_limit_seconds);

    if (generate->parsed()) return run_generate(params, out_path);
    if (grid->parsed()) return run_generate_grid(grid_seed, out_dir);
    if (solve->parsed())
      return run_solve(instance_path, method_name, options, solution_out);
    if (verify->parsed()) return run_verify(verify_instance, verify_solution);
    if (export_cmd->parsed()) return run_export(export_instance, export_out);
    if (bench->parsed())
      return run_bench_cmd(bench_instances, bench_methods, options, bench_out);
    return kExitUsage;
  } catch (const CLI::CallForHelp& help) {
    app.exit(help);
    return kExitOk;
  } catch (const CLI::ParseError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  } catch (const mfpc::ParseError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitIo;
  }
}
