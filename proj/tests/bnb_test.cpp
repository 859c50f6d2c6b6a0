// SPDX-License-Identifier: Apache-2.0
#include "mfpc/bnb.hpp"

#include <doctest.h>

#include <algorithm>

#include "mfpc/max_flow.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mfpc;
using namespace std::chrono_literals;
using test::figure1;
using test::single_arc;

TEST_CASE("figure instance solves to the optimum of 5") {
  const Instance inst = figure1();
  const SolveOutcome outcome = solve_bnb(inst, 10s);
  CHECK(outcome.status == SolveStatus::optimal);
  CHECK(outcome.lower == 5);
  CHECK(outcome.upper == 5);
  CHECK(outcome.best.total == 5);
  CHECK(check_feasible(inst, outcome.best).ok());
  CHECK(outcome.time_to_best <= outcome.elapsed);
}

TEST_CASE("conflict-free instances close at the root") {
  SplitMix64 rng(111);
  for (int i = 0; i < 50; ++i) {
    Instance inst = test::random_small_instance(rng);
    inst.conflicts.clear();
    const SolveOutcome outcome = solve_bnb(inst, 10s);
    CHECK(outcome.status == SolveStatus::optimal);
    CHECK(outcome.lower == max_flow(inst).total);
    CHECK(outcome.nodes_explored == 1);
  }
}

TEST_CASE("bnb agrees with the brute-force oracle") {
  SplitMix64 rng(222);
  for (int i = 0; i < 100; ++i) {
    const Instance inst = test::random_small_instance(rng);
    const SolveOutcome exact = solve_bnb(inst, 10s);
    const SolveOutcome oracle = solve_bruteforce(inst);
    REQUIRE(exact.status == SolveStatus::optimal);
    CHECK(exact.lower == oracle.lower);
    CHECK(check_feasible(inst, exact.best).ok());
    CHECK(check_feasible(inst, oracle.best).ok());
  }
}

TEST_CASE("explored node count stays within the conflict-pair bound") {
  SplitMix64 rng(333);
  for (int i = 0; i < 60; ++i) {
    const Instance inst = test::random_small_instance(rng);
    const SolveOutcome outcome = solve_bnb(inst, 10s);
    CHECK(outcome.nodes_explored <=
          (std::uint64_t{1} << inst.conflicts.size()));
  }
}

TEST_CASE("node limits yield valid enclosing bounds") {
  SplitMix64 rng(444);
  for (int i = 0; i < 60; ++i) {
    const Instance inst = test::random_small_instance(rng);
    const std::int64_t optimum = solve_bruteforce(inst).lower;
    for (std::uint64_t limit : {1u, 2u, 4u}) {
      const SolveOutcome outcome = solve_bnb(inst, 10s, limit);
      CHECK(outcome.lower <= optimum);
      CHECK(optimum <= outcome.upper);
      CHECK(outcome.lower <= outcome.upper);
      CHECK((outcome.status == SolveStatus::optimal) ==
            (outcome.lower == outcome.upper));
      CHECK(check_feasible(inst, outcome.best).ok());
    }
  }
}

TEST_CASE("search is deterministic") {
  const Instance inst = figure1();
  const SolveOutcome a = solve_bnb(inst, 10s);
  const SolveOutcome b = solve_bnb(inst, 10s);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.incumbent_values == b.incumbent_values);
  CHECK(a.best == b.best);
}

TEST_CASE("to_string names every status") {
  CHECK(to_string(SolveStatus::optimal) == "optimal");
  CHECK(to_string(SolveStatus::feasible) == "feasible");
  CHECK(to_string(SolveStatus::infeasible_nonzero) == "infeasible-nonzero");
}

TEST_CASE("bruteforce solves the figure instance") {
  const Instance inst = figure1();
  const SolveOutcome outcome = solve_bruteforce(inst);
  CHECK(outcome.status == SolveStatus::optimal);
  CHECK(outcome.lower == 5);
  CHECK(outcome.upper == 5);
  CHECK(check_feasible(inst, outcome.best).ok());
}

TEST_CASE("bruteforce on a conflict-free instance is one max flow") {
  Instance inst = figure1();
  inst.conflicts.clear();
  const SolveOutcome outcome = solve_bruteforce(inst);
  CHECK(outcome.lower == 9);
  CHECK(outcome.nodes_explored == 1);
}

TEST_CASE("fully conflicting terminals force the zero optimum") {
  // the only path s->a->t conflicts with itself arc-by-arc
  Instance inst;
  inst.node_count = 3;
  inst.source = 0;
  inst.sink = 2;
  inst.arcs = {{0, 1, 4}, {1, 2, 6}};
  inst.conflicts = {{0, 1}};
  const SolveOutcome outcome = solve_bruteforce(inst);
  CHECK(outcome.status == SolveStatus::optimal);
  CHECK(outcome.lower == 0);

  const SolveOutcome exact = solve_bnb(inst, 10s);
  CHECK(exact.status == SolveStatus::optimal);
  CHECK(exact.lower == 0);
}

TEST_CASE("bruteforce rejects oversized conflict sets") {
  Instance inst;
  inst.node_count = 30;
  inst.source = 0;
  inst.sink = 29;
  for (int i = 0; i < 22; ++i) inst.arcs.push_back({i, i + 1, 5});
  for (int i = 0; i + 1 < 22; i += 2) inst.conflicts.push_back({i, i + 1});
  // 22 distinct arcs appear in conflicts
  CHECK_THROWS_AS(solve_bruteforce(inst), std::invalid_argument);
}

TEST_CASE("adding a conflict never helps the optimum") {
  SplitMix64 rng(555);
  int tested = 0;
  for (int i = 0; i < 120 && tested < 60; ++i) {
    Instance inst = test::random_small_instance(rng, 8, 16, 6);
    if (inst.arc_count() < 2) continue;
    const std::int64_t before = solve_bruteforce(inst).lower;
    const int a = static_cast<int>(
        uniform_below(rng, static_cast<std::uint64_t>(inst.arc_count())));
    const int b = static_cast<int>(
        uniform_below(rng, static_cast<std::uint64_t>(inst.arc_count())));
    if (a == b) continue;
    const ConflictPair pair = ConflictPair::canonical(a, b);
    if (std::find(inst.conflicts.begin(), inst.conflicts.end(), pair) !=
        inst.conflicts.end())
      continue;
    inst.conflicts.push_back(pair);
    CHECK(solve_bruteforce(inst).lower <= before);
    ++tested;
  }
  CHECK(tested >= 50);
}

TEST_CASE("select_branch_pair picks the largest violated min-flow") {
  Instance inst;
  inst.node_count = 4;
  inst.source = 0;
  inst.sink = 3;
  inst.arcs = {{0, 1, 10}, {1, 3, 10}, {0, 2, 10}, {2, 3, 10}};
  inst.conflicts = {{0, 1}, {2, 3}};

  FlowAssignment relaxed;
  SUBCASE("min-flows 3 vs 1") {
    relaxed.flow = {3, 3, 1, 1};
    relaxed.total = 4;
    CHECK(select_branch_pair(inst, relaxed, {}) == 0);
  }
  SUBCASE("single violated pair") {
    relaxed.flow = {0, 0, 2, 2};
    relaxed.total = 2;
    CHECK(select_branch_pair(inst, relaxed, {}) == 1);
  }
  SUBCASE("equal min-flows break to the smaller index") {
    relaxed.flow = {2, 2, 2, 2};
    relaxed.total = 4;
    CHECK(select_branch_pair(inst, relaxed, {}) == 0);
  }
  SUBCASE("no violated pair throws") {
    relaxed.flow = {3, 0, 0, 1};
    relaxed.total = 3;
    CHECK_THROWS_AS(select_branch_pair(inst, relaxed, {}),
                    std::invalid_argument);
  }
  SUBCASE("forbidden arcs do not count") {
    relaxed.flow = {3, 3, 0, 0};
    relaxed.total = 3;
    const std::vector<int> forbidden{0};
    CHECK_THROWS_AS(select_branch_pair(inst, relaxed, forbidden),
                    std::invalid_argument);
  }
}

TEST_CASE("a tiny time limit still returns enclosing bounds") {
  const Instance inst = figure1();
  const SolveOutcome outcome = solve_bnb(inst, 0ms);
  CHECK(outcome.lower <= 5);
  CHECK(outcome.upper >= 5);
  CHECK(check_feasible(inst, outcome.best).ok());
}
