#include <catch_amalgamated.hpp>

#include <random>

#include "sdpts/enumerate.hpp"
#include "sdpts/generator.hpp"
#include "sdpts/greedy.hpp"
#include "sdpts/improve.hpp"
#include "support/builders.hpp"
#include "support/tiny_gen.hpp"

using namespace sdpts;
using testsupport::add_demand;
using testsupport::frame;

TEST_CASE("greedy on a zero-demand instance returns the empty schedule") {
  Instance inst = frame(30, 16, 8, 2, 2, 2);
  inst.finalize();
  const Solution sol = greedy(inst, build_compatibility(inst));
  CHECK_FALSE(sol.assignment.any());
  CHECK(sol.objective_units == 0);
}

TEST_CASE("greedy fully covers an easy demand") {
  Instance inst = frame(30, 16, 8, 1, 1, 1);
  add_demand(inst, 0, 1, 16, 20, 60);
  inst.finalize();
  const Solution sol = greedy(inst, build_compatibility(inst));
  REQUIRE(sol.slack_minutes.size() == 1);
  CHECK(sol.slack_minutes[0] == 0);
  CHECK(check(inst, sol.assignment).total() == 0);
}

TEST_CASE("greedy never over-covers a demand") {
  Instance inst = frame(30, 16, 8, 1, 2, 1);
  add_demand(inst, 0, 1, 16, 24, 90);  // 3 slots needed, window of 8
  inst.finalize();
  const Solution sol = greedy(inst, build_compatibility(inst));
  long long covered = 0;
  for (int r = 0; r < 2; ++r)
    for (int t = 16; t < 24; ++t) covered += sol.assignment.get(r, 0, t, 1);
  CHECK(covered * 30 <= 90);
}

TEST_CASE("greedy respects the G1/G3 floors when placing runs") {
  Instance inst = frame(30, 16, 8, 1, 1, 1);
  inst.rules.min_work_after_break_minutes = 120;  // 4 slots
  add_demand(inst, 0, 1, 16, 20, 60);             // needs only 2 slots
  inst.finalize();
  const Solution sol = greedy(inst, build_compatibility(inst));
  // placing 2 slots would breach G1, placing 4 would over-cover: stays empty
  CHECK_FALSE(sol.assignment.any());
  CHECK(check(inst, sol.assignment).total() == 0);
}

TEST_CASE("greedy output is always violation-free on random tiny instances") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testsupport::tiny_instance(rng);
    const Solution sol = greedy(inst, build_compatibility(inst));
    const auto report = check(inst, sol.assignment);
    INFO(format_report(inst, report));
    REQUIRE(report.total() == 0);
  }
}

TEST_CASE("greedy on generated week-scale instances stays feasible") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Instance inst = generate_instance({5, 4, 5, 30, seed});
    const Solution sol = greedy(inst, build_compatibility(inst));
    CHECK(check(inst, sol.assignment).total() == 0);
  }
}

TEST_CASE("improve never worsens and stays feasible") {
  std::mt19937_64 rng(777);
  SearchConfig cfg;
  cfg.time_limit_seconds = 5;
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testsupport::tiny_instance(rng);
    const Solution start = greedy(inst, build_compatibility(inst));
    const Solution better = improve(inst, start, cfg);
    CHECK(better.objective_units <= start.objective_units);
    CHECK(check(inst, better.assignment).total() == 0);
  }
}

TEST_CASE("improve from the empty schedule covers an easy demand") {
  Instance inst = frame(30, 16, 6, 1, 1, 1);
  add_demand(inst, 0, 1, 16, 20, 60);
  inst.finalize();
  const Solution empty = make_solution(inst, Assignment(inst));
  SearchConfig cfg;
  cfg.time_limit_seconds = 5;
  const Solution better = improve(inst, empty, cfg);
  CHECK(better.objective_units < empty.objective_units);
  CHECK(check(inst, better.assignment).total() == 0);
}

TEST_CASE("improve rejects an infeasible start") {
  Instance inst = frame(30, 16, 6, 1, 1, 2);
  inst.finalize();
  Assignment x(inst);
  x.set(0, 0, 16, 1, true);
  x.set(0, 1, 16, 1, true);  // D4
  CHECK_THROWS_AS(improve(inst, make_solution(inst, x), {}), Error);
}

TEST_CASE("improve is deterministic under a fixed seed") {
  const Instance inst = generate_instance({4, 3, 4, 30, 11});
  const Solution start = greedy(inst, build_compatibility(inst), 9);
  SearchConfig cfg;
  cfg.time_limit_seconds = 10;
  cfg.seed = 9;
  const Solution a = improve(inst, start, cfg);
  const Solution b = improve(inst, start, cfg);
  CHECK(a.assignment == b.assignment);
  CHECK(a.objective_units == b.objective_units);
}

TEST_CASE("oracle on the zero-demand toy") {
  Instance inst = frame(30, 16, 4, 1, 1, 1);
  inst.finalize();
  const auto best = enumerate_optimal(inst);
  CHECK(best.objective_units == 0);
  CHECK_FALSE(best.solution.assignment.any());
}

TEST_CASE("oracle places exactly one maximal run when the floors force it") {
  // 1 employee, 1 activity, 4 slots, demand of 2 slots, wt = G3 = 2 slots:
  // the optimum covers the demand with one 2-slot run and no more.
  Instance inst = frame(30, 16, 4, 1, 1, 1);
  inst.rules.min_work_after_break_minutes = 60;
  inst.activities[0].min_consecutive_minutes = 60;
  add_demand(inst, 0, 1, 16, 18, 60);
  inst.finalize();
  const auto best = enumerate_optimal(inst);
  CHECK(best.objective_units == 0);
  int worked = 0;
  for (int t = 16; t <= 19; ++t) worked += best.solution.assignment.get(0, 0, t, 1);
  CHECK(worked == 2);
  CHECK(best.solution.assignment.get(0, 0, 16, 1));
  CHECK(best.solution.assignment.get(0, 0, 17, 1));  // lexicographic tie-break
}

TEST_CASE("oracle refuses instances beyond the cell cap") {
  Instance inst = frame(15, 0, 30, 1, 1, 1);  // 30 cells > 24
  inst.finalize();
  CHECK_THROWS_AS(enumerate_optimal(inst), CapError);
}

TEST_CASE("greedy plus improve reaches the oracle on a friendly toy") {
  Instance inst = frame(30, 16, 5, 1, 2, 2);
  add_demand(inst, 0, 1, 16, 20, 60);
  add_demand(inst, 1, 1, 18, 21, 60);
  inst.finalize();
  const auto oracle = enumerate_optimal(inst);
  Solution sol = greedy(inst, build_compatibility(inst));
  SearchConfig cfg;
  cfg.time_limit_seconds = 5;
  sol = improve(inst, sol, cfg);
  CHECK(sol.objective_units >= oracle.objective_units);
  CHECK(sol.objective_units == oracle.objective_units);
}

TEST_CASE("improve keeps an already optimal start unchanged in objective") {
  Instance inst = frame(30, 16, 4, 1, 1, 1);
  add_demand(inst, 0, 1, 16, 18, 60);
  inst.finalize();
  const auto oracle = enumerate_optimal(inst);
  SearchConfig cfg;
  cfg.time_limit_seconds = 2;
  const Solution after = improve(inst, oracle.solution, cfg);
  CHECK(after.objective_units == oracle.objective_units);
}
