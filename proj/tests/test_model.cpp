#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "sdpts/enumerate.hpp"
#include "sdpts/lp_writer.hpp"
#include "sdpts/merge.hpp"
#include "sdpts/model.hpp"
#include "sdpts/mps_writer.hpp"
#include "support/builders.hpp"
#include "support/model_points.hpp"
#include "support/mps_reader.hpp"
#include "support/tiny_gen.hpp"

using namespace sdpts;
using testsupport::add_demand;
using testsupport::frame;

namespace {

std::string temp_path(const std::string& name) {
  static const auto dir = std::filesystem::temp_directory_path() / "sdpts_model_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("variable naming is bijective") {
  CHECK(x_name(0, 3, 17, 2) == "x_r0_a3_t17_d2");
  CHECK(z_name(4, 1) == "z_r4_d1");
  const auto x = parse_var_name("x_r0_a3_t17_d2");
  REQUIRE(x);
  CHECK(x->kind == 'x');
  CHECK(x->r == 0);
  CHECK(x->a == 3);
  CHECK(x->t == 17);
  CHECK(x->d == 2);
  const auto s = parse_var_name("s_a1_d2_t16_20");
  REQUIRE(s);
  CHECK(s->kind == 's');
  CHECK(s->a == 1);
  CHECK(s->d == 2);
  CHECK(s->t == 16);
  CHECK(s->t2 == 20);
  CHECK_FALSE(parse_var_name("w_r0_d1"));
  CHECK_FALSE(parse_var_name("x_r0_a1_t2"));
  CHECK_FALSE(parse_var_name("x_r0_a1_tq_d1"));
}

TEST_CASE("dense toy declares exactly the expected variables") {
  // 1 employee, 1 activity, 1 day, 4 slots, all compatible and available:
  // 4 x + 4 y + 1 z + 1 b + 1 e + one slack per demand.
  Instance inst = frame(30, 16, 4, 1, 1, 1);
  add_demand(inst, 0, 1, 16, 18, 60);
  inst.finalize();
  const MilpModel model = build_model(inst, build_compatibility(inst));
  const ModelStats stats = model_stats(model);
  CHECK(stats.num_vars == 4 + 4 + 1 + 1 + 1 + 1);
  CHECK(stats.num_binaries == 4 + 1);  // x and z
  int y_count = 0, s_count = 0;
  for (const auto& v : model.variables) {
    const auto p = parse_var_name(v.name);
    REQUIRE(p);
    if (p->kind == 'y') {
      ++y_count;
      CHECK(v.kind == VarKind::IntegerRange);
      CHECK(v.lb == -1);
      CHECK(v.ub == 1);
    }
    if (p->kind == 's') {
      ++s_count;
      CHECK(v.kind == VarKind::ContinuousNonneg);
    }
  }
  CHECK(y_count == 4);
  CHECK(s_count == 1);
}

TEST_CASE("zero-demand model: objective reduces to affinity, optimum is empty") {
  Instance inst = frame(30, 16, 4, 1, 1, 1);
  testsupport::set_affinity(inst, 0, 0, 0.25);
  inst.finalize();
  const MilpModel model = build_model(inst, build_compatibility(inst));
  for (const auto& term : model.objective) {
    const auto p = parse_var_name(model.variables[term.var].name);
    CHECK(p->kind == 'x');
  }
  const auto best = testsupport::model_optimum(inst, model);
  REQUIRE(best.found);
  CHECK(best.units == 0);
}

TEST_CASE("structural zeros are omitted but change nothing about the optimum") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 10; ++trial) {
    Instance inst = testsupport::tiny_instance(rng);
    const MilpModel sparse = build_model(inst, build_compatibility(inst));

    // dense variant: every pair compatible, everyone always available
    Instance dense_inst = inst;
    for (auto& e : dense_inst.employees) {
      e.skills.insert("s1");
      e.skills.insert("s2");
      std::fill(e.available.begin(), e.available.end(), 1);
    }
    // affinities must stay on compatible pairs only, which is now everything
    dense_inst.finalize();
    const MilpModel dense = build_model(dense_inst, build_compatibility(dense_inst));
    CHECK(model_stats(dense).num_vars >= model_stats(sparse).num_vars);

    // on the sparse instance the sparse model already finds the optimum the
    // oracle finds; the dense instance relaxes availability so its optimum
    // can only improve
    const auto sparse_best = testsupport::model_optimum(inst, sparse);
    const auto oracle = enumerate_optimal(inst);
    CHECK(sparse_best.found);
    CHECK(sparse_best.units == oracle.objective_units);
    const auto dense_best = testsupport::model_optimum(dense_inst, dense);
    CHECK(dense_best.units <= sparse_best.units);
  }
}

TEST_CASE("checkout needs both roles") {
  Instance inst = frame(30, 0, 4, 1, 1, 2);
  inst.activities[0].checkout_role = CheckoutRole::Open;
  inst.finalize();
  CHECK_THROWS_AS(build_model(inst, build_compatibility(inst)), FormulationError);
}

TEST_CASE("model stats of the empty model") {
  const MilpModel model;
  const ModelStats stats = model_stats(model);
  CHECK(stats.num_vars == 0);
  CHECK(stats.num_binaries == 0);
  CHECK(stats.num_rows == 0);
  CHECK(stats.num_nonzeros == 0);
}

TEST_CASE("merged instance builds a strictly smaller model") {
  Instance inst = frame(30, 16, 8, 1, 2, 3);
  inst.activities[0].id = "c1";
  inst.activities[1].id = "c2";
  inst.activities[0].slack_penalty = 2 * kMicroScale;
  inst.activities[1].slack_penalty = 2 * kMicroScale;
  add_demand(inst, 0, 1, 16, 18, 60);
  add_demand(inst, 1, 1, 18, 20, 60);
  inst.finalize();
  const auto [reduced, plan] = merge_identical(inst);
  REQUIRE_FALSE(plan.empty());
  const auto full = model_stats(build_model(inst, build_compatibility(inst)));
  const auto small = model_stats(build_model(reduced, build_compatibility(reduced)));
  CHECK(small.num_binaries < full.num_binaries);
}

TEST_CASE("MPS output: independent reader agrees with model_stats") {
  Instance inst = frame(30, 16, 6, 2, 2, 2);
  add_demand(inst, 0, 1, 16, 19, 90);
  add_demand(inst, 1, 2, 17, 20, 60);
  testsupport::set_affinity(inst, 0, 0, 0.01);
  inst.finalize();
  const MilpModel model = build_model(inst, build_compatibility(inst));
  const ModelStats stats = model_stats(model);

  const auto path = temp_path("toy.mps");
  emit_mps(model, path);
  const auto counts = testsupport::read_mps(path);
  INFO(counts.error);
  REQUIRE(counts.ok);
  CHECK(counts.rows == stats.num_rows);
  CHECK(counts.cols == stats.num_vars);
  CHECK(counts.nonzeros == stats.num_nonzeros);
  int integer_vars = 0;
  for (const auto& v : model.variables)
    if (v.kind != VarKind::ContinuousNonneg) ++integer_vars;
  CHECK(counts.integers == integer_vars);
}

TEST_CASE("emitters are byte-stable across runs") {
  std::mt19937_64 rng(5);
  const Instance inst = testsupport::tiny_instance(rng);
  const MilpModel model = build_model(inst, build_compatibility(inst));
  std::ostringstream mps_a, mps_b, lp_a, lp_b;
  emit_mps(model, mps_a);
  emit_mps(build_model(inst, build_compatibility(inst)), mps_b);
  CHECK(mps_a.str() == mps_b.str());
  emit_lp(model, lp_a);
  emit_lp(build_model(inst, build_compatibility(inst)), lp_b);
  CHECK(lp_a.str() == lp_b.str());
  CHECK(lp_a.str().find("Minimize") != std::string::npos);
  CHECK(lp_a.str().rfind("End\n") == lp_a.str().size() - 4);
}

TEST_CASE("empty model emits the bare MPS skeleton") {
  MilpModel model;
  const auto path = temp_path("empty.mps");
  emit_mps(model, path);
  const auto counts = testsupport::read_mps(path);
  INFO(counts.error);
  REQUIRE(counts.ok);
  CHECK(counts.rows == 0);
  CHECK(counts.cols == 0);
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("NAME") == 0);
  CHECK(text.find("ROWS") != std::string::npos);
  CHECK(text.find("ENDATA") != std::string::npos);
}

TEST_CASE("toy model optimum equals the enumeration oracle") {
  Instance inst = frame(30, 16, 4, 1, 2, 2);
  add_demand(inst, 0, 1, 16, 20, 60);
  inst.rules.min_work_after_break_minutes = 60;
  inst.activities[0].min_consecutive_minutes = 60;
  inst.finalize();
  const auto oracle = enumerate_optimal(inst);
  const auto best = testsupport::model_optimum(inst, build_model(inst, build_compatibility(inst)));
  REQUIRE(best.found);
  CHECK(best.units == oracle.objective_units);
}

TEST_CASE("feasible assignments map to feasible model points and back") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = testsupport::tiny_instance(rng);
    const MilpModel model = build_model(inst, build_compatibility(inst));
    const testsupport::ModelPointEvaluator eval(inst, model);
    const auto cells = testsupport::model_cells(model);
    const int n = static_cast<int>(cells.size());

    Assignment x(inst);
    std::uint32_t current = 0;
    int feasible_points = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      const auto flip = static_cast<std::uint32_t>(mask) ^ current;
      for (int c = 0; c < n; ++c)
        if (flip & (1u << c))
          x.set(cells[c].r, cells[c].a, cells[c].t, cells[c].d, (mask >> c) & 1u);
      current = static_cast<std::uint32_t>(mask);

      CostUnits model_units = 0;
      const bool model_ok = eval.evaluate(x, &model_units);
      const bool validator_ok = feasible(inst, x);
      if (model_ok != validator_ok) {
        INFO("mask " << mask << " model=" << model_ok << " validator=" << validator_ok);
        CHECK(model_ok == validator_ok);
        break;
      }
      if (model_ok) {
        ++feasible_points;
        CHECK(model_units == objective_units(inst, x));
      }
    }
    CHECK(feasible_points >= 1);  // the empty schedule at least
  }
}
