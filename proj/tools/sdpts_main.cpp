#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sdpts/sdpts.hpp"

namespace {

std::string file_stem(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name.erase(dot);
  return name;
}

int run_validate(const std::string& instance_path, const std::string& solution_path) {
  const sdpts::Instance inst = sdpts::load_instance(instance_path);
  const sdpts::Solution sol = sdpts::load_solution(solution_path, inst);
  const sdpts::ViolationReport report = sdpts::check(inst, sol.assignment);
  std::cout << sdpts::format_report(inst, report);
  const sdpts::Metrics m = sdpts::metrics(inst, sol);
  std::printf("Objective: %.6f\n", sdpts::objective_value(inst, sol.objective_units));
  std::printf("Slack hours: %.2f\n", m.total_slack_hours);
  std::printf("Department demand: %.1f%%\n", m.department_satisfaction_pct);
  return report.total() > 0 ? 1 : 0;
}

int run_build_milp(const std::string& instance_path, const std::string& out_path, bool merge,
                   const std::string& format, const std::string& warm_start_path) {
  const sdpts::Instance original = sdpts::load_instance(instance_path);
  sdpts::Instance reduced;
  sdpts::MergePlan plan;
  if (merge) std::tie(reduced, plan) = sdpts::merge_identical(original);
  const sdpts::Instance& inst = merge ? reduced : original;

  const auto cra = sdpts::build_compatibility(inst);
  const sdpts::MilpModel model = sdpts::build_model(inst, cra);
  if (format == "lp")
    sdpts::emit_lp(model, out_path);
  else
    sdpts::emit_mps(model, out_path);

  const sdpts::ModelStats stats = sdpts::model_stats(model);
  std::printf("Variables: %d (%d binary)\n", stats.num_vars, stats.num_binaries);
  std::printf("Rows: %d\n", stats.num_rows);
  std::printf("Nonzeros: %lld\n", static_cast<long long>(stats.num_nonzeros));

  if (merge) {
    const auto base_stats = sdpts::model_stats(sdpts::build_model(original, sdpts::build_compatibility(original)));
    const double activity_drop = 100.0 * (original.num_activities() - inst.num_activities()) /
                                 std::max(1, original.num_activities());
    const double binary_drop = 100.0 * (base_stats.num_binaries - stats.num_binaries) /
                               std::max(1, base_stats.num_binaries);
    std::printf("Merge: %d -> %d activities (-%.1f%%), %d -> %d binaries (-%.1f%%)\n",
                original.num_activities(), inst.num_activities(), activity_drop,
                base_stats.num_binaries, stats.num_binaries, binary_drop);
    if (!plan.empty()) {
      const std::string plan_path = out_path + ".mergeplan.json";
      sdpts::save_merge_plan(plan, plan_path);
      std::printf("Merge plan: %s\n", plan_path.c_str());
    }
  }

  if (!warm_start_path.empty()) {
    const sdpts::Solution warm = sdpts::greedy(inst, cra);
    sdpts::save_warm_start(inst, warm, warm_start_path);
    std::printf("Warm start: %s (objective %.6f)\n", warm_start_path.c_str(),
                sdpts::objective_value(inst, warm.objective_units));
  }
  std::printf("Model written to %s\n", out_path.c_str());
  return 0;
}

int run_solve(const std::string& instance_path, const std::string& out_path, double time_limit,
              std::uint64_t seed, bool merge) {
  const auto t_start = std::chrono::steady_clock::now();
  const sdpts::Instance original = sdpts::load_instance(instance_path);
  sdpts::Instance reduced;
  sdpts::MergePlan plan;
  if (merge) std::tie(reduced, plan) = sdpts::merge_identical(original);
  const sdpts::Instance& inst = merge ? reduced : original;

  const auto cra = sdpts::build_compatibility(inst);
  sdpts::Solution sol = sdpts::greedy(inst, cra, seed);

  sdpts::SearchConfig cfg;
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  cfg.time_limit_seconds = std::max(0.1, time_limit - elapsed);
  cfg.seed = seed;
  sol = sdpts::improve(inst, sol, cfg);

  if (merge && !plan.empty()) sol = sdpts::redistribute(sol, plan, original);
  const sdpts::ViolationReport report = sdpts::check(original, sol.assignment);
  sdpts::save_solution(original, sol, out_path);

  const sdpts::Metrics m = sdpts::metrics(original, sol);
  const double runtime =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  std::printf("Objective: %.6f\n", sdpts::objective_value(original, sol.objective_units));
  std::printf("Slack hours: %.2f\n", m.total_slack_hours);
  std::printf("Violations: %d\n", report.total());
  std::printf("Runtime: %.2f s\n", runtime);
  std::printf("Solution written to %s\n", out_path.c_str());
  return report.total() > 0 ? 1 : 0;
}

int run_compare(const std::string& instance_path, const std::string& a_path, const std::string& b_path,
                const std::string& departments_path) {
  const sdpts::Instance inst = sdpts::load_instance(instance_path);
  std::map<std::string, std::string> departments;
  if (!departments_path.empty()) departments = sdpts::load_department_map(departments_path);
  const sdpts::Solution a = sdpts::load_solution(a_path, inst);
  const sdpts::Solution b = sdpts::load_solution(b_path, inst);
  std::vector<sdpts::MetricsRow> rows;
  rows.push_back({file_stem(instance_path), "A", sdpts::metrics(inst, a, departments)});
  rows.push_back({file_stem(instance_path), "B", sdpts::metrics(inst, b, departments)});
  std::cout << sdpts::format_metrics_table(rows);
  return 0;
}

int run_gen(const std::string& out_path, const sdpts::GenConfig& cfg) {
  const sdpts::Instance inst = sdpts::generate_instance(cfg);
  sdpts::save_instance(inst, out_path);
  std::printf("Instance with %d employees, %d activities, %d demands over %d days written to %s\n",
              inst.num_employees(), inst.num_activities(), inst.num_demands(), inst.grid.days,
              out_path.c_str());
  return 0;
}

int run_import(const std::string& instance_path, const std::string& values_path,
               const std::string& plan_path, const std::string& out_path) {
  const sdpts::Instance inst = sdpts::load_instance(instance_path);
  std::optional<sdpts::MergePlan> plan;
  if (!plan_path.empty()) plan = sdpts::load_merge_plan(plan_path);
  const auto values = sdpts::load_name_value_file(values_path);
  const sdpts::ImportResult result = sdpts::import_external_solution(values, inst, plan);
  for (const auto& warning : result.warnings) std::cout << "warning: " << warning << "\n";
  std::cout << sdpts::format_report(inst, result.report);
  std::printf("Objective: %.6f\n", sdpts::objective_value(inst, result.solution.objective_units));
  if (!out_path.empty()) {
    sdpts::save_solution(inst, result.solution, out_path);
    std::printf("Solution written to %s\n", out_path.c_str());
  }
  return result.report.total() > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdpts - shift design and personnel task scheduling"};
  app.require_subcommand(1);

  std::string instance_path, solution_path, solution_b_path, out_path, values_path, plan_path;
  std::string format = "mps", departments_path, warm_start_path;
  double time_limit = 3600;
  std::uint64_t seed = 0;
  bool merge = false;
  sdpts::GenConfig gen_cfg;

  auto* validate = app.add_subcommand("validate", "check a solution against every constraint");
  validate->add_option("instance", instance_path)->required();
  validate->add_option("solution", solution_path)->required();

  auto* build = app.add_subcommand("build-milp", "build the model and write MPS/LP");
  build->add_option("instance", instance_path)->required();
  build->add_option("-o,--out", out_path, "output file")->required();
  build->add_flag("--merge", merge, "merge identical activities first");
  build->add_option("--format", format, "mps or lp")->check(CLI::IsMember({"mps", "lp"}));
  build->add_option("--warm-start", warm_start_path, "also export a greedy warm start (name value lines)");

  auto* solve = app.add_subcommand("solve", "greedy + improvement pipeline");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("-o,--out", out_path, "solution file")->required();
  solve->add_option("--time-limit", time_limit, "seconds (default 3600)");
  solve->add_option("--seed", seed);
  solve->add_flag("--merge", merge, "merge, solve reduced, redistribute");

  auto* compare = app.add_subcommand("compare", "side-by-side metrics of two solutions");
  compare->add_option("instance", instance_path)->required();
  compare->add_option("solutionA", solution_path)->required();
  compare->add_option("solutionB", solution_b_path)->required();
  compare->add_option("--departments", departments_path, "activity-to-department map");

  auto* gen = app.add_subcommand("gen", "generate a random valid instance");
  gen->add_option("-o,--out", out_path)->required();
  gen->add_option("--employees", gen_cfg.employees);
  gen->add_option("--activities", gen_cfg.activities);
  gen->add_option("--days", gen_cfg.days);
  gen->add_option("--ts", gen_cfg.ts);
  gen->add_option("--seed", gen_cfg.seed);

  auto* import = app.add_subcommand("import", "import an external solver's variable values");
  import->add_option("instance", instance_path)->required();
  import->add_option("values", values_path)->required();
  import->add_option("--merge-plan", plan_path, "plan the values' reduced instance was built with");
  import->add_option("-o,--out", out_path, "write the imported solution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(instance_path, solution_path);
    if (app.got_subcommand(build)) return run_build_milp(instance_path, out_path, merge, format, warm_start_path);
    if (app.got_subcommand(solve)) return run_solve(instance_path, out_path, time_limit, seed, merge);
    if (app.got_subcommand(compare))
      return run_compare(instance_path, solution_path, solution_b_path, departments_path);
    if (app.got_subcommand(gen)) return run_gen(out_path, gen_cfg);
    if (app.got_subcommand(import)) return run_import(instance_path, values_path, plan_path, out_path);
  } catch (const sdpts::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
