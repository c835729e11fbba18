#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sdpts/assignment.hpp"
#include "sdpts/instance.hpp"
#include "sdpts/merge.hpp"
#include "sdpts/model.hpp"
#include "sdpts/validator.hpp"

namespace sdpts {

// Exchange format with external MILP solvers: one `name value` pair per
// line, names per the model naming scheme, '#' starts a comment. Variables
// not listed default to zero.

inline std::map<std::string, double> load_name_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::map<std::string, double> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string name;
    if (!(ss >> name)) continue;
    double value = 0;
    std::string extra;
    if (!(ss >> value) || (ss >> extra))
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'name value'");
    if (!out.emplace(name, value).second)
      throw ParseError(path + ":" + std::to_string(lineno) + ": duplicate variable '" + name + "'");
  }
  return out;
}

struct ImportResult {
  Solution solution;
  ViolationReport report;              // against the original instance
  std::vector<std::string> warnings;   // non-canonical b/e/z/y, inconsistent slacks
};

// Turns a solver variable vector back into a Solution. Binary values round at
// 0.5 with a 1e-6 feasibility tolerance; values outside their bounds are
// rejected. Derived variables (y, z, b, e) are only compared against the
// canonical derivation and flagged when they differ; slacks likewise are
// recomputed and mismatches reported. With a merge plan the values refer to
// the reduced instance and the result is redistributed to the original tasks.
inline ImportResult import_external_solution(const std::map<std::string, double>& values,
                                             const Instance& instance,
                                             const std::optional<MergePlan>& plan = std::nullopt) {
  constexpr double kTol = 1e-6;
  const Instance merged = plan ? apply_merge_plan(instance, *plan) : Instance{};
  const Instance& inst = plan ? merged : instance;
  const CompatibilityMatrix cra = build_compatibility(inst);
  const TimeGrid& g = inst.grid;

  ImportResult result;
  Assignment x(inst);
  std::map<std::string, double> derived;  // recorded y/z/b/e/s for the warning pass

  const auto binary_value = [&](const std::string& name, double v) {
    if (v < -kTol || v > 1 + kTol)
      throw ValidationError("variable " + name + ": value " + std::to_string(v) +
                            " outside binary bounds");
    return v >= 0.5;
  };

  for (const auto& [name, value] : values) {
    const auto parsed = parse_var_name(name);
    if (!parsed) throw IdentifierError("unknown variable name: " + name);
    const ParsedVarName& p = *parsed;
    switch (p.kind) {
      case 'x': {
        if (p.r < 0 || p.r >= inst.num_employees() || p.a < 0 || p.a >= inst.num_activities() ||
            !g.contains_slot(p.t) || !g.contains_day(p.d))
          throw IdentifierError("variable " + name + ": indices outside the instance");
        if (!cra.at(p.r, p.a) || !inst.employees[p.r].available_at(g, p.t, p.d))
          throw IdentifierError("variable " + name + ": cell is a structural zero (G4/G5)");
        if (binary_value(name, value)) x.set(p.r, p.a, p.t, p.d, true);
        break;
      }
      case 'y':
        if (value < -1 - kTol || value > 1 + kTol)
          throw ValidationError("variable " + name + ": value outside [-1, 1]");
        derived[name] = value;
        break;
      case 'z':
        binary_value(name, value);
        derived[name] = value;
        break;
      case 'b':
      case 'e':
        if (value < g.first_slot - kTol || value > g.last_slot + 1 + kTol)
          throw ValidationError("variable " + name + ": value outside the slot window");
        derived[name] = value;
        break;
      case 's':
        if (value < -kTol) throw ValidationError("variable " + name + ": negative slack");
        derived[name] = value;
        break;
      default:
        throw IdentifierError("unknown variable name: " + name);
    }
  }

  // Canonical derivations; imported values that disagree are flagged, not used.
  for (const auto& [name, value] : derived) {
    const ParsedVarName p = *parse_var_name(name);
    double canonical = 0;
    if (p.kind == 'z') {
      canonical = x.works_on_day(p.r, p.d) ? 1 : 0;
    } else if (p.kind == 'b' || p.kind == 'e') {
      const DayBounds bounds = derive_day_bounds(x, p.r, p.d);
      canonical = p.kind == 'b' ? bounds.begin_slot : bounds.end_slot;
      if (!bounds.worked) {
        // The model leaves b,e free on empty days; only flag values that
        // could not come from any consistent derivation.
        if (std::fabs(value - canonical) > kTol)
          result.warnings.push_back("variable " + name + " = " + std::to_string(value) +
                                    " on a day off differs from the canonical " +
                                    std::to_string(canonical));
        continue;
      }
    } else if (p.kind == 'y') {
      const bool now = x.get(p.r, p.a, p.t, p.d);
      const bool before = p.t > g.first_slot && x.get(p.r, p.a, p.t - 1, p.d);
      canonical = (now ? 1 : 0) - (before ? 1 : 0);
    } else {  // slack: compare to the recomputed shortfall
      int index = -1;
      for (int i = 0; i < inst.num_demands(); ++i) {
        const Demand& dem = inst.demands[i];
        if (dem.activity == p.a && dem.day == p.d && dem.start_slot == p.t && dem.end_slot == p.t2)
          index = i;
      }
      if (index < 0) throw IdentifierError("variable " + name + ": no such demand");
      canonical = static_cast<double>(compute_slacks(inst, x)[index]);
    }
    if (std::fabs(value - canonical) > kTol)
      result.warnings.push_back("variable " + name + " = " + std::to_string(value) +
                                " differs from the canonical derivation " + std::to_string(canonical));
  }

  Solution sol = make_solution(inst, std::move(x));
  if (plan) sol = redistribute(sol, *plan, instance);
  result.report = check(instance, sol.assignment);
  result.solution = std::move(sol);
  return result;
}

// Serializes a feasible schedule in the `name value` exchange format so an
// external solver can take it as a warm start. Zero variables are omitted
// except the slacks, which external solvers usually want pinned.
inline void save_warm_start(const Instance& inst, const Solution& sol, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path);
  const TimeGrid& g = inst.grid;
  const auto& x = sol.assignment;
  for (int r = 0; r < inst.num_employees(); ++r)
    for (int a = 0; a < inst.num_activities(); ++a)
      for (int t = g.first_slot; t <= g.last_slot; ++t)
        for (int d = 1; d <= g.days; ++d)
          if (x.get(r, a, t, d)) os << x_name(r, a, t, d) << " 1\n";
  for (int r = 0; r < inst.num_employees(); ++r)
    for (int a = 0; a < inst.num_activities(); ++a)
      for (int d = 1; d <= g.days; ++d)
        for (const auto& point : derive_change_points(x, r, a, d))
          os << y_name(r, a, point.slot, d) << " " << point.sign << "\n";
  for (int r = 0; r < inst.num_employees(); ++r)
    for (int d = 1; d <= g.days; ++d) {
      const DayBounds bounds = derive_day_bounds(x, r, d);
      if (!bounds.worked) continue;
      os << z_name(r, d) << " 1\n";
      os << b_name(r, d) << " " << bounds.begin_slot << "\n";
      os << e_name(r, d) << " " << bounds.end_slot << "\n";
    }
  const auto slack = compute_slacks(inst, x);
  for (int i = 0; i < inst.num_demands(); ++i)
    os << s_name(inst.demands[i]) << " " << slack[i] << "\n";
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace sdpts
