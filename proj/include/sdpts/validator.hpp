#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sdpts/assignment.hpp"
#include "sdpts/compatibility.hpp"
#include "sdpts/instance.hpp"

namespace sdpts {

// Constraint families a schedule can break. G2 never appears here: demand
// satisfaction is soft and only produces slack.
enum class Family {
  D4,            // more than one activity in a slot
  L1,            // daily working time
  L2,            // working time over the horizon
  L3,            // consecutive working days
  L4,            // working time without a break
  L5,            // daily span
  L6,            // rest between working days
  G1,            // working time after a break
  G3,            // consecutive time on the same activity
  G6,            // checkout closure discipline
  Availability,  // work in an unavailable slot
  Compatibility, // work on an activity without the skills
  DailyBreaks,   // number of breaks in a day
};
constexpr int kNumFamilies = 13;

inline const char* family_name(Family f) {
  static const char* names[kNumFamilies] = {"D4", "L1", "L2", "L3", "L4", "L5", "L6",
                                            "G1", "G3", "G6", "availability", "compatibility",
                                            "dailyBreaks"};
  return names[static_cast<int>(f)];
}

struct Violation {
  Family family{};
  int employee = -1;   // index; -1 never occurs in reports
  int day = 0;         // 0 = horizon-wide (L2)
  int slot_begin = 0;  // [slot_begin, slot_end) locates the breach; 0,0 = whole day
  int slot_end = 0;
  std::string detail;
};

struct ViolationReport {
  std::array<int, kNumFamilies> counts{};
  std::vector<Violation> violations;

  int count(Family f) const { return counts[static_cast<int>(f)]; }
  int total() const { return std::accumulate(counts.begin(), counts.end(), 0); }
};

namespace detail {

class Checker {
 public:
  Checker(const Instance& inst, const Assignment& x, ViolationReport* report)
      : inst_(inst), x_(x), report_(report) {}

  // only_employee < 0 checks everyone; all families are per-employee, so a
  // schedule is feasible iff every single-employee check passes.
  bool run(int only_employee = -1) {
    const CompatibilityMatrix cra = build_compatibility(inst_);
    const int lo = only_employee < 0 ? 0 : only_employee;
    const int hi = only_employee < 0 ? inst_.num_employees() - 1 : only_employee;
    for (int r = lo; r <= hi; ++r) {
      check_compatibility(r, cra);
      check_days(r);
      check_horizon_total(r);
      check_consecutive_days(r);
      check_rest(r);
      if (!ok_ && !report_) return false;
    }
    return ok_;
  }

 private:
  void add(Family f, int r, int d, int sb, int se, std::string detail) {
    ok_ = false;
    if (!report_) return;
    report_->counts[static_cast<int>(f)]++;
    report_->violations.push_back({f, r, d, sb, se, std::move(detail)});
  }

  void check_compatibility(int r, const CompatibilityMatrix& cra) {
    for (int a = 0; a < inst_.num_activities(); ++a) {
      if (cra.at(r, a)) continue;
      for (int d = 1; d <= inst_.grid.days; ++d) {
        int run_start = -1;
        for (int t = inst_.grid.first_slot; t <= inst_.grid.last_slot + 1; ++t) {
          const bool on = t <= inst_.grid.last_slot && x_.get(r, a, t, d);
          if (on && run_start < 0) run_start = t;
          if (!on && run_start >= 0) {
            add(Family::Compatibility, r, d, run_start, t, "missing skills for '" + inst_.activities[a].id + "'");
            run_start = -1;
          }
        }
      }
    }
  }

  void check_days(int r) {
    const TimeGrid& g = inst_.grid;
    for (int d = 1; d <= g.days; ++d) {
      long long day_cells = 0;
      // D4 and availability, slot by slot.
      int unavail_start = -1;
      for (int t = g.first_slot; t <= g.last_slot + 1; ++t) {
        const int n = t <= g.last_slot ? x_.activities_at(r, t, d) : 0;
        day_cells += n;
        if (n > 1) add(Family::D4, r, d, t, t + 1, std::to_string(n) + " simultaneous activities");
        const bool bad = n > 0 && t <= g.last_slot && !inst_.employees[r].available_at(g, t, d);
        if (bad && unavail_start < 0) unavail_start = t;
        if (!bad && unavail_start >= 0) {
          add(Family::Availability, r, d, unavail_start, t, "work outside the availability window");
          unavail_start = -1;
        }
      }

      // L1: the row counts assignment cells, exactly like the model.
      if (day_cells > inst_.slots(inst_.rules.max_daily_minutes))
        add(Family::L1, r, d, 0, 0,
            std::to_string(day_cells * g.ts) + " min worked, limit " +
                std::to_string(inst_.rules.max_daily_minutes));

      // L4: every window of (WT1+WT2)/ts slots holds at most WT1/ts cells.
      const int window = inst_.slots(inst_.rules.max_stretch_minutes + inst_.rules.min_break_minutes);
      const int stretch_cap = inst_.slots(inst_.rules.max_stretch_minutes);
      if (window >= 1 && window <= g.num_slots()) {
        for (int t = g.first_slot; t + window - 1 <= g.last_slot; ++t) {
          long long in_window = 0;
          for (int t2 = t; t2 < t + window; ++t2) in_window += x_.activities_at(r, t2, d);
          if (in_window > stretch_cap)
            add(Family::L4, r, d, t, t + window, "no break of " +
                    std::to_string(inst_.rules.min_break_minutes) + " min in the window");
        }
      }

      const DayBounds bounds = derive_day_bounds(x_, r, d);
      if (bounds.worked && bounds.end_slot - bounds.begin_slot > inst_.slots(inst_.rules.max_daily_span_minutes))
        add(Family::L5, r, d, bounds.begin_slot, bounds.end_slot,
            "span " + std::to_string((bounds.end_slot - bounds.begin_slot) * g.ts) + " min, limit " +
                std::to_string(inst_.rules.max_daily_span_minutes));

      check_g1(r, d);
      check_g3(r, d);
      check_g6(r, d);

      if (inst_.rules.max_daily_breaks && bounds.worked) {
        const int breaks = static_cast<int>(work_stretches(x_, r, d).size()) - 1;
        if (breaks > *inst_.rules.max_daily_breaks)
          add(Family::DailyBreaks, r, d, bounds.begin_slot, bounds.end_slot,
              std::to_string(breaks) + " breaks, limit " + std::to_string(*inst_.rules.max_daily_breaks));
      }
    }
  }

  // G1: a work stretch starting at t must run for at least wt/ts slots. The
  // printed constraint only indexes t outside the last wt/ts - 1 slots, so
  // stretches starting that late are exempt.
  void check_g1(int r, int d) {
    const int k = inst_.slots(inst_.rules.min_work_after_break_minutes);
    if (k < 2) return;
    for (const auto& [s, e] : work_stretches(x_, r, d)) {
      if (s + k - 1 > inst_.grid.last_slot) continue;
      if (e - s < k)
        add(Family::G1, r, d, s, e,
            "stretch of " + std::to_string((e - s) * inst_.grid.ts) + " min after a break, minimum " +
                std::to_string(inst_.rules.min_work_after_break_minutes));
    }
  }

  // G3: same-activity runs, same exemption at the grid end.
  void check_g3(int r, int d) {
    for (int a = 0; a < inst_.num_activities(); ++a) {
      const int k = inst_.slots(inst_.activities[a].min_consecutive_minutes);
      if (k < 2) continue;
      int run_start = -1;
      for (int t = inst_.grid.first_slot; t <= inst_.grid.last_slot + 1; ++t) {
        const bool on = t <= inst_.grid.last_slot && x_.get(r, a, t, d);
        if (on && run_start < 0) run_start = t;
        if (!on && run_start >= 0) {
          if (run_start + k - 1 <= inst_.grid.last_slot && t - run_start < k)
            add(Family::G3, r, d, run_start, t,
                "run of " + std::to_string((t - run_start) * inst_.grid.ts) + " min on '" +
                    inst_.activities[a].id + "', minimum " +
                    std::to_string(inst_.activities[a].min_consecutive_minutes));
          run_start = -1;
        }
      }
    }
  }

  // G6, mirroring the four checkout rows: needs a closure when the checkout
  // was worked, at most one closure, no opening at or after the closure, and
  // an opening right before any closure that is not in the first slot.
  void check_g6(int r, int d) {
    const auto op = inst_.opcas_activity();
    const auto cl = inst_.clcas_activity();
    if (!op && !cl) return;
    std::vector<int> op_slots, cl_slots;
    for (int t = inst_.grid.first_slot; t <= inst_.grid.last_slot; ++t) {
      if (op && x_.get(r, *op, t, d)) op_slots.push_back(t);
      if (cl && x_.get(r, *cl, t, d)) cl_slots.push_back(t);
    }
    if (op_slots.empty() && cl_slots.empty()) return;
    if (cl_slots.size() > 1)
      add(Family::G6, r, d, cl_slots.front(), cl_slots.back() + 1,
          std::to_string(cl_slots.size()) + " clCAS slots in one day");
    if (!op_slots.empty() && cl_slots.empty())
      add(Family::G6, r, d, op_slots.front(), op_slots.back() + 1, "opCAS worked without a clCAS closure");
    for (int t : cl_slots) {
      if (!op_slots.empty() && op_slots.back() >= t)
        add(Family::G6, r, d, t, op_slots.back() + 1, "opCAS at or after the clCAS closure");
      if (t > inst_.grid.first_slot && !(op && x_.get(r, *op, t - 1, d)))
        add(Family::G6, r, d, t, t + 1, "clCAS not right after an opCAS slot");
    }
  }

  void check_horizon_total(int r) {
    long long cells = 0;
    for (int a = 0; a < inst_.num_activities(); ++a)
      for (int d = 1; d <= inst_.grid.days; ++d)
        for (int t = inst_.grid.first_slot; t <= inst_.grid.last_slot; ++t) cells += x_.get(r, a, t, d);
    if (cells > inst_.horizon_slot_cap(r))
      add(Family::L2, r, 0, 0, 0,
          std::to_string(cells * inst_.grid.ts) + " min over the horizon, cap " +
              std::to_string(inst_.horizon_slot_cap(r) * inst_.grid.ts) + " after history");
  }

  // L3 window sums over z(r,d), plus one shortened first window when the
  // employee enters the horizon with a streak of worked days.
  void check_consecutive_days(int r) {
    const int cd = inst_.rules.max_consecutive_days;
    std::vector<int> z(inst_.grid.days + 1, 0);
    for (int d = 1; d <= inst_.grid.days; ++d) z[d] = x_.works_on_day(r, d) ? 1 : 0;
    for (int d = 1; d + cd <= inst_.grid.days; ++d) {
      int sum = 0;
      for (int d2 = d; d2 <= d + cd; ++d2) sum += z[d2];
      if (sum > cd)
        add(Family::L3, r, d, 0, 0, "more than " + std::to_string(cd) + " worked days in the window");
    }
    const int streak = inst_.history_of(r).consecutive_worked_days;
    if (streak > 0) {
      const int j = std::min(streak, cd);
      const int lim = std::min(cd + 1 - j, inst_.grid.days);
      int sum = 0;
      for (int d = 1; d <= lim; ++d) sum += z[d];
      if (sum > cd - j)
        add(Family::L3, r, 1, 0, 0,
            "history streak of " + std::to_string(streak) + " days leaves only " +
                std::to_string(cd - j) + " worked days in the first window");
    }
  }

  // L6 between consecutive worked days, and against the history end slot for
  // day 1. Days off reset the rest count (canonical empty-day bounds).
  void check_rest(int r) {
    const int need = inst_.slots(inst_.rules.min_rest_minutes) - inst_.grid.slots_per_day();
    std::vector<DayBounds> bounds(inst_.grid.days + 1);
    for (int d = 1; d <= inst_.grid.days; ++d) bounds[d] = derive_day_bounds(x_, r, d);
    for (int d = 2; d <= inst_.grid.days; ++d) {
      if (!bounds[d].worked || !bounds[d - 1].worked) continue;
      if (bounds[d].begin_slot - bounds[d - 1].end_slot < need)
        add(Family::L6, r, d, bounds[d].begin_slot, bounds[d].begin_slot,
            "rest before day " + std::to_string(d) + " shorter than " +
                std::to_string(inst_.rules.min_rest_minutes) + " min");
    }
    const auto& hist = inst_.history_of(r);
    if (hist.last_worked_end_slot && bounds[1].worked &&
        bounds[1].begin_slot - *hist.last_worked_end_slot < need)
      add(Family::L6, r, 1, bounds[1].begin_slot, bounds[1].begin_slot,
          "rest after the previous schedule shorter than " +
              std::to_string(inst_.rules.min_rest_minutes) + " min");
  }

  const Instance& inst_;
  const Assignment& x_;
  ViolationReport* report_;
  bool ok_ = true;
};

}  // namespace detail

// Full combinatorial check of every constraint family.
inline ViolationReport check(const Instance& inst, const Assignment& x) {
  if (x.num_employees() != inst.num_employees() || x.num_activities() != inst.num_activities() ||
      x.num_slots() != inst.grid.num_slots() || x.days() != inst.grid.days)
    throw ValidationError("assignment dimensions do not match the instance");
  ViolationReport report;
  detail::Checker(inst, x, &report).run();
  return report;
}

// Early-exit variant for hot loops (greedy construction, enumeration).
inline bool feasible(const Instance& inst, const Assignment& x) {
  return detail::Checker(inst, x, nullptr).run();
}

// Early-exit check of a single employee's schedule.
inline bool feasible_for(const Instance& inst, const Assignment& x, int employee) {
  return detail::Checker(inst, x, nullptr).run(employee);
}

// Canonical per-demand slack: max(0, k - ts * covered cells in the window).
inline std::vector<std::int64_t> compute_slacks(const Instance& inst, const Assignment& x) {
  std::vector<std::int64_t> slack(inst.num_demands(), 0);
  for (int i = 0; i < inst.num_demands(); ++i) {
    const Demand& dem = inst.demands[i];
    long long covered = 0;
    for (int r = 0; r < inst.num_employees(); ++r)
      for (int t = dem.start_slot; t < dem.end_slot; ++t) covered += x.get(r, dem.activity, t, dem.day);
    slack[i] = std::max<std::int64_t>(0, dem.minutes - covered * inst.grid.ts);
  }
  return slack;
}

// Exact objective in internal units: K * sum p(a) * alpha + sum c(r,a) * x,
// with K = Instance::affinity_scale(). Slacks are always recomputed from x.
inline CostUnits objective_units(const Instance& inst, const Assignment& x) {
  const std::int64_t k = inst.affinity_scale();
  CostUnits units = 0;
  const auto slack = compute_slacks(inst, x);
  for (int i = 0; i < inst.num_demands(); ++i)
    units += k * inst.activities[inst.demands[i].activity].slack_penalty * slack[i];
  for (int r = 0; r < inst.num_employees(); ++r)
    for (int a = 0; a < inst.num_activities(); ++a) {
      const Micro c = inst.affinity_cost(r, a);
      if (c == 0) continue;
      for (int d = 1; d <= inst.grid.days; ++d)
        for (int t = inst.grid.first_slot; t <= inst.grid.last_slot; ++t)
          if (x.get(r, a, t, d)) units += c;
    }
  return units;
}

inline double objective_value(const Instance& inst, CostUnits units) {
  return static_cast<double>(units) /
         (static_cast<double>(inst.affinity_scale()) * static_cast<double>(kMicroScale));
}

inline Solution make_solution(const Instance& inst, Assignment x) {
  Solution s;
  s.slack_minutes = compute_slacks(inst, x);
  s.objective_units = objective_units(inst, x);
  s.assignment = std::move(x);
  return s;
}

inline CostUnits objective(const Instance& inst, const Solution& sol) {
  return objective_units(inst, sol.assignment);
}

// Table 2 style figures.
struct Metrics {
  double total_slack_hours = 0;
  int violation_count = 0;
  double department_satisfaction_pct = 100.0;
};

// Coverage aggregated per department: an employee on activity a counts toward
// a's department, and over-coverage of one task may offset another task of the
// same department (capping happens at department level). An empty map means a
// single department.
inline Metrics metrics(const Instance& inst, const Solution& sol,
                       const std::map<std::string, std::string>& department_map = {}) {
  Metrics out;
  const auto slack = compute_slacks(inst, sol.assignment);
  long long slack_minutes = 0;
  for (auto s : slack) slack_minutes += s;
  out.total_slack_hours = static_cast<double>(slack_minutes) / 60.0;
  out.violation_count = check(inst, sol.assignment).total();

  std::map<std::string, std::pair<long long, long long>> per_dept;  // covered, demanded
  for (const auto& dem : inst.demands) {
    const std::string& act_id = inst.activities[dem.activity].id;
    std::string dept = "all";
    if (!department_map.empty()) {
      auto it = department_map.find(act_id);
      if (it == department_map.end())
        throw ValidationError("department map: activity '" + act_id + "' is unmapped");
      dept = it->second;
    }
    long long covered = 0;
    for (int r = 0; r < inst.num_employees(); ++r)
      for (int t = dem.start_slot; t < dem.end_slot; ++t)
        covered += sol.assignment.get(r, dem.activity, t, dem.day);
    per_dept[dept].first += covered * inst.grid.ts;
    per_dept[dept].second += dem.minutes;
  }
  long long covered_total = 0, demanded_total = 0;
  for (const auto& [dept, cd] : per_dept) {
    covered_total += std::min(cd.first, cd.second);
    demanded_total += cd.second;
  }
  out.department_satisfaction_pct =
      demanded_total == 0 ? 100.0 : 100.0 * static_cast<double>(covered_total) / demanded_total;
  return out;
}

inline std::string format_minute(int slot, int ts) {
  const int m = slot * ts;
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02d:%02d", (m / 60) % 24, m % 60);
  return buf;
}

inline std::string format_report(const Instance& inst, const ViolationReport& report) {
  std::ostringstream os;
  os << "Violations: " << report.total() << "\n";
  for (int f = 0; f < kNumFamilies; ++f)
    if (report.counts[f] > 0)
      os << "  " << family_name(static_cast<Family>(f)) << ": " << report.counts[f] << "\n";
  for (const auto& v : report.violations) {
    os << "  [" << family_name(v.family) << "] " << inst.employees[v.employee].id;
    if (v.day > 0) os << " day " << v.day;
    if (v.slot_end > v.slot_begin)
      os << " " << format_minute(v.slot_begin, inst.grid.ts) << "-" << format_minute(v.slot_end, inst.grid.ts);
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

struct MetricsRow {
  std::string instance;
  std::string case_label;
  Metrics m;
};

// The comparison layout: Instance | Case | sum alpha [h] | Violations | Dept dem %.
inline std::string format_metrics_table(const std::vector<MetricsRow>& rows) {
  std::ostringstream os;
  os << "Instance  Case  Sum alpha [h]  Violations  Dept dem %\n";
  for (const auto& row : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-8s  %-4s  %13.1f  %10d  %9.1f%%\n", row.instance.c_str(),
                  row.case_label.c_str(), row.m.total_slack_hours, row.m.violation_count,
                  row.m.department_satisfaction_pct);
    os << line;
  }
  return os.str();
}

}  // namespace sdpts
