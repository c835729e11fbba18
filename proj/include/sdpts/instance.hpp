#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sdpts/error.hpp"
#include "sdpts/time_grid.hpp"

namespace sdpts {

// Costs are fixed point with six decimal places so objective comparisons are
// exact. One Micro = 1e-6 cost units.
using Micro = std::int64_t;
constexpr Micro kMicroScale = 1'000'000;

// Exact objective value in internal units; see Instance::affinity_scale().
using CostUnits = std::int64_t;

inline Micro micro_from_double(double v, const std::string& where) {
  if (!(v >= 0.0))
    throw ValidationError(where + ": cost must be a nonnegative number");
  const long double scaled = static_cast<long double>(v) * kMicroScale;
  if (scaled > 9.0e15L) throw ValidationError(where + ": cost too large");
  const Micro m = static_cast<Micro>(llroundl(scaled));
  if (fabsl(scaled - static_cast<long double>(m)) > 1e-3L)
    throw ValidationError(where + ": at most six decimal places are supported");
  return m;
}

inline double micro_to_double(Micro m) { return static_cast<double>(m) / kMicroScale; }

enum class CheckoutRole { None, Open, Close };  // none / opCAS / clCAS

inline std::string to_string(CheckoutRole r) {
  switch (r) {
    case CheckoutRole::Open: return "opCAS";
    case CheckoutRole::Close: return "clCAS";
    default: return "none";
  }
}

struct Employee {
  std::string id;
  std::set<std::string> skills;
  // Optional per-employee override of RuleSet::max_horizon_minutes.
  std::optional<int> max_horizon_minutes;
  // Availability matrix cRTD, row major: (day-1) * |T| + (t - first_slot).
  // Empty means available everywhere.
  std::vector<std::uint8_t> available;

  bool available_at(const TimeGrid& g, int t, int d) const {
    if (available.empty()) return true;
    return available[static_cast<std::size_t>(d - 1) * g.num_slots() + (t - g.first_slot)] != 0;
  }
};

struct Activity {
  std::string id;
  std::set<std::string> required_skills;
  int min_consecutive_minutes = 0;   // G3 floor, multiple of ts
  Micro slack_penalty = 0;           // p(a), cost per unmet minute
  CheckoutRole checkout_role = CheckoutRole::None;
};

// Demand window [start_slot, end_slot) on one day asking for `minutes` of
// work on the activity. `minutes` may exceed the window length: several
// employees are then needed simultaneously.
struct Demand {
  int activity = 0;  // index into Instance::activities
  int day = 1;
  int start_slot = 0;
  int end_slot = 0;  // exclusive
  std::int64_t minutes = 0;
};

struct RuleSet {
  int max_daily_minutes = 1440;            // L1 (DH)
  int max_horizon_minutes = 1440 * 7;      // L2 (WH)
  int max_consecutive_days = 7;            // L3 (CD), a day count
  int max_stretch_minutes = 1440;          // L4 (WT1)
  int min_break_minutes = 0;               // L4 (WT2)
  int max_daily_span_minutes = 1440;       // L5 (DS)
  int min_rest_minutes = 0;                // L6 (mr)
  int min_work_after_break_minutes = 0;    // G1 (wt)
  std::optional<int> max_daily_breaks;     // prose-only company rule, validator only
};

struct EmployeeHistory {
  // End slot (exclusive) of the last shift worked on the day before day 1.
  std::optional<int> last_worked_end_slot;
  int consecutive_worked_days = 0;
  std::int64_t minutes_worked = 0;  // in the current accounting period
};

// Complete problem input. Fill the public fields and call finalize() once;
// afterwards the instance is immutable and safe to share across threads.
class Instance {
 public:
  TimeGrid grid;
  std::vector<Employee> employees;
  std::vector<Activity> activities;
  std::vector<Demand> demands;
  RuleSet rules;
  std::vector<EmployeeHistory> history;  // parallel to employees; may be empty
  std::vector<Micro> affinity;           // c(r,a) row major r*|A|+a; may be empty

  int num_employees() const { return static_cast<int>(employees.size()); }
  int num_activities() const { return static_cast<int>(activities.size()); }
  int num_demands() const { return static_cast<int>(demands.size()); }

  Micro affinity_cost(int r, int a) const {
    if (affinity.empty()) return 0;
    return affinity[static_cast<std::size_t>(r) * num_activities() + a];
  }

  int employee_index(const std::string& id) const {
    auto it = employee_index_.find(id);
    if (it == employee_index_.end()) throw IdentifierError("unknown employee id: " + id);
    return it->second;
  }
  int activity_index(const std::string& id) const {
    auto it = activity_index_.find(id);
    if (it == activity_index_.end()) throw IdentifierError("unknown activity id: " + id);
    return it->second;
  }

  std::optional<int> opcas_activity() const { return opcas_; }
  std::optional<int> clcas_activity() const { return clcas_; }

  bool compatible(int r, int a) const {
    const auto& need = activities[a].required_skills;
    const auto& have = employees[r].skills;
    return std::includes(have.begin(), have.end(), need.begin(), need.end());
  }

  int slots(int minutes) const { return minutes / grid.ts; }

  // L2 cap for employee r in slots, with worked history folded in and clamped
  // at zero (an employee who already exhausted the horizon gets no work).
  long long horizon_slot_cap(int r) const {
    const long long limit = employees[r].max_horizon_minutes
                                ? *employees[r].max_horizon_minutes
                                : rules.max_horizon_minutes;
    const long long left = limit - history_of(r).minutes_worked;
    return std::max<long long>(0, left / grid.ts);
  }

  const EmployeeHistory& history_of(int r) const {
    static const EmployeeHistory kEmpty{};
    if (history.empty()) return kEmpty;
    return history[r];
  }

  // Scale K applied to the affinity costs: the model and the validator price
  // a worked slot at c(r,a)/K. K is chosen so the whole affinity term can
  // never outweigh one slot of demand slack at the lowest priority:
  //   |R| * |T| * |D| * max_c / K  <  min_a p(a) * ts
  // (at most one activity per slot bounds the number of priced cells). K is
  // derived only from merge-invariant quantities so objective values stay
  // comparable across activity merging.
  std::int64_t affinity_scale() const { return affinity_scale_; }

  void finalize();

 private:
  std::map<std::string, int> employee_index_;
  std::map<std::string, int> activity_index_;
  std::optional<int> opcas_;
  std::optional<int> clcas_;
  std::int64_t affinity_scale_ = 1;
};

inline void Instance::finalize() {
  validate_grid(grid);
  if (employees.empty()) throw ValidationError("employees: empty instance, need at least one employee");
  if (activities.empty()) throw ValidationError("activities: empty instance, need at least one activity");

  const int num_t = grid.num_slots();
  const auto check_step = [&](int minutes, const std::string& where) {
    if (minutes < 0) throw ValidationError(where + ": must be nonnegative");
    if (minutes % grid.ts != 0)
      throw ValidationError(where + ": " + std::to_string(minutes) + " is not a multiple of ts=" +
                            std::to_string(grid.ts));
  };

  employee_index_.clear();
  for (int r = 0; r < num_employees(); ++r) {
    auto& emp = employees[r];
    const std::string where = "employees[" + std::to_string(r) + "]";
    if (emp.id.empty()) throw ValidationError(where + ".id: empty");
    if (!employee_index_.emplace(emp.id, r).second)
      throw ValidationError(where + ".id: duplicate id '" + emp.id + "'");
    if (emp.max_horizon_minutes) check_step(*emp.max_horizon_minutes, where + ".max_horizon_minutes");
    if (emp.available.empty())
      emp.available.assign(static_cast<std::size_t>(grid.days) * num_t, 1);
    else if (emp.available.size() != static_cast<std::size_t>(grid.days) * num_t)
      throw ValidationError(where + ".available: matrix must cover every (slot, day)");
  }

  activity_index_.clear();
  opcas_.reset();
  clcas_.reset();
  for (int a = 0; a < num_activities(); ++a) {
    const auto& act = activities[a];
    const std::string where = "activities[" + std::to_string(a) + "]";
    if (act.id.empty()) throw ValidationError(where + ".id: empty");
    if (!activity_index_.emplace(act.id, a).second)
      throw ValidationError(where + ".id: duplicate id '" + act.id + "'");
    check_step(act.min_consecutive_minutes, where + ".min_consecutive_minutes");
    if (act.slack_penalty < 0) throw ValidationError(where + ".slack_penalty: negative");
    if (act.checkout_role == CheckoutRole::Open) {
      if (opcas_) throw ValidationError(where + ".checkout_role: more than one opCAS activity");
      opcas_ = a;
    } else if (act.checkout_role == CheckoutRole::Close) {
      if (clcas_) throw ValidationError(where + ".checkout_role: more than one clCAS activity");
      clcas_ = a;
    }
  }

  // Demands: windows on the grid, nonoverlapping per activity and day.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> windows;
  for (int i = 0; i < num_demands(); ++i) {
    const auto& dem = demands[i];
    const std::string where = "demands[" + std::to_string(i) + "]";
    if (dem.activity < 0 || dem.activity >= num_activities())
      throw ValidationError(where + ".activity: index out of range");
    if (!grid.contains_day(dem.day)) throw ValidationError(where + ".day: outside horizon");
    if (dem.start_slot >= dem.end_slot)
      throw ValidationError(where + ": demand interval is empty (start must precede end)");
    if (!grid.contains_slot(dem.start_slot) || dem.end_slot > grid.last_slot + 1)
      throw ValidationError(where + ": demand interval leaves the grid window");
    if (dem.minutes < 0) throw ValidationError(where + ".minutes: negative");
    windows[{dem.activity, dem.day}].emplace_back(dem.start_slot, dem.end_slot);
  }
  for (auto& [key, spans] : windows) {
    std::sort(spans.begin(), spans.end());
    for (std::size_t j = 1; j < spans.size(); ++j)
      if (spans[j].first < spans[j - 1].second)
        throw ValidationError("demands: overlapping windows for activity '" +
                              activities[key.first].id + "' on day " + std::to_string(key.second));
  }

  check_step(rules.max_daily_minutes, "rules.max_daily_minutes");
  check_step(rules.max_horizon_minutes, "rules.max_horizon_minutes");
  check_step(rules.max_stretch_minutes, "rules.max_stretch_minutes");
  check_step(rules.min_break_minutes, "rules.min_break_minutes");
  check_step(rules.max_daily_span_minutes, "rules.max_daily_span_minutes");
  check_step(rules.min_rest_minutes, "rules.min_rest_minutes");
  check_step(rules.min_work_after_break_minutes, "rules.min_work_after_break_minutes");
  if (rules.max_consecutive_days < 1)
    throw ValidationError("rules.max_consecutive_days: need at least one day");
  if (rules.max_daily_span_minutes > 1440)
    throw ValidationError("rules.max_daily_span_minutes: exceeds one day");
  if (rules.min_rest_minutes > 1440)
    throw ValidationError("rules.min_rest_minutes: exceeds one day");
  if (rules.max_daily_breaks && *rules.max_daily_breaks < 0)
    throw ValidationError("rules.max_daily_breaks: negative");

  if (history.empty()) history.resize(employees.size());
  if (history.size() != employees.size())
    throw ValidationError("history: must be empty or parallel to employees");
  for (std::size_t r = 0; r < history.size(); ++r) {
    const auto& h = history[r];
    const std::string where = "history[" + employees[r].id + "]";
    if (h.consecutive_worked_days < 0) throw ValidationError(where + ".consecutive_worked_days: negative");
    if (h.minutes_worked < 0) throw ValidationError(where + ".minutes_worked: negative");
    if (h.last_worked_end_slot &&
        (*h.last_worked_end_slot < grid.first_slot || *h.last_worked_end_slot > grid.last_slot + 1))
      throw ValidationError(where + ".last_worked_end_minute: outside the grid window");
  }

  if (affinity.empty())
    affinity.assign(static_cast<std::size_t>(num_employees()) * num_activities(), 0);
  if (affinity.size() != static_cast<std::size_t>(num_employees()) * num_activities())
    throw ValidationError("affinity: must cover every (employee, activity) pair");
  Micro max_c = 0;
  for (int r = 0; r < num_employees(); ++r)
    for (int a = 0; a < num_activities(); ++a) {
      const Micro c = affinity_cost(r, a);
      if (c < 0) throw ValidationError("affinity[" + employees[r].id + "," + activities[a].id + "]: negative");
      if (c > 0 && !compatible(r, a))
        throw ValidationError("affinity[" + employees[r].id + "," + activities[a].id +
                              "]: cost on an incompatible pair");
      max_c = std::max(max_c, c);
    }

  Micro min_p = activities.front().slack_penalty;
  for (const auto& act : activities) min_p = std::min(min_p, act.slack_penalty);

  if (max_c == 0) {
    affinity_scale_ = 1;
  } else {
    const unsigned __int128 cells = static_cast<unsigned __int128>(num_employees()) * num_t * grid.days;
    const unsigned __int128 numer = cells * static_cast<unsigned __int128>(max_c);
    const unsigned __int128 denom =
        std::max<unsigned __int128>(1, static_cast<unsigned __int128>(min_p) * grid.ts);
    const unsigned __int128 k = numer / denom + 1;
    if (k > (static_cast<unsigned __int128>(1) << 50))
      throw ValidationError("affinity: cost magnitudes too large for exact objective arithmetic");
    affinity_scale_ = static_cast<std::int64_t>(k);
  }

  // Guard the exact objective arithmetic: K * p * total demand minutes and the
  // affinity sum must both fit comfortably in 64 bits.
  Micro max_p = 0;
  for (const auto& act : activities) max_p = std::max(max_p, act.slack_penalty);
  unsigned __int128 total_k = 0;
  for (const auto& dem : demands) total_k += static_cast<unsigned __int128>(dem.minutes);
  const unsigned __int128 worst = static_cast<unsigned __int128>(affinity_scale_) *
                                      static_cast<unsigned __int128>(max_p) * (total_k + 1) +
                                  static_cast<unsigned __int128>(num_employees()) * num_t * grid.days *
                                      static_cast<unsigned __int128>(max_c);
  if (worst > (static_cast<unsigned __int128>(1) << 62))
    throw ValidationError("costs/demands too large for exact objective arithmetic");
}

}  // namespace sdpts
