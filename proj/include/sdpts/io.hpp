#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdpts/assignment.hpp"
#include "sdpts/instance.hpp"
#include "sdpts/merge.hpp"
#include "sdpts/validator.hpp"

namespace sdpts {

// Documents are JSON, UTF-8, all times as minutes of day. Slot indices are
// never serialized so files survive a change of slot granularity. Saving is
// canonical and deterministic; load(save(x)) is the identity.

namespace iodetail {

using json = nlohmann::ordered_json;

inline json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_file(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

inline void expect_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw ValidationError(path + ": expected an object");
}

inline void expect_keys(const json& obj, const std::string& path,
                        std::initializer_list<const char*> keys) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) throw ValidationError(path + ": unknown field '" + it.key() + "'");
  }
}

inline const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path + ": missing field '" + key + "'");
  return *it;
}

inline long long get_int(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_number_integer()) throw ValidationError(path + "." + key + ": expected an integer");
  return v.get<long long>();
}

inline std::optional<long long> get_opt_int(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj[key];
  if (!v.is_number_integer()) throw ValidationError(path + "." + key + ": expected an integer");
  return v.get<long long>();
}

inline std::string get_str(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_string()) throw ValidationError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline Micro get_cost(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_number()) throw ValidationError(path + "." + key + ": expected a number");
  return micro_from_double(v.get<double>(), path + "." + key);
}

inline std::set<std::string> get_str_set(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_array()) throw ValidationError(path + "." + key + ": expected an array of strings");
  std::set<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw ValidationError(path + "." + key + ": expected an array of strings");
    out.insert(item.get<std::string>());
  }
  return out;
}

inline void check_schema_version(const json& doc, const std::string& path) {
  if (get_int(doc, path, "schema_version") != 1)
    throw ValidationError(path + ".schema_version: unsupported version");
}

// Minute-of-day pair -> slot window [start, end). End may be tn + 1.
inline std::pair<int, int> window_slots(const TimeGrid& g, const json& obj, const std::string& path) {
  const long long start = get_int(obj, path, "start_minute");
  const long long end = get_int(obj, path, "end_minute");
  if (start % g.ts != 0 || end % g.ts != 0)
    throw ValidationError(path + ": window minutes must be multiples of ts=" + std::to_string(g.ts));
  const int s = static_cast<int>(start / g.ts);
  const int e = static_cast<int>(end / g.ts);
  if (s < g.first_slot || e > g.last_slot + 1)
    throw ValidationError(path + ": window leaves the grid");
  return {s, e};
}

}  // namespace iodetail

inline CheckoutRole checkout_role_from_string(const std::string& s, const std::string& path) {
  if (s == "none") return CheckoutRole::None;
  if (s == "opCAS") return CheckoutRole::Open;
  if (s == "clCAS") return CheckoutRole::Close;
  throw ValidationError(path + ": checkout_role must be none, opCAS or clCAS");
}

inline Instance load_instance(const std::string& path) {
  using namespace iodetail;
  const json doc = parse_file(path);
  expect_object(doc, path);
  expect_keys(doc, path,
              {"schema_version", "grid", "rules", "activities", "employees", "demands", "history",
               "affinity"});
  check_schema_version(doc, path);

  Instance inst;
  {
    const json& g = field(doc, path, "grid");
    expect_object(g, "grid");
    expect_keys(g, "grid", {"slot_minutes", "start_minute", "end_minute", "days"});
    inst.grid.ts = static_cast<int>(get_int(g, "grid", "slot_minutes"));
    if (inst.grid.ts <= 0 || 1440 % inst.grid.ts != 0)
      throw ValidationError("grid.slot_minutes: ts must divide 1440");
    const long long start = get_int(g, "grid", "start_minute");
    const long long end = get_int(g, "grid", "end_minute");
    if (start % inst.grid.ts != 0 || end % inst.grid.ts != 0 || start >= end || start < 0 || end > 1440)
      throw ValidationError("grid: window must be ts-aligned minutes of one day with start < end");
    inst.grid.first_slot = static_cast<int>(start / inst.grid.ts);
    inst.grid.last_slot = static_cast<int>(end / inst.grid.ts) - 1;
    inst.grid.days = static_cast<int>(get_int(g, "grid", "days"));
  }
  {
    const json& rules = field(doc, path, "rules");
    expect_object(rules, "rules");
    expect_keys(rules, "rules",
                {"max_daily_minutes", "max_horizon_minutes", "max_consecutive_days",
                 "max_stretch_minutes", "min_break_minutes", "max_daily_span_minutes",
                 "min_rest_minutes", "min_work_after_break_minutes", "max_daily_breaks"});
    inst.rules.max_daily_minutes = static_cast<int>(get_int(rules, "rules", "max_daily_minutes"));
    inst.rules.max_horizon_minutes = static_cast<int>(get_int(rules, "rules", "max_horizon_minutes"));
    inst.rules.max_consecutive_days = static_cast<int>(get_int(rules, "rules", "max_consecutive_days"));
    inst.rules.max_stretch_minutes = static_cast<int>(get_int(rules, "rules", "max_stretch_minutes"));
    inst.rules.min_break_minutes = static_cast<int>(get_int(rules, "rules", "min_break_minutes"));
    inst.rules.max_daily_span_minutes =
        static_cast<int>(get_int(rules, "rules", "max_daily_span_minutes"));
    inst.rules.min_rest_minutes = static_cast<int>(get_int(rules, "rules", "min_rest_minutes"));
    inst.rules.min_work_after_break_minutes =
        static_cast<int>(get_int(rules, "rules", "min_work_after_break_minutes"));
    if (auto breaks = get_opt_int(rules, "rules", "max_daily_breaks"))
      inst.rules.max_daily_breaks = static_cast<int>(*breaks);
  }

  const json& acts = field(doc, path, "activities");
  if (!acts.is_array()) throw ValidationError("activities: expected an array");
  for (std::size_t i = 0; i < acts.size(); ++i) {
    const std::string where = "activities[" + std::to_string(i) + "]";
    expect_object(acts[i], where);
    expect_keys(acts[i], where,
                {"id", "required_skills", "min_consecutive_minutes", "slack_penalty", "checkout_role"});
    Activity a;
    a.id = get_str(acts[i], where, "id");
    a.required_skills = get_str_set(acts[i], where, "required_skills");
    if (acts[i].contains("min_consecutive_minutes"))
      a.min_consecutive_minutes = static_cast<int>(get_int(acts[i], where, "min_consecutive_minutes"));
    a.slack_penalty = get_cost(acts[i], where, "slack_penalty");
    if (acts[i].contains("checkout_role"))
      a.checkout_role = checkout_role_from_string(get_str(acts[i], where, "checkout_role"), where);
    inst.activities.push_back(std::move(a));
  }

  const json& emps = field(doc, path, "employees");
  if (!emps.is_array()) throw ValidationError("employees: expected an array");
  for (std::size_t i = 0; i < emps.size(); ++i) {
    const std::string where = "employees[" + std::to_string(i) + "]";
    expect_object(emps[i], where);
    expect_keys(emps[i], where, {"id", "skills", "max_horizon_minutes", "available"});
    Employee e;
    e.id = get_str(emps[i], where, "id");
    e.skills = get_str_set(emps[i], where, "skills");
    if (auto cap = get_opt_int(emps[i], where, "max_horizon_minutes"))
      e.max_horizon_minutes = static_cast<int>(*cap);
    if (emps[i].contains("available")) {
      const json& windows = emps[i]["available"];
      if (!windows.is_array()) throw ValidationError(where + ".available: expected an array");
      e.available.assign(static_cast<std::size_t>(inst.grid.days) * inst.grid.num_slots(), 0);
      for (std::size_t w = 0; w < windows.size(); ++w) {
        const std::string wpath = where + ".available[" + std::to_string(w) + "]";
        expect_object(windows[w], wpath);
        expect_keys(windows[w], wpath, {"day", "start_minute", "end_minute"});
        const int day = static_cast<int>(get_int(windows[w], wpath, "day"));
        if (!inst.grid.contains_day(day)) throw ValidationError(wpath + ".day: outside horizon");
        const auto [s, eend] = iodetail::window_slots(inst.grid, windows[w], wpath);
        if (s >= eend) throw ValidationError(wpath + ": empty window");
        for (int t = s; t < eend; ++t)
          e.available[static_cast<std::size_t>(day - 1) * inst.grid.num_slots() +
                      (t - inst.grid.first_slot)] = 1;
      }
    }
    inst.employees.push_back(std::move(e));
  }

  const json& dems = field(doc, path, "demands");
  if (!dems.is_array()) throw ValidationError("demands: expected an array");
  for (std::size_t i = 0; i < dems.size(); ++i) {
    const std::string where = "demands[" + std::to_string(i) + "]";
    expect_object(dems[i], where);
    expect_keys(dems[i], where, {"activity", "day", "start_minute", "end_minute", "minutes"});
    Demand d;
    const std::string act = get_str(dems[i], where, "activity");
    d.activity = -1;
    for (int a = 0; a < inst.num_activities(); ++a)
      if (inst.activities[a].id == act) d.activity = a;
    if (d.activity < 0) throw ValidationError(where + ".activity: unknown activity '" + act + "'");
    d.day = static_cast<int>(get_int(dems[i], where, "day"));
    if (!inst.grid.contains_day(d.day)) throw ValidationError(where + ".day: outside horizon");
    const long long start = get_int(dems[i], where, "start_minute");
    const long long end = get_int(dems[i], where, "end_minute");
    if (start >= end) throw ValidationError(where + ": demand interval is empty (start must precede end)");
    if (start % inst.grid.ts != 0 || end % inst.grid.ts != 0)
      throw ValidationError(where + ": demand interval must be ts-aligned");
    d.start_slot = static_cast<int>(start / inst.grid.ts);
    d.end_slot = static_cast<int>(end / inst.grid.ts);
    d.minutes = get_int(dems[i], where, "minutes");
    inst.demands.push_back(d);
  }

  if (doc.contains("history")) {
    const json& hist = doc["history"];
    if (!hist.is_array()) throw ValidationError("history: expected an array");
    inst.history.resize(inst.employees.size());
    for (std::size_t i = 0; i < hist.size(); ++i) {
      const std::string where = "history[" + std::to_string(i) + "]";
      expect_object(hist[i], where);
      expect_keys(hist[i], where,
                  {"employee", "last_worked_end_minute", "consecutive_worked_days", "minutes_worked"});
      const std::string id = get_str(hist[i], where, "employee");
      int r = -1;
      for (int j = 0; j < inst.num_employees(); ++j)
        if (inst.employees[j].id == id) r = j;
      if (r < 0) throw ValidationError(where + ".employee: unknown employee '" + id + "'");
      EmployeeHistory& h = inst.history[r];
      if (auto end = get_opt_int(hist[i], where, "last_worked_end_minute")) {
        if (*end % inst.grid.ts != 0)
          throw ValidationError(where + ".last_worked_end_minute: must be a multiple of ts");
        h.last_worked_end_slot = static_cast<int>(*end / inst.grid.ts);
      }
      if (auto days = get_opt_int(hist[i], where, "consecutive_worked_days"))
        h.consecutive_worked_days = static_cast<int>(*days);
      if (auto minutes = get_opt_int(hist[i], where, "minutes_worked")) h.minutes_worked = *minutes;
    }
  }

  if (doc.contains("affinity")) {
    const json& aff = doc["affinity"];
    if (!aff.is_array()) throw ValidationError("affinity: expected an array");
    inst.affinity.assign(static_cast<std::size_t>(inst.num_employees()) * inst.num_activities(), 0);
    for (std::size_t i = 0; i < aff.size(); ++i) {
      const std::string where = "affinity[" + std::to_string(i) + "]";
      expect_object(aff[i], where);
      expect_keys(aff[i], where, {"employee", "activity", "cost"});
      const std::string emp = get_str(aff[i], where, "employee");
      const std::string act = get_str(aff[i], where, "activity");
      int r = -1, a = -1;
      for (int j = 0; j < inst.num_employees(); ++j)
        if (inst.employees[j].id == emp) r = j;
      for (int j = 0; j < inst.num_activities(); ++j)
        if (inst.activities[j].id == act) a = j;
      if (r < 0) throw ValidationError(where + ".employee: unknown employee '" + emp + "'");
      if (a < 0) throw ValidationError(where + ".activity: unknown activity '" + act + "'");
      inst.affinity[static_cast<std::size_t>(r) * inst.num_activities() + a] =
          get_cost(aff[i], where, "cost");
    }
  }

  inst.finalize();
  return inst;
}

inline void save_instance(const Instance& inst, const std::string& path) {
  using namespace iodetail;
  json doc;
  doc["schema_version"] = 1;
  doc["grid"] = {{"slot_minutes", inst.grid.ts},
                 {"start_minute", inst.grid.minute_of_slot(inst.grid.first_slot)},
                 {"end_minute", inst.grid.minute_of_slot(inst.grid.last_slot + 1)},
                 {"days", inst.grid.days}};
  json rules;
  rules["max_daily_minutes"] = inst.rules.max_daily_minutes;
  rules["max_horizon_minutes"] = inst.rules.max_horizon_minutes;
  rules["max_consecutive_days"] = inst.rules.max_consecutive_days;
  rules["max_stretch_minutes"] = inst.rules.max_stretch_minutes;
  rules["min_break_minutes"] = inst.rules.min_break_minutes;
  rules["max_daily_span_minutes"] = inst.rules.max_daily_span_minutes;
  rules["min_rest_minutes"] = inst.rules.min_rest_minutes;
  rules["min_work_after_break_minutes"] = inst.rules.min_work_after_break_minutes;
  if (inst.rules.max_daily_breaks) rules["max_daily_breaks"] = *inst.rules.max_daily_breaks;
  doc["rules"] = std::move(rules);

  doc["activities"] = json::array();
  for (const auto& a : inst.activities) {
    json obj;
    obj["id"] = a.id;
    obj["required_skills"] = a.required_skills;
    if (a.min_consecutive_minutes != 0) obj["min_consecutive_minutes"] = a.min_consecutive_minutes;
    obj["slack_penalty"] = micro_to_double(a.slack_penalty);
    if (a.checkout_role != CheckoutRole::None) obj["checkout_role"] = to_string(a.checkout_role);
    doc["activities"].push_back(std::move(obj));
  }

  doc["employees"] = json::array();
  for (const auto& e : inst.employees) {
    json obj;
    obj["id"] = e.id;
    obj["skills"] = e.skills;
    if (e.max_horizon_minutes) obj["max_horizon_minutes"] = *e.max_horizon_minutes;
    bool all = true;
    for (auto v : e.available) all = all && v;
    if (!all) {
      json windows = json::array();
      for (int d = 1; d <= inst.grid.days; ++d) {
        int start = -1;
        for (int t = inst.grid.first_slot; t <= inst.grid.last_slot + 1; ++t) {
          const bool on = t <= inst.grid.last_slot && e.available_at(inst.grid, t, d);
          if (on && start < 0) start = t;
          if (!on && start >= 0) {
            windows.push_back({{"day", d},
                               {"start_minute", inst.grid.minute_of_slot(start)},
                               {"end_minute", inst.grid.minute_of_slot(t)}});
            start = -1;
          }
        }
      }
      obj["available"] = std::move(windows);
    }
    doc["employees"].push_back(std::move(obj));
  }

  doc["demands"] = json::array();
  for (const auto& d : inst.demands)
    doc["demands"].push_back({{"activity", inst.activities[d.activity].id},
                              {"day", d.day},
                              {"start_minute", inst.grid.minute_of_slot(d.start_slot)},
                              {"end_minute", inst.grid.minute_of_slot(d.end_slot)},
                              {"minutes", d.minutes}});

  json hist = json::array();
  for (int r = 0; r < inst.num_employees(); ++r) {
    const auto& h = inst.history_of(r);
    if (!h.last_worked_end_slot && h.consecutive_worked_days == 0 && h.minutes_worked == 0) continue;
    json obj;
    obj["employee"] = inst.employees[r].id;
    if (h.last_worked_end_slot)
      obj["last_worked_end_minute"] = inst.grid.minute_of_slot(*h.last_worked_end_slot);
    if (h.consecutive_worked_days != 0) obj["consecutive_worked_days"] = h.consecutive_worked_days;
    if (h.minutes_worked != 0) obj["minutes_worked"] = h.minutes_worked;
    hist.push_back(std::move(obj));
  }
  if (!hist.empty()) doc["history"] = std::move(hist);

  json aff = json::array();
  for (int r = 0; r < inst.num_employees(); ++r)
    for (int a = 0; a < inst.num_activities(); ++a)
      if (inst.affinity_cost(r, a) != 0)
        aff.push_back({{"employee", inst.employees[r].id},
                       {"activity", inst.activities[a].id},
                       {"cost", micro_to_double(inst.affinity_cost(r, a))}});
  if (!aff.empty()) doc["affinity"] = std::move(aff);

  write_file(doc, path);
}

inline void save_solution(const Instance& inst, const Solution& sol, const std::string& path) {
  using namespace iodetail;
  json doc;
  doc["schema_version"] = 1;
  doc["shifts"] = json::array();
  for (int r = 0; r < inst.num_employees(); ++r)
    for (int d = 1; d <= inst.grid.days; ++d) {
      const DayBounds bounds = derive_day_bounds(sol.assignment, r, d);
      if (!bounds.worked) continue;
      json shift;
      shift["employee"] = inst.employees[r].id;
      shift["day"] = d;
      shift["start_minute"] = inst.grid.minute_of_slot(bounds.begin_slot);
      shift["end_minute"] = inst.grid.minute_of_slot(bounds.end_slot);
      shift["segments"] = json::array();
      for (const auto& seg : activity_segments(sol.assignment, r, d))
        shift["segments"].push_back({{"activity", inst.activities[seg.activity].id},
                                     {"start_minute", inst.grid.minute_of_slot(seg.start_slot)},
                                     {"end_minute", inst.grid.minute_of_slot(seg.end_slot)}});
      doc["shifts"].push_back(std::move(shift));
    }

  doc["slacks"] = json::array();
  const auto slack = compute_slacks(inst, sol.assignment);
  for (int i = 0; i < inst.num_demands(); ++i) {
    const Demand& dem = inst.demands[i];
    doc["slacks"].push_back({{"activity", inst.activities[dem.activity].id},
                             {"day", dem.day},
                             {"start_minute", inst.grid.minute_of_slot(dem.start_slot)},
                             {"end_minute", inst.grid.minute_of_slot(dem.end_slot)},
                             {"minutes", slack[i]}});
  }
  doc["objective"] = objective_value(inst, sol.objective_units);
  write_file(doc, path);
}

inline Solution load_solution(const std::string& path, const Instance& inst) {
  using namespace iodetail;
  const json doc = parse_file(path);
  expect_object(doc, path);
  expect_keys(doc, path, {"schema_version", "shifts", "slacks", "objective"});
  check_schema_version(doc, path);

  Assignment x(inst);
  const json& shifts = field(doc, path, "shifts");
  if (!shifts.is_array()) throw ValidationError("shifts: expected an array");
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const std::string where = "shifts[" + std::to_string(i) + "]";
    expect_object(shifts[i], where);
    expect_keys(shifts[i], where, {"employee", "day", "start_minute", "end_minute", "segments"});
    const int r = inst.employee_index(get_str(shifts[i], where, "employee"));
    const int d = static_cast<int>(get_int(shifts[i], where, "day"));
    if (!inst.grid.contains_day(d)) throw ValidationError(where + ".day: outside horizon");
    const auto [shift_start, shift_end] = window_slots(inst.grid, shifts[i], where);
    const json& segments = field(shifts[i], where, "segments");
    if (!segments.is_array()) throw ValidationError(where + ".segments: expected an array");
    for (std::size_t j = 0; j < segments.size(); ++j) {
      const std::string spath = where + ".segments[" + std::to_string(j) + "]";
      expect_object(segments[j], spath);
      expect_keys(segments[j], spath, {"activity", "start_minute", "end_minute"});
      const int a = inst.activity_index(get_str(segments[j], spath, "activity"));
      const auto [s, e] = window_slots(inst.grid, segments[j], spath);
      if (s >= e) throw ValidationError(spath + ": empty segment");
      if (s < shift_start || e > shift_end)
        throw ValidationError(spath + ": segment outside the shift bounds");
      for (int t = s; t < e; ++t) x.set(r, a, t, d, true);
    }
  }

  if (doc.contains("slacks")) {
    const json& slacks = doc["slacks"];
    if (!slacks.is_array()) throw ValidationError("slacks: expected an array");
    for (std::size_t i = 0; i < slacks.size(); ++i) {
      const std::string where = "slacks[" + std::to_string(i) + "]";
      expect_object(slacks[i], where);
      expect_keys(slacks[i], where, {"activity", "day", "start_minute", "end_minute", "minutes"});
      // Stored slack values are advisory; only the demand reference is checked.
      const int a = inst.activity_index(get_str(slacks[i], where, "activity"));
      const int d = static_cast<int>(get_int(slacks[i], where, "day"));
      const auto [s, e] = window_slots(inst.grid, slacks[i], where);
      bool found = false;
      for (const auto& dem : inst.demands)
        found = found || (dem.activity == a && dem.day == d && dem.start_slot == s && dem.end_slot == e);
      if (!found) throw ValidationError(where + ": no such demand in the instance");
    }
  }
  return make_solution(inst, std::move(x));
}

inline void save_merge_plan(const MergePlan& plan, const std::string& path) {
  using namespace iodetail;
  json doc;
  doc["schema_version"] = 1;
  doc["groups"] = json::array();
  for (const auto& g : plan.groups)
    doc["groups"].push_back({{"macro", g.macro_id}, {"members", g.members}});
  write_file(doc, path);
}

inline MergePlan load_merge_plan(const std::string& path) {
  using namespace iodetail;
  const json doc = parse_file(path);
  expect_object(doc, path);
  expect_keys(doc, path, {"schema_version", "groups"});
  check_schema_version(doc, path);
  MergePlan plan;
  const json& groups = field(doc, path, "groups");
  if (!groups.is_array()) throw ValidationError("groups: expected an array");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const std::string where = "groups[" + std::to_string(i) + "]";
    expect_object(groups[i], where);
    expect_keys(groups[i], where, {"macro", "members"});
    MergeGroup g;
    g.macro_id = get_str(groups[i], where, "macro");
    const json& members = field(groups[i], where, "members");
    if (!members.is_array()) throw ValidationError(where + ".members: expected an array");
    for (const auto& m : members) {
      if (!m.is_string()) throw ValidationError(where + ".members: expected strings");
      g.members.push_back(m.get<std::string>());
    }
    plan.groups.push_back(std::move(g));
  }
  return plan;
}

inline std::map<std::string, std::string> load_department_map(const std::string& path) {
  using namespace iodetail;
  const json doc = parse_file(path);
  expect_object(doc, path);
  expect_keys(doc, path, {"schema_version", "departments"});
  check_schema_version(doc, path);
  const json& depts = field(doc, path, "departments");
  expect_object(depts, "departments");
  std::map<std::string, std::string> out;
  for (auto it = depts.begin(); it != depts.end(); ++it) {
    if (!it.value().is_string()) throw ValidationError("departments: values must be strings");
    out[it.key()] = it.value().get<std::string>();
  }
  return out;
}

}  // namespace sdpts
