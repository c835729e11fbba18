#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sdpts/compatibility.hpp"
#include "sdpts/instance.hpp"
#include "sdpts/validator.hpp"

namespace sdpts {

// A group of identical activities collapsed into one macro activity. The
// macro keeps the lexicographically smallest member id (and that member's
// slot in the activity list), so plans round-trip through documents by id.
struct MergeGroup {
  std::string macro_id;
  std::vector<std::string> members;  // sorted, includes macro_id
};

struct MergePlan {
  std::vector<MergeGroup> groups;
  bool empty() const { return groups.empty(); }
};

// Rebuilds the reduced instance from a plan: member activities disappear,
// their demands are relabelled to the macro. Deterministic, so a plan saved
// next to a reduced instance reproduces it exactly.
inline Instance apply_merge_plan(const Instance& inst, const MergePlan& plan) {
  std::map<std::string, std::string> to_macro;  // member id -> macro id
  for (const auto& group : plan.groups) {
    if (group.members.size() < 2) throw ValidationError("merge plan: group needs at least two members");
    for (const auto& id : group.members) {
      inst.activity_index(id);  // must exist
      if (!to_macro.emplace(id, group.macro_id).second)
        throw ValidationError("merge plan: activity '" + id + "' appears in two groups");
    }
    if (to_macro.at(group.macro_id) != group.macro_id)
      throw ValidationError("merge plan: macro id '" + group.macro_id + "' must be one of the members");
  }

  Instance out;
  out.grid = inst.grid;
  out.employees = inst.employees;
  out.rules = inst.rules;
  out.history = inst.history;

  std::vector<int> kept;  // original activity indices surviving the merge
  for (int a = 0; a < inst.num_activities(); ++a) {
    const std::string& id = inst.activities[a].id;
    auto it = to_macro.find(id);
    if (it == to_macro.end() || it->second == id) kept.push_back(a);
  }
  for (int a : kept) out.activities.push_back(inst.activities[a]);

  out.affinity.assign(static_cast<std::size_t>(inst.num_employees()) * kept.size(), 0);
  for (int r = 0; r < inst.num_employees(); ++r)
    for (std::size_t j = 0; j < kept.size(); ++j)
      out.affinity[static_cast<std::size_t>(r) * kept.size() + j] = inst.affinity_cost(r, kept[j]);

  std::map<std::string, int> new_index;
  for (std::size_t j = 0; j < kept.size(); ++j) new_index[inst.activities[kept[j]].id] = static_cast<int>(j);

  for (const auto& dem : inst.demands) {
    Demand moved = dem;
    std::string id = inst.activities[dem.activity].id;
    auto it = to_macro.find(id);
    if (it != to_macro.end()) id = it->second;
    moved.activity = new_index.at(id);
    out.demands.push_back(moved);
  }

  out.finalize();
  return out;
}

namespace detail {

inline bool demand_windows_overlap(const std::vector<const Demand*>& lhs,
                                   const std::vector<const Demand*>& rhs) {
  for (const Demand* a : lhs)
    for (const Demand* b : rhs)
      if (a->day == b->day && a->start_slot < b->end_slot && b->start_slot < a->end_slot) return true;
  return false;
}

}  // namespace detail

// Detects activities that can be performed by the same set of employees, have
// equal parameters and affinity costs, and whose combined demands never
// overlap, and merges each such group into one macro activity. Checkout
// activities never merge. Merging an already merged instance is a no-op.
inline std::pair<Instance, MergePlan> merge_identical(const Instance& inst) {
  const CompatibilityMatrix cra = build_compatibility(inst);
  const int num_r = inst.num_employees();

  // Signature: G3 floor, penalty, eligible employee set, affinity row.
  std::map<std::vector<std::int64_t>, std::vector<int>> buckets;
  for (int a = 0; a < inst.num_activities(); ++a) {
    if (inst.activities[a].checkout_role != CheckoutRole::None) continue;
    std::vector<std::int64_t> key;
    key.push_back(inst.activities[a].min_consecutive_minutes);
    key.push_back(inst.activities[a].slack_penalty);
    for (int r = 0; r < num_r; ++r) {
      key.push_back(cra.at(r, a) ? 1 : 0);
      key.push_back(cra.at(r, a) ? inst.affinity_cost(r, a) : 0);
    }
    buckets[std::move(key)].push_back(a);
  }

  std::vector<std::vector<const Demand*>> by_activity(inst.num_activities());
  for (const auto& dem : inst.demands) by_activity[dem.activity].push_back(&dem);

  MergePlan plan;
  for (auto& [key, members] : buckets) {
    std::vector<std::vector<int>> bucket_groups;
    for (int a : members) {
      bool placed = false;
      for (auto& group : bucket_groups) {
        bool clash = false;
        for (int other : group)
          if (detail::demand_windows_overlap(by_activity[a], by_activity[other])) {
            clash = true;
            break;
          }
        if (!clash) {
          group.push_back(a);
          placed = true;
          break;
        }
      }
      if (!placed) bucket_groups.push_back({a});
    }
    for (auto& group : bucket_groups) {
      if (group.size() < 2) continue;
      MergeGroup mg;
      for (int a : group) mg.members.push_back(inst.activities[a].id);
      std::sort(mg.members.begin(), mg.members.end());
      mg.macro_id = mg.members.front();
      plan.groups.push_back(std::move(mg));
    }
  }
  std::sort(plan.groups.begin(), plan.groups.end(),
            [](const MergeGroup& lhs, const MergeGroup& rhs) { return lhs.macro_id < rhs.macro_id; });

  if (plan.empty()) return {inst, plan};
  return {apply_merge_plan(inst, plan), plan};
}

// Relabels each worked macro slot with the member whose demand covers it on
// that day (unique because group demands never overlap). Slots outside every
// member window fall back to the macro id itself, which is the smallest
// member. Slack minutes and the objective are preserved exactly.
inline Solution redistribute(const Solution& macro_solution, const MergePlan& plan,
                             const Instance& original) {
  const Instance merged = apply_merge_plan(original, plan);

  // member demand windows per macro activity: merged index -> (day -> spans)
  std::map<int, std::map<int, std::vector<std::pair<std::pair<int, int>, int>>>> spans;
  for (const auto& group : plan.groups) {
    const int macro = merged.activity_index(group.macro_id);
    for (const auto& member : group.members) {
      const int orig = original.activity_index(member);
      for (const auto& dem : original.demands)
        if (dem.activity == orig)
          spans[macro][dem.day].push_back({{dem.start_slot, dem.end_slot}, orig});
    }
  }

  // merged index -> original index for everything that is not a macro slot.
  std::vector<int> direct(merged.num_activities());
  for (int a = 0; a < merged.num_activities(); ++a)
    direct[a] = original.activity_index(merged.activities[a].id);

  Assignment out(original);
  const auto& x = macro_solution.assignment;
  for (int r = 0; r < merged.num_employees(); ++r)
    for (int a = 0; a < merged.num_activities(); ++a)
      for (int d = 1; d <= merged.grid.days; ++d)
        for (int t = merged.grid.first_slot; t <= merged.grid.last_slot; ++t) {
          if (!x.get(r, a, t, d)) continue;
          int target = direct[a];
          auto it = spans.find(a);
          if (it != spans.end()) {
            auto day_it = it->second.find(d);
            if (day_it != it->second.end())
              for (const auto& [window, member] : day_it->second)
                if (t >= window.first && t < window.second) {
                  target = member;
                  break;
                }
          }
          out.set(r, target, t, d, true);
        }
  return make_solution(original, std::move(out));
}

}  // namespace sdpts
