#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sdpts/assignment.hpp"
#include "sdpts/compatibility.hpp"
#include "sdpts/instance.hpp"
#include "sdpts/validator.hpp"

namespace sdpts {

// Greedy constructive warm start. Demands are served in descending order of
// remaining unmet minutes; for each demand the compatible and available
// employees are ranked by (fewest remaining legal minutes, lowest affinity
// cost, index) and the best-ranked employee receives one maximal legal run of
// at least max(wt, G3 minimum) minutes inside the demand window. Every
// placement is validated against the full rule set before it sticks, so the
// result always passes check() with zero violations; a final repair pass
// dropping the newest offending run exists as a safety net. Construction is
// deterministic; the seed is reserved for optional tie shuffling and unused.
inline Solution greedy(const Instance& inst, const CompatibilityMatrix& cra, std::uint64_t seed = 0) {
  (void)seed;
  const TimeGrid& g = inst.grid;
  Assignment x(inst);

  std::vector<std::int64_t> remaining(inst.num_demands());
  std::vector<bool> active(inst.num_demands());
  for (int i = 0; i < inst.num_demands(); ++i) {
    remaining[i] = inst.demands[i].minutes;
    active[i] = remaining[i] >= g.ts;
  }
  std::vector<long long> assigned_slots(inst.num_employees(), 0);

  const auto floor_slots = [&](int a) {
    const int floor_minutes =
        std::max(inst.rules.min_work_after_break_minutes, inst.activities[a].min_consecutive_minutes);
    return std::max(1, floor_minutes / g.ts);
  };

  struct Placement {
    int r, a, d, start, len;
  };
  std::vector<Placement> placements;

  while (true) {
    int pick = -1;
    for (int i = 0; i < inst.num_demands(); ++i)
      if (active[i] && (pick < 0 || remaining[i] > remaining[pick])) pick = i;
    if (pick < 0) break;

    const Demand& dem = inst.demands[pick];
    const int need_floor = floor_slots(dem.activity);
    const auto cap_len = static_cast<int>(remaining[pick] / g.ts);  // never over-cover
    if (cap_len < need_floor) {
      active[pick] = false;
      continue;
    }

    std::vector<int> order;
    for (int r = 0; r < inst.num_employees(); ++r)
      if (cra.at(r, dem.activity)) order.push_back(r);
    std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
      const long long left_l = inst.horizon_slot_cap(lhs) - assigned_slots[lhs];
      const long long left_r = inst.horizon_slot_cap(rhs) - assigned_slots[rhs];
      if (left_l != left_r) return left_l < left_r;
      const Micro c_l = inst.affinity_cost(lhs, dem.activity);
      const Micro c_r = inst.affinity_cost(rhs, dem.activity);
      if (c_l != c_r) return c_l < c_r;
      return lhs < rhs;
    });

    bool placed = false;
    for (int r : order) {
      int best_start = -1, best_len = 0;
      for (int s = dem.start_slot; s < dem.end_slot; ++s) {
        int free_len = 0;
        while (s + free_len < dem.end_slot && inst.employees[r].available_at(g, s + free_len, dem.day) &&
               !x.works_at(r, s + free_len, dem.day))
          ++free_len;
        for (int len = std::min(free_len, cap_len); len >= need_floor; --len) {
          if (len <= best_len) break;
          for (int t = s; t < s + len; ++t) x.set(r, dem.activity, t, dem.day, true);
          const bool ok = feasible_for(inst, x, r);
          for (int t = s; t < s + len; ++t) x.set(r, dem.activity, t, dem.day, false);
          if (ok) {
            best_start = s;
            best_len = len;
            break;
          }
        }
      }
      if (best_start >= 0) {
        for (int t = best_start; t < best_start + best_len; ++t) x.set(r, dem.activity, t, dem.day, true);
        assigned_slots[r] += best_len;
        remaining[pick] -= static_cast<std::int64_t>(best_len) * g.ts;
        placements.push_back({r, dem.activity, dem.day, best_start, best_len});
        if (remaining[pick] < g.ts) active[pick] = false;
        placed = true;
        break;
      }
    }
    if (!placed) active[pick] = false;
  }

  // Repair: drop the newest run of any employee still in conflict. Placements
  // are validated above, so this loop normally never fires.
  while (!placements.empty()) {
    const ViolationReport report = check(inst, x);
    if (report.total() == 0) break;
    int victim = -1;
    for (int i = static_cast<int>(placements.size()) - 1; i >= 0 && victim < 0; --i)
      for (const auto& v : report.violations)
        if (v.employee == placements[i].r) {
          victim = i;
          break;
        }
    if (victim < 0) victim = static_cast<int>(placements.size()) - 1;
    const Placement& p = placements[victim];
    for (int t = p.start; t < p.start + p.len; ++t) x.set(p.r, p.a, t, p.d, false);
    placements.erase(placements.begin() + victim);
  }

  return make_solution(inst, std::move(x));
}

}  // namespace sdpts
