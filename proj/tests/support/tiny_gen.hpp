#pragma once

// Random tiny instances for property and acceptance tests. They stay inside
// the exact-oracle enumeration cap and keep the rest rule small enough that a
// day off always resets it, which is the regime where the validator's
// empty-day convention and the printed L6 rows coincide.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "sdpts/compatibility.hpp"
#include "sdpts/instance.hpp"

namespace testsupport {

inline int ti_rand(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}
inline bool ti_chance(std::mt19937_64& rng, int percent) { return ti_rand(rng, 1, 100) <= percent; }

struct TinyGenOptions {
  int max_cells = 20;  // keeps 2^cells enumeration cheap
  bool with_history = true;
  bool with_checkout = false;  // adds an opCAS/clCAS pair
};

inline sdpts::Instance tiny_instance(std::mt19937_64& rng, const TinyGenOptions& opt = {}) {
  while (true) {
    sdpts::Instance inst;
    const int ts = std::vector<int>{15, 30, 60}[ti_rand(rng, 0, 2)];

    // Re-draw dimensions until the dense cell count fits the budget.
    int num_t, num_r, num_a, days;
    do {
      num_t = ti_rand(rng, 3, 5);
      days = ti_rand(rng, 1, 2);
      num_r = ti_rand(rng, 1, 2);
      num_a = opt.with_checkout ? 2 : ti_rand(rng, 1, 3);
    } while (num_t * days * num_r * num_a > opt.max_cells);

    inst.grid.ts = ts;
    inst.grid.days = days;
    inst.grid.first_slot = ti_rand(rng, 0, 3);
    inst.grid.last_slot = inst.grid.first_slot + num_t - 1;

    inst.rules.max_daily_minutes = ts * ti_rand(rng, 2, num_t);
    inst.rules.max_horizon_minutes = ts * ti_rand(rng, 2, num_t * inst.grid.days);
    inst.rules.max_consecutive_days = ti_rand(rng, 1, inst.grid.days + 1);
    inst.rules.max_stretch_minutes = ts * ti_rand(rng, 2, 4);
    inst.rules.min_break_minutes = ts * ti_rand(rng, 0, 1);
    inst.rules.max_daily_span_minutes = std::min(1440, ts * ti_rand(rng, 1, num_t));
    const int rest_cap = inst.grid.slots_per_day() - num_t;  // day off always resets
    inst.rules.min_rest_minutes = ts * ti_rand(rng, 0, std::min(4, rest_cap));
    inst.rules.min_work_after_break_minutes = ts * ti_rand(rng, 0, 2);

    for (int a = 0; a < num_a; ++a) {
      sdpts::Activity act;
      act.id = "a" + std::to_string(a + 1);
      if (ti_chance(rng, 40)) act.required_skills.insert("s" + std::to_string(ti_rand(rng, 1, 2)));
      act.min_consecutive_minutes = ts * ti_rand(rng, 0, 2);
      act.slack_penalty = static_cast<sdpts::Micro>(ti_rand(rng, 1, 3)) * sdpts::kMicroScale;
      inst.activities.push_back(std::move(act));
    }
    if (opt.with_checkout) {
      inst.activities[0].checkout_role = sdpts::CheckoutRole::Open;
      inst.activities[0].min_consecutive_minutes = 0;
      inst.activities[1].checkout_role = sdpts::CheckoutRole::Close;
      inst.activities[1].min_consecutive_minutes = 0;
    }

    for (int r = 0; r < num_r; ++r) {
      sdpts::Employee emp;
      emp.id = "r" + std::to_string(r + 1);
      if (ti_chance(rng, 60)) emp.skills.insert("s1");
      if (ti_chance(rng, 60)) emp.skills.insert("s2");
      emp.available.assign(static_cast<std::size_t>(inst.grid.days) * num_t, 1);
      for (auto& v : emp.available)
        if (ti_chance(rng, 15)) v = 0;
      inst.employees.push_back(std::move(emp));
    }

    for (int a = 0; a < num_a; ++a)
      for (int d = 1; d <= inst.grid.days; ++d) {
        if (!ti_chance(rng, 60)) continue;
        sdpts::Demand dem;
        dem.activity = a;
        dem.day = d;
        dem.start_slot = inst.grid.first_slot + ti_rand(rng, 0, num_t - 2);
        dem.end_slot = dem.start_slot + ti_rand(rng, 1, inst.grid.last_slot + 1 - dem.start_slot);
        dem.minutes = ti_rand(rng, 0, 2 * (dem.end_slot - dem.start_slot) * ts);
        inst.demands.push_back(dem);
      }

    if (opt.with_history) {
      inst.history.resize(num_r);
      for (int r = 0; r < num_r; ++r) {
        if (ti_chance(rng, 30)) inst.history[r].consecutive_worked_days = ti_rand(rng, 1, 2);
        if (ti_chance(rng, 30))
          inst.history[r].minutes_worked = ti_rand(rng, 0, inst.rules.max_horizon_minutes + ts);
        if (ti_chance(rng, 30))
          inst.history[r].last_worked_end_slot =
              ti_rand(rng, inst.grid.first_slot, inst.grid.last_slot + 1);
      }
    }

    inst.affinity.assign(static_cast<std::size_t>(num_r) * num_a, 0);
    for (int r = 0; r < num_r; ++r)
      for (int a = 0; a < num_a; ++a)
        if (inst.compatible(r, a) && ti_chance(rng, 50))
          inst.affinity[static_cast<std::size_t>(r) * num_a + a] =
              std::vector<sdpts::Micro>{10'000, 500'000, 1'000'000}[ti_rand(rng, 0, 2)];

    inst.finalize();

    int cells = 0;
    for (int r = 0; r < num_r; ++r)
      for (int a = 0; a < num_a; ++a)
        for (int t = inst.grid.first_slot; t <= inst.grid.last_slot; ++t)
          for (int d = 1; d <= inst.grid.days; ++d)
            if (inst.compatible(r, a) && inst.employees[r].available_at(inst.grid, t, d)) ++cells;
    if (cells <= opt.max_cells) return inst;
  }
}

// A one-day instance holding a family of clone activities (same skills,
// parameters and affinities, windows chopped so the clones' demands never
// overlap) plus optionally one distinct activity. Clones keep the G3 floor at
// one slot, the regime where merging is provably optimum-preserving.
inline sdpts::Instance clone_instance(std::mt19937_64& rng) {
  while (true) {
    sdpts::Instance inst;
    const int ts = 30;
    inst.grid.ts = ts;
    inst.grid.days = 1;

    // Dense cell budget of 20 so the oracle runs on both sides of the merge.
    const int num_r = ti_rand(rng, 1, 2);
    const int clones = num_r == 2 ? 2 : ti_rand(rng, 2, 3);
    const bool extra = num_r == 1 && ti_chance(rng, 40);
    const int max_t = 20 / (num_r * (clones + (extra ? 1 : 0)));
    const int num_t = ti_rand(rng, std::min(4, max_t), max_t);
    inst.grid.first_slot = ti_rand(rng, 0, 2);
    inst.grid.last_slot = inst.grid.first_slot + num_t - 1;

    inst.rules.max_daily_minutes = ts * ti_rand(rng, 2, num_t);
    inst.rules.max_horizon_minutes = inst.rules.max_daily_minutes;
    inst.rules.max_consecutive_days = 1;
    inst.rules.max_stretch_minutes = ts * ti_rand(rng, 2, 4);
    inst.rules.min_break_minutes = ts * ti_rand(rng, 0, 1);
    inst.rules.max_daily_span_minutes = std::min(1440, ts * num_t);
    inst.rules.min_rest_minutes = 0;
    inst.rules.min_work_after_break_minutes = ts * ti_rand(rng, 0, 2);

    const bool need_skill = ti_chance(rng, 50);
    for (int a = 0; a < clones; ++a) {
      sdpts::Activity act;
      act.id = "c" + std::to_string(a + 1);
      if (need_skill) act.required_skills.insert("s1");
      act.min_consecutive_minutes = ti_chance(rng, 50) ? ts : 0;
      act.slack_penalty = 2 * sdpts::kMicroScale;
      inst.activities.push_back(std::move(act));
    }
    // Clones must share every parameter, including the G3 floor.
    for (int a = 1; a < clones; ++a)
      inst.activities[a].min_consecutive_minutes = inst.activities[0].min_consecutive_minutes;
    if (extra) {
      sdpts::Activity act;
      act.id = "other";
      act.min_consecutive_minutes = 0;
      act.slack_penalty = sdpts::kMicroScale;
      inst.activities.push_back(std::move(act));
    }

    for (int r = 0; r < num_r; ++r) {
      sdpts::Employee emp;
      emp.id = "r" + std::to_string(r + 1);
      emp.skills.insert("s1");
      emp.available.assign(static_cast<std::size_t>(inst.grid.days) * num_t, 1);
      for (auto& v : emp.available)
        if (ti_chance(rng, 10)) v = 0;
      inst.employees.push_back(std::move(emp));
    }

    // Chop the window into disjoint pieces, one per clone (not all used).
    int cursor = inst.grid.first_slot;
    for (int a = 0; a < clones && cursor <= inst.grid.last_slot; ++a) {
      if (!ti_chance(rng, 85)) continue;
      const int len = ti_rand(rng, 1, std::min(2, inst.grid.last_slot + 1 - cursor));
      sdpts::Demand dem;
      dem.activity = a;
      dem.day = 1;
      dem.start_slot = cursor;
      dem.end_slot = cursor + len;
      dem.minutes = ti_rand(rng, 0, 2 * len * ts);
      inst.demands.push_back(dem);
      cursor = dem.end_slot + ti_rand(rng, 0, 1);
    }
    if (extra && ti_chance(rng, 60)) {
      sdpts::Demand dem;
      dem.activity = clones;
      dem.day = 1;
      dem.start_slot = inst.grid.first_slot;
      dem.end_slot = inst.grid.last_slot + 1;
      dem.minutes = ti_rand(rng, 0, num_t * ts);
      inst.demands.push_back(dem);
    }

    const sdpts::Micro shared_cost =
        ti_chance(rng, 50) ? 0 : std::vector<sdpts::Micro>{10'000, 250'000}[ti_rand(rng, 0, 1)];
    inst.affinity.assign(static_cast<std::size_t>(num_r) * inst.num_activities(), 0);
    for (int r = 0; r < num_r; ++r) {
      for (int a = 0; a < clones; ++a)
        if (inst.compatible(r, a))
          inst.affinity[static_cast<std::size_t>(r) * inst.num_activities() + a] = shared_cost;
      if (extra && ti_chance(rng, 50))
        inst.affinity[static_cast<std::size_t>(r) * inst.num_activities() + clones] = 20'000;
    }

    inst.finalize();

    int cells = 0;
    for (int r = 0; r < num_r; ++r)
      for (int a = 0; a < inst.num_activities(); ++a)
        for (int t = inst.grid.first_slot; t <= inst.grid.last_slot; ++t)
          if (inst.compatible(r, a) && inst.employees[r].available_at(inst.grid, t, 1)) ++cells;
    if (cells <= 24) return inst;
  }
}

}  // namespace testsupport
