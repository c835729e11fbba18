#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sdpts/instance.hpp"

namespace sdpts {

// Random but always-valid instance generation for benchmarks and demos.
// Deterministic for a fixed seed. Defaults mirror the scale of a retail week:
// 15-minute slots over a 08:00-20:00 window (48 slots) and a 7-day horizon,
// with Italian-law-shaped rule defaults (see docs/generator.md).
struct GenConfig {
  int employees = 8;
  int activities = 6;
  int days = 7;
  int ts = 15;
  std::uint64_t seed = 1;
};

namespace detail {

// Own helpers instead of std distributions so output is identical across
// standard libraries.
inline int rand_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}
inline bool rand_chance(std::mt19937_64& rng, int percent) { return rand_int(rng, 1, 100) <= percent; }

}  // namespace detail

inline Instance generate_instance(const GenConfig& cfg) {
  using detail::rand_chance;
  using detail::rand_int;
  if (cfg.employees < 1 || cfg.activities < 1 || cfg.days < 1)
    throw ValidationError("generator: employees, activities and days must be positive");
  if (cfg.ts <= 0 || 1440 % cfg.ts != 0)
    throw ValidationError("generator: ts must divide 1440");

  std::mt19937_64 rng(cfg.seed);
  Instance inst;
  inst.grid.ts = cfg.ts;
  inst.grid.days = cfg.days;
  inst.grid.first_slot = 480 / cfg.ts;          // 08:00
  inst.grid.last_slot = 1200 / cfg.ts - 1;      // window closes 20:00
  if (480 % cfg.ts != 0 || inst.grid.last_slot < inst.grid.first_slot) {
    inst.grid.first_slot = 0;                   // coarse steps fall back to the full day
    inst.grid.last_slot = inst.grid.slots_per_day() - 1;
  }
  const int num_t = inst.grid.num_slots();

  const auto to_ts = [&](int minutes) { return std::max(cfg.ts, minutes / cfg.ts * cfg.ts); };
  inst.rules.max_daily_minutes = to_ts(540);
  inst.rules.max_horizon_minutes = to_ts(2400);
  inst.rules.max_consecutive_days = 6;
  inst.rules.max_stretch_minutes = to_ts(360);
  inst.rules.min_break_minutes = 30 / cfg.ts * cfg.ts;  // may be 0 on coarse grids
  inst.rules.max_daily_span_minutes = to_ts(630);
  // Keep the rest rule below one day minus the grid window so a day off
  // always counts as enough rest (see the validator's empty-day convention).
  inst.rules.min_rest_minutes = std::min(to_ts(660), (inst.grid.slots_per_day() - num_t) * cfg.ts);
  inst.rules.min_work_after_break_minutes = to_ts(60);

  static const char* kSkills[] = {"till", "bakery", "butcher", "deli", "produce", "warehouse"};
  constexpr int kNumSkills = 6;

  for (int a = 0; a < cfg.activities; ++a) {
    Activity act;
    act.id = "act" + std::to_string(a + 1);
    act.required_skills = {kSkills[a % kNumSkills]};
    act.min_consecutive_minutes = rand_chance(rng, 50) ? to_ts(60) : cfg.ts;
    act.slack_penalty = static_cast<Micro>(rand_int(rng, 1, 5)) * kMicroScale;
    inst.activities.push_back(std::move(act));
  }

  for (int r = 0; r < cfg.employees; ++r) {
    Employee emp;
    emp.id = "emp" + std::to_string(r + 1);
    const int num_skills = rand_int(rng, 2, 4);
    for (int j = 0; j < num_skills; ++j) emp.skills.insert(kSkills[rand_int(rng, 0, kNumSkills - 1)]);
    if (rand_chance(rng, 25))
      emp.max_horizon_minutes = to_ts(rand_int(rng, 16, 32) * 60);
    emp.available.assign(static_cast<std::size_t>(cfg.days) * num_t, 1);
    for (int d = 1; d <= cfg.days; ++d) {
      if (rand_chance(rng, 12)) {  // full day off requested
        for (int t = 0; t < num_t; ++t) emp.available[static_cast<std::size_t>(d - 1) * num_t + t] = 0;
        continue;
      }
      const int late = rand_chance(rng, 30) ? rand_int(rng, 1, num_t / 4) : 0;
      const int early = rand_chance(rng, 30) ? rand_int(rng, 1, num_t / 4) : 0;
      for (int t = 0; t < late; ++t) emp.available[static_cast<std::size_t>(d - 1) * num_t + t] = 0;
      for (int t = num_t - early; t < num_t; ++t)
        emp.available[static_cast<std::size_t>(d - 1) * num_t + t] = 0;
    }
    inst.employees.push_back(std::move(emp));
  }

  // Every activity needs at least one compatible employee to be interesting.
  for (int a = 0; a < cfg.activities; ++a) {
    bool anyone = false;
    for (int r = 0; r < cfg.employees; ++r) anyone = anyone || inst.compatible(r, a);
    if (!anyone)
      inst.employees[rand_int(rng, 0, cfg.employees - 1)].skills.insert(
          *inst.activities[a].required_skills.begin());
  }

  for (int a = 0; a < cfg.activities; ++a)
    for (int d = 1; d <= cfg.days; ++d) {
      if (!rand_chance(rng, 75)) continue;
      const int num_windows = rand_chance(rng, 30) ? 2 : 1;
      int cursor = inst.grid.first_slot;
      for (int w = 0; w < num_windows; ++w) {
        const int max_len = std::min(8, inst.grid.last_slot + 1 - cursor);
        if (max_len < 2) break;
        const int start = cursor + rand_int(rng, 0, std::min(4, inst.grid.last_slot + 1 - cursor - 2));
        const int len = rand_int(rng, 2, std::min(8, inst.grid.last_slot + 1 - start));
        Demand dem;
        dem.activity = a;
        dem.day = d;
        dem.start_slot = start;
        dem.end_slot = start + len;
        const int simultaneity = rand_chance(rng, 20) ? 2 : 1;
        dem.minutes = static_cast<std::int64_t>(len) * cfg.ts * simultaneity;
        inst.demands.push_back(dem);
        cursor = dem.end_slot + rand_int(rng, 1, 4);
        if (cursor > inst.grid.last_slot) break;
      }
    }

  inst.history.resize(inst.employees.size());
  for (int r = 0; r < cfg.employees; ++r) {
    if (rand_chance(rng, 20)) inst.history[r].consecutive_worked_days = rand_int(rng, 1, 2);
    if (rand_chance(rng, 15))
      inst.history[r].minutes_worked = rand_int(rng, 1, 8) * 60;
    if (rand_chance(rng, 20))
      inst.history[r].last_worked_end_slot =
          inst.grid.last_slot + 1 - rand_int(rng, 0, num_t / 2);
  }

  inst.affinity.assign(static_cast<std::size_t>(cfg.employees) * cfg.activities, 0);
  static const Micro kCosts[] = {10'000, 20'000, 50'000};  // 0.01 / 0.02 / 0.05
  for (int r = 0; r < cfg.employees; ++r)
    for (int a = 0; a < cfg.activities; ++a)
      if (inst.compatible(r, a) && rand_chance(rng, 40))
        inst.affinity[static_cast<std::size_t>(r) * cfg.activities + a] = kCosts[rand_int(rng, 0, 2)];

  inst.finalize();
  return inst;
}

}  // namespace sdpts
