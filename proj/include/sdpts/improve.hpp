#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <vector>

#include "sdpts/assignment.hpp"
#include "sdpts/compatibility.hpp"
#include "sdpts/instance.hpp"
#include "sdpts/validator.hpp"

namespace sdpts {

struct SearchConfig {
  double time_limit_seconds = 3600;  // the one-hour protocol default
  std::uint64_t seed = 0;            // reserved; the default neighborhoods are deterministic
  bool segment_move = true;
  bool activity_swap = true;
  bool extend_shrink = true;
  bool day_reassign = true;
  bool segment_insert = true;  // fresh runs into under-covered demand windows
};

namespace detail {

// Incremental objective bookkeeping for move evaluation.
class MoveEval {
 public:
  MoveEval(const Instance& inst, const Assignment& x) : inst_(inst) {
    by_cell_.resize(static_cast<std::size_t>(inst.num_activities()) * inst.grid.days + 1);
    for (int i = 0; i < inst.num_demands(); ++i) {
      const Demand& dem = inst.demands[i];
      by_cell_[key(dem.activity, dem.day)].push_back(i);
    }
    covered_.assign(inst.num_demands(), 0);
    for (int i = 0; i < inst.num_demands(); ++i) {
      const Demand& dem = inst.demands[i];
      for (int r = 0; r < inst.num_employees(); ++r)
        for (int t = dem.start_slot; t < dem.end_slot; ++t) covered_[i] += x.get(r, dem.activity, t, dem.day);
    }
  }

  struct CellChange {
    int r, a, t, d;
    int sign;  // +1 add, -1 remove
  };

  CostUnits delta(const std::vector<CellChange>& changes) const {
    std::map<int, long long> shift;  // demand -> covered delta
    CostUnits units = 0;
    for (const auto& c : changes) {
      units += static_cast<CostUnits>(c.sign) * inst_.affinity_cost(c.r, c.a);
      for (int i : by_cell_[key(c.a, c.d)]) {
        const Demand& dem = inst_.demands[i];
        if (c.t >= dem.start_slot && c.t < dem.end_slot) shift[i] += c.sign;
      }
    }
    const std::int64_t k = inst_.affinity_scale();
    for (const auto& [i, diff] : shift) {
      const Demand& dem = inst_.demands[i];
      const auto slack = [&](long long cov) {
        return std::max<std::int64_t>(0, dem.minutes - cov * inst_.grid.ts);
      };
      units += k * inst_.activities[dem.activity].slack_penalty *
               (slack(covered_[i] + diff) - slack(covered_[i]));
    }
    return units;
  }

  void commit(const std::vector<CellChange>& changes) {
    for (const auto& c : changes)
      for (int i : by_cell_[key(c.a, c.d)]) {
        const Demand& dem = inst_.demands[i];
        if (c.t >= dem.start_slot && c.t < dem.end_slot) covered_[i] += c.sign;
      }
  }

  long long covered(int demand) const { return covered_[demand]; }

 private:
  std::size_t key(int a, int d) const { return static_cast<std::size_t>(a) * inst_.grid.days + (d - 1); }

  const Instance& inst_;
  std::vector<std::vector<int>> by_cell_;
  std::vector<long long> covered_;
};

}  // namespace detail

// First-improvement hill climbing over run-based neighborhoods: move a run to
// another employee or start, relabel its activity, grow or shrink it by one
// slot, or hand a whole day to a colleague. Every accepted move strictly
// decreases the exact objective and keeps the schedule violation-free, so the
// result never degrades the start. Deterministic scan order; the time limit
// is checked between moves.
inline Solution improve(const Instance& inst, const Solution& start, const SearchConfig& cfg = {}) {
  if (check(inst, start.assignment).total() != 0)
    throw Error("improve: starting solution has violations");
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(cfg.time_limit_seconds));
  const CompatibilityMatrix cra = build_compatibility(inst);
  const TimeGrid& g = inst.grid;

  Assignment x = start.assignment;
  detail::MoveEval eval(inst, x);

  using CellChange = detail::MoveEval::CellChange;
  const auto apply = [&](const std::vector<CellChange>& changes) {
    for (const auto& c : changes) x.set(c.r, c.a, c.t, c.d, c.sign > 0);
  };
  const auto revert = [&](const std::vector<CellChange>& changes) {
    for (const auto& c : changes) x.set(c.r, c.a, c.t, c.d, c.sign < 0);
  };

  // Checks a candidate; on improvement applies it and returns true.
  const auto try_move = [&](const std::vector<CellChange>& changes, int r1, int r2) {
    for (const auto& c : changes)
      if (c.sign > 0) {
        if (!cra.at(c.r, c.a) || !inst.employees[c.r].available_at(g, c.t, c.d)) return false;
        bool freed = false;
        for (const auto& o : changes)
          if (o.sign < 0 && o.r == c.r && o.t == c.t && o.d == c.d) freed = true;
        if (!freed && x.works_at(c.r, c.t, c.d)) return false;
      }
    if (eval.delta(changes) >= 0) return false;
    apply(changes);
    if (!feasible_for(inst, x, r1) || (r2 != r1 && !feasible_for(inst, x, r2))) {
      revert(changes);
      return false;
    }
    eval.commit(changes);
    return true;
  };

  bool improved = true;
  while (improved && std::chrono::steady_clock::now() < deadline) {
    improved = false;
    // run catalogue, canonical order
    struct Run {
      int r, a, d, start, end;
    };
    std::vector<Run> runs;
    for (int r = 0; r < inst.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d)
        for (const auto& seg : activity_segments(x, r, d))
          runs.push_back({r, seg.activity, d, seg.start_slot, seg.end_slot});

    for (const auto& run : runs) {
      const int len = run.end - run.start;
      std::vector<CellChange> removal;
      for (int t = run.start; t < run.end; ++t) removal.push_back({run.r, run.a, t, run.d, -1});

      if (cfg.segment_move) {
        for (int r2 = 0; r2 < inst.num_employees() && !improved; ++r2)
          for (int s2 = g.first_slot; s2 + len - 1 <= g.last_slot && !improved; ++s2) {
            if (r2 == run.r && s2 == run.start) continue;
            auto changes = removal;
            for (int t = s2; t < s2 + len; ++t) changes.push_back({r2, run.a, t, run.d, +1});
            improved = try_move(changes, run.r, r2);
          }
      }
      if (cfg.activity_swap && !improved) {
        for (int a2 = 0; a2 < inst.num_activities() && !improved; ++a2) {
          if (a2 == run.a) continue;
          auto changes = removal;
          for (int t = run.start; t < run.end; ++t) changes.push_back({run.r, a2, t, run.d, +1});
          improved = try_move(changes, run.r, run.r);
        }
      }
      if (cfg.extend_shrink && !improved) {
        if (run.start - 1 >= g.first_slot)
          improved = try_move({{run.r, run.a, run.start - 1, run.d, +1}}, run.r, run.r);
        if (!improved && run.end <= g.last_slot)
          improved = try_move({{run.r, run.a, run.end, run.d, +1}}, run.r, run.r);
        if (!improved && len > 1)
          improved = try_move({{run.r, run.a, run.start, run.d, -1}}, run.r, run.r);
        if (!improved && len > 1)
          improved = try_move({{run.r, run.a, run.end - 1, run.d, -1}}, run.r, run.r);
      }
      if (improved) break;
    }

    if (cfg.day_reassign && !improved) {
      for (int r = 0; r < inst.num_employees() && !improved; ++r)
        for (int d = 1; d <= g.days && !improved; ++d) {
          std::vector<CellChange> changes;
          for (const auto& seg : activity_segments(x, r, d))
            for (int t = seg.start_slot; t < seg.end_slot; ++t)
              changes.push_back({r, seg.activity, t, d, -1});
          if (changes.empty()) continue;
          for (int r2 = 0; r2 < inst.num_employees() && !improved; ++r2) {
            if (r2 == r) continue;
            auto moved = changes;
            for (const auto& c : changes) moved.push_back({r2, c.a, c.t, c.d, +1});
            improved = try_move(moved, r, r2);
          }
        }
    }

    // Fresh runs into windows with unmet demand. Runs may overshoot the
    // window up to the G1/G3 floor, so short demands stay reachable.
    if (cfg.segment_insert && !improved) {
      for (int i = 0; i < inst.num_demands() && !improved; ++i) {
        const Demand& dem = inst.demands[i];
        const long long slack = dem.minutes - eval.covered(i) * g.ts;
        if (slack <= 0) continue;
        const int want = static_cast<int>((slack + g.ts - 1) / g.ts);
        const int floor_len =
            std::max(1, std::max(inst.rules.min_work_after_break_minutes,
                                 inst.activities[dem.activity].min_consecutive_minutes) /
                            g.ts);
        for (int r = 0; r < inst.num_employees() && !improved; ++r) {
          if (!cra.at(r, dem.activity)) continue;
          for (int s = dem.start_slot; s < dem.end_slot && !improved; ++s) {
            int free_len = 0;
            while (s + free_len <= g.last_slot &&
                   inst.employees[r].available_at(g, s + free_len, dem.day) &&
                   !x.works_at(r, s + free_len, dem.day))
              ++free_len;
            for (int len = std::min(free_len, std::max(want, floor_len)); len >= 1 && !improved;
                 --len) {
              std::vector<CellChange> changes;
              for (int t = s; t < s + len; ++t) changes.push_back({r, dem.activity, t, dem.day, +1});
              improved = try_move(changes, r, r);
            }
          }
        }
      }
    }
  }

  Solution out = make_solution(inst, std::move(x));
  // Hill climbing with strict decrease can never do worse than the start.
  if (out.objective_units > start.objective_units) return start;
  return out;
}

}  // namespace sdpts
