#pragma once

#include <cstdint>
#include <vector>

#include "sdpts/assignment.hpp"
#include "sdpts/compatibility.hpp"
#include "sdpts/instance.hpp"
#include "sdpts/validator.hpp"

namespace sdpts {

struct OracleResult {
  Solution solution;
  CostUnits objective_units = 0;
};

constexpr int kEnumerationCellCap = 24;

// Exact oracle for desk-scale instances: enumerates every 0/1 assignment over
// the materialized (compatible and available) cells, keeps the feasible ones
// and returns the minimum-objective point, ties broken by the
// lexicographically smallest cell vector. Refuses instances with more than
// kEnumerationCellCap cells instead of truncating.
inline OracleResult enumerate_optimal(const Instance& inst) {
  const CompatibilityMatrix cra = build_compatibility(inst);
  const TimeGrid& g = inst.grid;

  struct Cell {
    int r, a, t, d;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < inst.num_employees(); ++r)
    for (int a = 0; a < inst.num_activities(); ++a)
      for (int t = g.first_slot; t <= g.last_slot; ++t)
        for (int d = 1; d <= g.days; ++d)
          if (cra.at(r, a) && inst.employees[r].available_at(g, t, d)) cells.push_back({r, a, t, d});

  const int n = static_cast<int>(cells.size());
  if (n > kEnumerationCellCap)
    throw CapError("enumeration cap exceeded: " + std::to_string(n) + " materialized cells, cap " +
                   std::to_string(kEnumerationCellCap));

  // Demand windows per cell for the fast objective.
  std::vector<std::vector<int>> cell_demands(n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < inst.num_demands(); ++i) {
      const Demand& dem = inst.demands[i];
      if (dem.activity == cells[c].a && dem.day == cells[c].d && cells[c].t >= dem.start_slot &&
          cells[c].t < dem.end_slot)
        cell_demands[c].push_back(i);
    }
  const std::int64_t k = inst.affinity_scale();
  std::vector<long long> covered(inst.num_demands());

  Assignment x(inst);
  std::uint32_t current = 0;
  const auto load_mask = [&](std::uint32_t mask) {
    const std::uint32_t flip = mask ^ current;
    for (int c = 0; c < n; ++c)
      if (flip & (1u << c)) x.set(cells[c].r, cells[c].a, cells[c].t, cells[c].d, (mask >> c) & 1u);
    current = mask;
  };

  const auto units_of = [&](std::uint32_t mask) {
    std::fill(covered.begin(), covered.end(), 0);
    CostUnits units = 0;
    for (int c = 0; c < n; ++c)
      if (mask & (1u << c)) {
        units += inst.affinity_cost(cells[c].r, cells[c].a);
        for (int i : cell_demands[c]) covered[i]++;
      }
    for (int i = 0; i < inst.num_demands(); ++i) {
      const Demand& dem = inst.demands[i];
      units += k * inst.activities[dem.activity].slack_penalty *
               std::max<std::int64_t>(0, dem.minutes - covered[i] * g.ts);
    }
    return units;
  };

  // Lexicographic order on the cell vector: the first differing cell decides,
  // an unset cell is smaller.
  const auto lex_smaller = [&](std::uint32_t lhs, std::uint32_t rhs) {
    for (int c = 0; c < n; ++c) {
      const bool bl = (lhs >> c) & 1u, br = (rhs >> c) & 1u;
      if (bl != br) return !bl;
    }
    return false;
  };

  bool found = false;
  std::uint32_t best_mask = 0;
  CostUnits best_units = 0;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    load_mask(static_cast<std::uint32_t>(mask));
    if (!feasible(inst, x)) continue;
    const CostUnits units = units_of(static_cast<std::uint32_t>(mask));
    if (!found || units < best_units ||
        (units == best_units && lex_smaller(static_cast<std::uint32_t>(mask), best_mask))) {
      found = true;
      best_units = units;
      best_mask = static_cast<std::uint32_t>(mask);
    }
  }
  // The empty schedule is always feasible, so `found` always holds.
  load_mask(best_mask);
  OracleResult out;
  out.solution = make_solution(inst, std::move(x));
  out.objective_units = best_units;
  return out;
}

}  // namespace sdpts
