#pragma once

#include <string>

#include "sdpts/error.hpp"

namespace sdpts {

// Discretized planning horizon. Every day is cut into slots of `ts` minutes
// and a slot is addressed by its start minute divided by ts, so with ts=30
// the slot 8:00-8:30 has index 16 and 8:30-9:00 has index 17. All days share
// the same slot window [first_slot, last_slot].
struct TimeGrid {
  int ts = 15;         // minutes per slot, must divide 1440
  int first_slot = 0;  // t0
  int last_slot = 0;   // tn, inclusive
  int days = 1;        // |D|, days are 1-based

  int slots_per_day() const { return 1440 / ts; }  // tsD
  int num_slots() const { return last_slot - first_slot + 1; }
  int minute_of_slot(int slot) const { return slot * ts; }
  bool contains_slot(int t) const { return t >= first_slot && t <= last_slot; }
  bool contains_day(int d) const { return d >= 1 && d <= days; }

  bool operator==(const TimeGrid&) const = default;
};

inline void validate_grid(const TimeGrid& g) {
  if (g.ts <= 0 || 1440 % g.ts != 0)
    throw ValidationError("grid.slot_minutes: ts must be a positive divisor of 1440, got " +
                          std::to_string(g.ts));
  if (g.first_slot > g.last_slot)
    throw ValidationError("grid: slot window is empty (first_slot > last_slot)");
  if (g.first_slot < 0 || g.last_slot >= g.slots_per_day())
    throw ValidationError("grid: slot window must lie within a single day");
  if (g.days < 1) throw ValidationError("grid.days: need at least one day");
}

// Slot index of a minute-of-day. The minute must be on the slot raster and
// inside the grid window.
inline int slot_of_minute(const TimeGrid& g, int minute_of_day) {
  if (minute_of_day % g.ts != 0)
    throw EncodingError("minute " + std::to_string(minute_of_day) + " is not a multiple of ts=" +
                        std::to_string(g.ts));
  const int slot = minute_of_day / g.ts;
  if (!g.contains_slot(slot))
    throw EncodingError("minute " + std::to_string(minute_of_day) + " lies outside the grid window [" +
                        std::to_string(g.minute_of_slot(g.first_slot)) + ", " +
                        std::to_string(g.minute_of_slot(g.last_slot)) + "]");
  return slot;
}

}  // namespace sdpts
