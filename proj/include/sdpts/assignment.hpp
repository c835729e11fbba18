#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdpts/error.hpp"
#include "sdpts/instance.hpp"

namespace sdpts {

// The assignment tensor x(r,a,t,d). Slots are addressed by their absolute
// grid index, days are 1-based. All derived quantities of the formulation
// (y, z, b, e) are computed from this tensor on demand.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(const Instance& inst)
      : num_employees_(inst.num_employees()),
        num_activities_(inst.num_activities()),
        first_slot_(inst.grid.first_slot),
        num_slots_(inst.grid.num_slots()),
        days_(inst.grid.days),
        x_(static_cast<std::size_t>(num_employees_) * num_activities_ * num_slots_ * days_, 0) {}

  int num_employees() const { return num_employees_; }
  int num_activities() const { return num_activities_; }
  int first_slot() const { return first_slot_; }
  int last_slot() const { return first_slot_ + num_slots_ - 1; }
  int num_slots() const { return num_slots_; }
  int days() const { return days_; }

  bool get(int r, int a, int t, int d) const { return x_[offset(r, a, t, d)] != 0; }
  void set(int r, int a, int t, int d, bool v) { x_[offset(r, a, t, d)] = v ? 1 : 0; }

  // Number of activities performed at (r,t,d); D4 requires <= 1.
  int activities_at(int r, int t, int d) const {
    int n = 0;
    for (int a = 0; a < num_activities_; ++a) n += get(r, a, t, d);
    return n;
  }
  bool works_at(int r, int t, int d) const {
    for (int a = 0; a < num_activities_; ++a)
      if (get(r, a, t, d)) return true;
    return false;
  }
  bool works_on_day(int r, int d) const {  // z(r,d)
    for (int t = first_slot_; t <= last_slot(); ++t)
      if (works_at(r, t, d)) return true;
    return false;
  }
  bool any() const {
    for (auto v : x_)
      if (v) return true;
    return false;
  }

  bool operator==(const Assignment&) const = default;

 private:
  std::size_t offset(int r, int a, int t, int d) const {
    if (r < 0 || r >= num_employees_) throw IdentifierError("employee index out of range: " + std::to_string(r));
    if (a < 0 || a >= num_activities_) throw IdentifierError("activity index out of range: " + std::to_string(a));
    if (t < first_slot_ || t > last_slot()) throw IdentifierError("slot index out of range: " + std::to_string(t));
    if (d < 1 || d > days_) throw IdentifierError("day index out of range: " + std::to_string(d));
    return ((static_cast<std::size_t>(r) * num_activities_ + a) * days_ + (d - 1)) * num_slots_ +
           (t - first_slot_);
  }

  int num_employees_ = 0;
  int num_activities_ = 0;
  int first_slot_ = 0;
  int num_slots_ = 0;
  int days_ = 0;
  std::vector<std::uint8_t> x_;
};

// One nonzero of the change-of-work-status variable y(r,a,t,d): +1 where the
// employee starts the activity, -1 where they stop it. x before the first
// grid slot counts as 0, and no closing -1 is reported past the last slot.
struct ChangePoint {
  int slot = 0;
  int sign = 0;
  bool operator==(const ChangePoint&) const = default;
};

inline std::vector<ChangePoint> derive_change_points(const Assignment& x, int r, int a, int d) {
  std::vector<ChangePoint> points;
  bool prev = false;
  for (int t = x.first_slot(); t <= x.last_slot(); ++t) {
    const bool cur = x.get(r, a, t, d);
    if (cur != prev) points.push_back({t, cur ? +1 : -1});
    prev = cur;
  }
  return points;
}

struct DayBounds {
  bool worked = false;
  int begin_slot = 0;  // b(r,d)
  int end_slot = 0;    // e(r,d), exclusive: last worked slot + 1
  bool operator==(const DayBounds&) const = default;
};

// First/last worked slot of the day. A day without work gets the canonical
// empty value b = e = t0.
inline DayBounds derive_day_bounds(const Assignment& x, int r, int d) {
  DayBounds out{false, x.first_slot(), x.first_slot()};
  for (int t = x.first_slot(); t <= x.last_slot(); ++t) {
    if (!x.works_at(r, t, d)) continue;
    if (!out.worked) out.begin_slot = t;
    out.worked = true;
    out.end_slot = t + 1;
  }
  return out;
}

// Maximal run of consecutive slots with equal work content.
struct Segment {
  int activity = 0;
  int start_slot = 0;
  int end_slot = 0;  // exclusive
};

// Maximal same-activity runs of (r,d), ascending by start slot. Slots where
// several activities are assigned at once (a D4 breach) yield one segment per
// activity.
inline std::vector<Segment> activity_segments(const Assignment& x, int r, int d) {
  std::vector<Segment> segments;
  for (int a = 0; a < x.num_activities(); ++a) {
    bool prev = false;
    for (int t = x.first_slot(); t <= x.last_slot() + 1; ++t) {
      const bool cur = t <= x.last_slot() && x.get(r, a, t, d);
      if (cur && !prev) segments.push_back({a, t, t + 1});
      if (cur && prev) segments.back().end_slot = t + 1;
      prev = cur;
    }
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& lhs, const Segment& rhs) {
    return lhs.start_slot != rhs.start_slot ? lhs.start_slot < rhs.start_slot
                                            : lhs.activity < rhs.activity;
  });
  return segments;
}

// Maximal stretches of consecutive worked slots (any activity) of (r,d).
inline std::vector<std::pair<int, int>> work_stretches(const Assignment& x, int r, int d) {
  std::vector<std::pair<int, int>> stretches;
  bool prev = false;
  for (int t = x.first_slot(); t <= x.last_slot() + 1; ++t) {
    const bool cur = t <= x.last_slot() && x.works_at(r, t, d);
    if (cur && !prev) stretches.emplace_back(t, t + 1);
    if (cur && prev) stretches.back().second = t + 1;
    prev = cur;
  }
  return stretches;
}

// An assignment plus the per-demand slack minutes and the exact objective.
// Slacks are canonical (max(0, k - covered)); use make_solution to build.
struct Solution {
  Assignment assignment;
  std::vector<std::int64_t> slack_minutes;
  CostUnits objective_units = 0;
};

}  // namespace sdpts
