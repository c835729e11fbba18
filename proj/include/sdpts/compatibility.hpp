#pragma once

#include <cstdint>
#include <vector>

#include "sdpts/instance.hpp"

namespace sdpts {

// cRA(r,a) = 1 iff the employee holds every skill the activity requires.
class CompatibilityMatrix {
 public:
  CompatibilityMatrix() = default;
  CompatibilityMatrix(int num_employees, int num_activities)
      : num_activities_(num_activities),
        c_(static_cast<std::size_t>(num_employees) * num_activities, 0) {}

  bool at(int r, int a) const { return c_[static_cast<std::size_t>(r) * num_activities_ + a] != 0; }
  void set(int r, int a, bool v) { c_[static_cast<std::size_t>(r) * num_activities_ + a] = v ? 1 : 0; }

 private:
  int num_activities_ = 0;
  std::vector<std::uint8_t> c_;
};

inline CompatibilityMatrix build_compatibility(const Instance& inst) {
  CompatibilityMatrix m(inst.num_employees(), inst.num_activities());
  for (int r = 0; r < inst.num_employees(); ++r)
    for (int a = 0; a < inst.num_activities(); ++a) m.set(r, a, inst.compatible(r, a));
  return m;
}

}  // namespace sdpts
