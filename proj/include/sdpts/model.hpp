#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdpts/compatibility.hpp"
#include "sdpts/instance.hpp"

namespace sdpts {

enum class VarKind { Binary, IntegerRange, ContinuousNonneg };
enum class Sense { LE, GE, EQ };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Binary;
  std::int64_t lb = 0;  // used for IntegerRange; binaries are [0,1],
  std::int64_t ub = 1;  // continuous slacks are [0, +inf)
};

struct Term {
  int var = 0;
  std::int64_t coeff = 0;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::LE;
  std::int64_t rhs = 0;
};

// Objective coefficients are kept in exact internal units (see
// Instance::affinity_scale): a slack variable costs K * p(a) units per
// minute, an assignment variable costs c(r,a) micro units. Natural-unit
// coefficients for file emission are units / (K * 1e6).
struct ObjTerm {
  int var = 0;
  std::int64_t units = 0;
};

// Solver-agnostic minimization model. Variable and row order is canonical,
// two builds of the same instance are identical.
struct MilpModel {
  std::string name = "SDPTS";
  std::vector<Variable> variables;
  std::vector<Row> rows;
  std::vector<ObjTerm> objective;
  std::int64_t affinity_scale = 1;  // K

  double natural_coeff(std::int64_t units) const {
    return static_cast<double>(units) /
           (static_cast<double>(affinity_scale) * static_cast<double>(kMicroScale));
  }
};

struct ModelStats {
  int num_vars = 0;
  int num_binaries = 0;
  int num_rows = 0;
  std::int64_t num_nonzeros = 0;  // constraint matrix entries
};

inline ModelStats model_stats(const MilpModel& m) {
  ModelStats s;
  s.num_vars = static_cast<int>(m.variables.size());
  for (const auto& v : m.variables)
    if (v.kind == VarKind::Binary) s.num_binaries++;
  s.num_rows = static_cast<int>(m.rows.size());
  for (const auto& row : m.rows) s.num_nonzeros += static_cast<std::int64_t>(row.terms.size());
  return s;
}

// ---- variable naming scheme ------------------------------------------------
// x_r{r}_a{a}_t{t}_d{d}  y_r{r}_a{a}_t{t}_d{d}  z_r{r}_d{d}
// b_r{r}_d{d}            e_r{r}_d{d}            s_a{a}_d{d}_t{t1}_{t2}
// Indices are 0-based for employees/activities, absolute for slots, 1-based
// for days. The scheme is bijective and parsed back on import.

inline std::string x_name(int r, int a, int t, int d) {
  return "x_r" + std::to_string(r) + "_a" + std::to_string(a) + "_t" + std::to_string(t) + "_d" +
         std::to_string(d);
}
inline std::string y_name(int r, int a, int t, int d) {
  return "y_r" + std::to_string(r) + "_a" + std::to_string(a) + "_t" + std::to_string(t) + "_d" +
         std::to_string(d);
}
inline std::string z_name(int r, int d) { return "z_r" + std::to_string(r) + "_d" + std::to_string(d); }
inline std::string b_name(int r, int d) { return "b_r" + std::to_string(r) + "_d" + std::to_string(d); }
inline std::string e_name(int r, int d) { return "e_r" + std::to_string(r) + "_d" + std::to_string(d); }
inline std::string s_name(const Demand& dem) {
  return "s_a" + std::to_string(dem.activity) + "_d" + std::to_string(dem.day) + "_t" +
         std::to_string(dem.start_slot) + "_" + std::to_string(dem.end_slot);
}

struct ParsedVarName {
  char kind = '?';  // x y z b e s
  int r = -1, a = -1, t = -1, d = -1, t2 = -1;
};

inline std::optional<ParsedVarName> parse_var_name(const std::string& name) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const std::size_t next = name.find('_', pos);
    tokens.push_back(name.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  const auto num = [](const std::string& tok, char prefix, int& out) {
    std::size_t at = prefix == '\0' ? 0 : 1;
    if (prefix != '\0' && (tok.empty() || tok[0] != prefix)) return false;
    if (at >= tok.size()) return false;
    int sign = 1;
    if (tok[at] == '-') {
      sign = -1;
      ++at;
    }
    if (at >= tok.size()) return false;
    long long v = 0;
    for (; at < tok.size(); ++at) {
      if (tok[at] < '0' || tok[at] > '9') return false;
      v = v * 10 + (tok[at] - '0');
      if (v > 1'000'000'000) return false;
    }
    out = static_cast<int>(sign * v);
    return true;
  };

  ParsedVarName p;
  if (tokens.empty() || tokens[0].size() != 1) return std::nullopt;
  p.kind = tokens[0][0];
  switch (p.kind) {
    case 'x':
    case 'y':
      if (tokens.size() != 5 || !num(tokens[1], 'r', p.r) || !num(tokens[2], 'a', p.a) ||
          !num(tokens[3], 't', p.t) || !num(tokens[4], 'd', p.d))
        return std::nullopt;
      return p;
    case 'z':
    case 'b':
    case 'e':
      if (tokens.size() != 3 || !num(tokens[1], 'r', p.r) || !num(tokens[2], 'd', p.d)) return std::nullopt;
      return p;
    case 's':
      if (tokens.size() != 5 || !num(tokens[1], 'a', p.a) || !num(tokens[2], 'd', p.d) ||
          !num(tokens[3], 't', p.t) || !num(tokens[4], '\0', p.t2))
        return std::nullopt;
      return p;
    default:
      return std::nullopt;
  }
}

// ---- model construction ----------------------------------------------------

namespace detail {

class ModelBuilder {
 public:
  ModelBuilder(const Instance& inst, const CompatibilityMatrix& cra) : inst_(inst), cra_(cra) {}

  MilpModel build() {
    const auto op = inst_.opcas_activity();
    const auto cl = inst_.clcas_activity();
    if (op.has_value() != cl.has_value())
      throw FormulationError("checkout: instance has " + std::string(op ? "opCAS" : "clCAS") +
                             " but not its counterpart");
    assert_slot_multiples();

    model_.affinity_scale = inst_.affinity_scale();
    declare_variables();
    rows_d1();
    rows_d2();
    rows_d3();
    rows_d4();
    rows_d5();
    rows_l1();
    rows_l2();
    rows_l3();
    rows_l4();
    rows_l5();
    rows_l6();
    rows_g1();
    rows_g2();
    rows_g3();
    if (op) rows_g6(*op, *cl);
    objective();
    return std::move(model_);
  }

 private:
  bool cell(int r, int a, int t, int d) const {
    return cra_.at(r, a) && inst_.employees[r].available_at(inst_.grid, t, d);
  }
  bool any_cell_at(int r, int t, int d) const {
    for (int a = 0; a < inst_.num_activities(); ++a)
      if (cell(r, a, t, d)) return true;
    return false;
  }

  void assert_slot_multiples() const {
    const auto& rules = inst_.rules;
    for (int v : {rules.max_daily_minutes, rules.max_horizon_minutes, rules.max_stretch_minutes,
                  rules.min_break_minutes, rules.max_daily_span_minutes, rules.min_rest_minutes,
                  rules.min_work_after_break_minutes})
      if (v % inst_.grid.ts != 0)
        throw FormulationError("rule parameter " + std::to_string(v) + " is not a multiple of ts");
    for (const auto& act : inst_.activities)
      if (act.min_consecutive_minutes % inst_.grid.ts != 0)
        throw FormulationError("activity '" + act.id + "': G3 minimum is not a multiple of ts");
  }

  int add_var(std::string name, VarKind kind, std::int64_t lb, std::int64_t ub) {
    model_.variables.push_back({std::move(name), kind, lb, ub});
    return static_cast<int>(model_.variables.size()) - 1;
  }
  void add_row(std::string name, std::vector<Term> terms, Sense sense, std::int64_t rhs) {
    model_.rows.push_back({std::move(name), std::move(terms), sense, rhs});
  }

  void declare_variables() {
    const TimeGrid& g = inst_.grid;
    x_.assign(static_cast<std::size_t>(inst_.num_employees()) * inst_.num_activities() * g.num_slots() *
                  g.days,
              -1);
    y_ = x_;
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int a = 0; a < inst_.num_activities(); ++a)
        for (int t = g.first_slot; t <= g.last_slot; ++t)
          for (int d = 1; d <= g.days; ++d)
            if (cell(r, a, t, d)) x_[idx(r, a, t, d)] = add_var(x_name(r, a, t, d), VarKind::Binary, 0, 1);
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int a = 0; a < inst_.num_activities(); ++a)
        for (int t = g.first_slot; t <= g.last_slot; ++t)
          for (int d = 1; d <= g.days; ++d)
            if (cell(r, a, t, d) || (t > g.first_slot && cell(r, a, t - 1, d)))
              y_[idx(r, a, t, d)] = add_var(y_name(r, a, t, d), VarKind::IntegerRange, -1, 1);
    z_.assign(static_cast<std::size_t>(inst_.num_employees()) * g.days, -1);
    b_ = z_;
    e_ = z_;
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d) z_[rd(r, d)] = add_var(z_name(r, d), VarKind::Binary, 0, 1);
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d)
        b_[rd(r, d)] = add_var(b_name(r, d), VarKind::IntegerRange, g.first_slot, g.last_slot + 1);
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d)
        e_[rd(r, d)] = add_var(e_name(r, d), VarKind::IntegerRange, g.first_slot, g.last_slot + 1);
    s_.clear();
    for (const auto& dem : inst_.demands)
      s_.push_back(add_var(s_name(dem), VarKind::ContinuousNonneg, 0, 0));
  }

  std::size_t idx(int r, int a, int t, int d) const {
    const TimeGrid& g = inst_.grid;
    return ((static_cast<std::size_t>(r) * inst_.num_activities() + a) * g.days + (d - 1)) *
               g.num_slots() +
           (t - g.first_slot);
  }
  std::size_t rd(int r, int d) const { return static_cast<std::size_t>(r) * inst_.grid.days + (d - 1); }

  // D1: y(t) = x(t) - x(t-1), with x before the window fixed to zero.
  void rows_d1() {
    const TimeGrid& g = inst_.grid;
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int a = 0; a < inst_.num_activities(); ++a)
        for (int t = g.first_slot; t <= g.last_slot; ++t)
          for (int d = 1; d <= g.days; ++d) {
            const int yv = y_[idx(r, a, t, d)];
            if (yv < 0) continue;
            std::vector<Term> terms{{yv, 1}};
            if (x_[idx(r, a, t, d)] >= 0) terms.push_back({x_[idx(r, a, t, d)], -1});
            if (t > g.first_slot && x_[idx(r, a, t - 1, d)] >= 0)
              terms.push_back({x_[idx(r, a, t - 1, d)], 1});
            add_row("D1_r" + std::to_string(r) + "_a" + std::to_string(a) + "_t" + std::to_string(t) +
                        "_d" + std::to_string(d),
                    std::move(terms), Sense::EQ, 0);
          }
  }

  // D2: sum x <= M z and sum x >= z, M = |A| * |T|.
  void rows_d2() {
    const TimeGrid& g = inst_.grid;
    const std::int64_t big_m = static_cast<std::int64_t>(inst_.num_activities()) * g.num_slots();
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d) {
        std::vector<Term> sum;
        for (int a = 0; a < inst_.num_activities(); ++a)
          for (int t = g.first_slot; t <= g.last_slot; ++t)
            if (x_[idx(r, a, t, d)] >= 0) sum.push_back({x_[idx(r, a, t, d)], 1});
        if (!sum.empty()) {
          auto upper = sum;
          upper.push_back({z_[rd(r, d)], -big_m});
          add_row("D2a_r" + std::to_string(r) + "_d" + std::to_string(d), std::move(upper), Sense::LE, 0);
        }
        auto lower = sum;
        lower.push_back({z_[rd(r, d)], -1});
        add_row("D2b_r" + std::to_string(r) + "_d" + std::to_string(d), std::move(lower), Sense::GE, 0);
      }
  }

  // D3: b <= t + tsD (1 - sum_a x) and e >= (t+1) sum_a x.
  void rows_d3() {
    const TimeGrid& g = inst_.grid;
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int t = g.first_slot; t <= g.last_slot; ++t)
        for (int d = 1; d <= g.days; ++d) {
          if (!any_cell_at(r, t, d)) continue;
          std::vector<Term> bt{{b_[rd(r, d)], 1}};
          std::vector<Term> et{{e_[rd(r, d)], 1}};
          for (int a = 0; a < inst_.num_activities(); ++a)
            if (x_[idx(r, a, t, d)] >= 0) {
              bt.push_back({x_[idx(r, a, t, d)], g.slots_per_day()});
              et.push_back({x_[idx(r, a, t, d)], -(static_cast<std::int64_t>(t) + 1)});
            }
          add_row("D3b_r" + std::to_string(r) + "_t" + std::to_string(t) + "_d" + std::to_string(d),
                  std::move(bt), Sense::LE, static_cast<std::int64_t>(t) + g.slots_per_day());
          add_row("D3e_r" + std::to_string(r) + "_t" + std::to_string(t) + "_d" + std::to_string(d),
                  std::move(et), Sense::GE, 0);
        }
  }

  void rows_d4() {
    const TimeGrid& g = inst_.grid;
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int t = g.first_slot; t <= g.last_slot; ++t)
        for (int d = 1; d <= g.days; ++d) {
          std::vector<Term> terms;
          for (int a = 0; a < inst_.num_activities(); ++a)
            if (x_[idx(r, a, t, d)] >= 0) terms.push_back({x_[idx(r, a, t, d)], 1});
          if (terms.size() < 2) continue;  // a single binary never exceeds 1
          add_row("D4_r" + std::to_string(r) + "_t" + std::to_string(t) + "_d" + std::to_string(d),
                  std::move(terms), Sense::LE, 1);
        }
  }

  void rows_d5() {
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= inst_.grid.days; ++d)
        add_row("D5_r" + std::to_string(r) + "_d" + std::to_string(d),
                {{b_[rd(r, d)], 1}, {e_[rd(r, d)], -1}}, Sense::LE, 0);
  }

  void rows_l1() {
    const TimeGrid& g = inst_.grid;
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d) {
        std::vector<Term> terms;
        for (int a = 0; a < inst_.num_activities(); ++a)
          for (int t = g.first_slot; t <= g.last_slot; ++t)
            if (x_[idx(r, a, t, d)] >= 0) terms.push_back({x_[idx(r, a, t, d)], 1});
        if (terms.empty()) continue;
        add_row("L1_r" + std::to_string(r) + "_d" + std::to_string(d), std::move(terms), Sense::LE,
                inst_.slots(inst_.rules.max_daily_minutes));
      }
  }

  // L2 with the employee override and the worked history folded into the rhs.
  void rows_l2() {
    const TimeGrid& g = inst_.grid;
    for (int r = 0; r < inst_.num_employees(); ++r) {
      std::vector<Term> terms;
      for (int a = 0; a < inst_.num_activities(); ++a)
        for (int t = g.first_slot; t <= g.last_slot; ++t)
          for (int d = 1; d <= g.days; ++d)
            if (x_[idx(r, a, t, d)] >= 0) terms.push_back({x_[idx(r, a, t, d)], 1});
      if (terms.empty()) continue;
      add_row("L2_r" + std::to_string(r), std::move(terms), Sense::LE, inst_.horizon_slot_cap(r));
    }
  }

  void rows_l3() {
    const int cd = inst_.rules.max_consecutive_days;
    for (int r = 0; r < inst_.num_employees(); ++r) {
      for (int d = 1; d + cd <= inst_.grid.days; ++d) {
        std::vector<Term> terms;
        for (int d2 = d; d2 <= d + cd; ++d2) terms.push_back({z_[rd(r, d2)], 1});
        add_row("L3_r" + std::to_string(r) + "_d" + std::to_string(d), std::move(terms), Sense::LE, cd);
      }
      const int streak = inst_.history_of(r).consecutive_worked_days;
      if (streak > 0) {
        const int j = std::min(streak, cd);
        const int lim = std::min(cd + 1 - j, inst_.grid.days);
        std::vector<Term> terms;
        for (int d = 1; d <= lim; ++d) terms.push_back({z_[rd(r, d)], 1});
        add_row("L3h_r" + std::to_string(r), std::move(terms), Sense::LE, cd - j);
      }
    }
  }

  void rows_l4() {
    const TimeGrid& g = inst_.grid;
    const int window = inst_.slots(inst_.rules.max_stretch_minutes + inst_.rules.min_break_minutes);
    if (window < 1 || window > g.num_slots()) return;
    const int cap = inst_.slots(inst_.rules.max_stretch_minutes);
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d)
        for (int t = g.first_slot; t + window - 1 <= g.last_slot; ++t) {
          std::vector<Term> terms;
          for (int t2 = t; t2 < t + window; ++t2)
            for (int a = 0; a < inst_.num_activities(); ++a)
              if (x_[idx(r, a, t2, d)] >= 0) terms.push_back({x_[idx(r, a, t2, d)], 1});
          if (terms.empty()) continue;
          add_row("L4_r" + std::to_string(r) + "_t" + std::to_string(t) + "_d" + std::to_string(d),
                  std::move(terms), Sense::LE, cap);
        }
  }

  void rows_l5() {
    const std::int64_t cap = inst_.slots(inst_.rules.max_daily_span_minutes);
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= inst_.grid.days; ++d)
        add_row("L5_r" + std::to_string(r) + "_d" + std::to_string(d),
                {{e_[rd(r, d)], 1}, {b_[rd(r, d)], -1}}, Sense::LE, cap);
  }

  // L6: tsD + b(d) - e(d-1) >= mr/ts, plus a day-1 row against the history
  // end slot when present.
  void rows_l6() {
    const std::int64_t rhs = inst_.slots(inst_.rules.min_rest_minutes) - inst_.grid.slots_per_day();
    for (int r = 0; r < inst_.num_employees(); ++r) {
      for (int d = 2; d <= inst_.grid.days; ++d)
        add_row("L6_r" + std::to_string(r) + "_d" + std::to_string(d),
                {{b_[rd(r, d)], 1}, {e_[rd(r, d - 1)], -1}}, Sense::GE, rhs);
      const auto& hist = inst_.history_of(r);
      if (hist.last_worked_end_slot)
        add_row("L6h_r" + std::to_string(r), {{b_[rd(r, 1)], 1}}, Sense::GE,
                rhs + *hist.last_worked_end_slot);
    }
  }

  // G1: sum_{[t, t+k)} sum_a x >= k * sum_a y(t), exactly as printed; the
  // summed y binds the row at true shift starts only.
  void rows_g1() {
    const TimeGrid& g = inst_.grid;
    const int k = inst_.slots(inst_.rules.min_work_after_break_minutes);
    if (k < 2) return;  // rows with k <= 1 are identically true
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d)
        for (int t = g.first_slot; t + k - 1 <= g.last_slot; ++t) {
          std::vector<Term> terms;
          bool has_y = false;
          for (int t2 = t; t2 < t + k; ++t2)
            for (int a = 0; a < inst_.num_activities(); ++a)
              if (x_[idx(r, a, t2, d)] >= 0) terms.push_back({x_[idx(r, a, t2, d)], 1});
          for (int a = 0; a < inst_.num_activities(); ++a)
            if (y_[idx(r, a, t, d)] >= 0) {
              terms.push_back({y_[idx(r, a, t, d)], -k});
              has_y = true;
            }
          if (!has_y) continue;
          add_row("G1_r" + std::to_string(r) + "_t" + std::to_string(t) + "_d" + std::to_string(d),
                  std::move(terms), Sense::GE, 0);
        }
  }

  // G2: ts * sum x + alpha >= k, the only soft constraint.
  void rows_g2() {
    for (int i = 0; i < inst_.num_demands(); ++i) {
      const Demand& dem = inst_.demands[i];
      std::vector<Term> terms;
      for (int r = 0; r < inst_.num_employees(); ++r)
        for (int t = dem.start_slot; t < dem.end_slot; ++t)
          if (x_[idx(r, dem.activity, t, dem.day)] >= 0)
            terms.push_back({x_[idx(r, dem.activity, t, dem.day)], inst_.grid.ts});
      terms.push_back({s_[i], 1});
      add_row("G2_" + s_name(dem).substr(2), std::move(terms), Sense::GE, dem.minutes);
    }
  }

  void rows_g3() {
    const TimeGrid& g = inst_.grid;
    for (int a = 0; a < inst_.num_activities(); ++a) {
      const int k = inst_.slots(inst_.activities[a].min_consecutive_minutes);
      if (k < 2) continue;
      for (int r = 0; r < inst_.num_employees(); ++r)
        for (int d = 1; d <= g.days; ++d)
          for (int t = g.first_slot; t + k - 1 <= g.last_slot; ++t) {
            if (y_[idx(r, a, t, d)] < 0) continue;
            std::vector<Term> terms;
            for (int t2 = t; t2 < t + k; ++t2)
              if (x_[idx(r, a, t2, d)] >= 0) terms.push_back({x_[idx(r, a, t2, d)], 1});
            terms.push_back({y_[idx(r, a, t, d)], -k});
            add_row("G3_r" + std::to_string(r) + "_a" + std::to_string(a) + "_t" + std::to_string(t) +
                        "_d" + std::to_string(d),
                    std::move(terms), Sense::GE, 0);
          }
    }
  }

  // G6, four row families with M = |T|.
  void rows_g6(int op, int cl) {
    const TimeGrid& g = inst_.grid;
    const std::int64_t big_m = g.num_slots();
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int d = 1; d <= g.days; ++d) {
        std::vector<Term> op_sum, cl_sum;
        for (int t = g.first_slot; t <= g.last_slot; ++t) {
          if (x_[idx(r, op, t, d)] >= 0) op_sum.push_back({x_[idx(r, op, t, d)], 1});
          if (x_[idx(r, cl, t, d)] >= 0) cl_sum.push_back({x_[idx(r, cl, t, d)], 1});
        }
        if (!op_sum.empty()) {
          auto terms = op_sum;
          for (const auto& term : cl_sum) terms.push_back({term.var, -big_m});
          add_row("G6a_r" + std::to_string(r) + "_d" + std::to_string(d), std::move(terms), Sense::LE, 0);
        }
        if (cl_sum.size() >= 2)
          add_row("G6b_r" + std::to_string(r) + "_d" + std::to_string(d), cl_sum, Sense::LE, 1);
        for (int t = g.first_slot; t <= g.last_slot; ++t) {
          if (x_[idx(r, cl, t, d)] < 0) continue;
          std::vector<Term> tail;
          for (int t2 = t; t2 <= g.last_slot; ++t2)
            if (x_[idx(r, op, t2, d)] >= 0) tail.push_back({x_[idx(r, op, t2, d)], 1});
          if (!tail.empty()) {
            tail.push_back({x_[idx(r, cl, t, d)], big_m});
            add_row("G6c_r" + std::to_string(r) + "_t" + std::to_string(t) + "_d" + std::to_string(d),
                    std::move(tail), Sense::LE, big_m);
          }
          if (t > g.first_slot) {
            std::vector<Term> link{{x_[idx(r, cl, t, d)], 1}};
            if (x_[idx(r, op, t - 1, d)] >= 0) link.push_back({x_[idx(r, op, t - 1, d)], -1});
            add_row("G6d_r" + std::to_string(r) + "_t" + std::to_string(t) + "_d" + std::to_string(d),
                    std::move(link), Sense::LE, 0);
          }
        }
      }
  }

  void objective() {
    const std::int64_t k = inst_.affinity_scale();
    const TimeGrid& g = inst_.grid;
    for (int r = 0; r < inst_.num_employees(); ++r)
      for (int a = 0; a < inst_.num_activities(); ++a) {
        const Micro c = inst_.affinity_cost(r, a);
        if (c == 0) continue;
        for (int t = g.first_slot; t <= g.last_slot; ++t)
          for (int d = 1; d <= g.days; ++d)
            if (x_[idx(r, a, t, d)] >= 0) model_.objective.push_back({x_[idx(r, a, t, d)], c});
      }
    for (int i = 0; i < inst_.num_demands(); ++i) {
      const std::int64_t units = k * inst_.activities[inst_.demands[i].activity].slack_penalty;
      if (units != 0) model_.objective.push_back({s_[i], units});
    }
    std::sort(model_.objective.begin(), model_.objective.end(),
              [](const ObjTerm& lhs, const ObjTerm& rhs) { return lhs.var < rhs.var; });
  }

  const Instance& inst_;
  const CompatibilityMatrix& cra_;
  MilpModel model_;
  std::vector<int> x_, y_, z_, b_, e_;
  std::vector<int> s_;
};

}  // namespace detail

// Builds the complete model. Incompatible and unavailable cells are never
// materialized, so G4/G5 hold structurally.
inline MilpModel build_model(const Instance& inst, const CompatibilityMatrix& cra) {
  detail::ModelBuilder builder(inst, cra);
  return builder.build();
}

}  // namespace sdpts
