#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "sdpts/error.hpp"
#include "sdpts/model.hpp"

namespace sdpts {

namespace detail {

inline std::string fmt_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace detail

// Free-format MPS. Sections NAME, ROWS, COLUMNS (integer variables inside
// INTORG/INTEND markers), RHS, BOUNDS, ENDATA. Output is byte-stable for a
// given model: columns in declaration order, entries objective-first then in
// row order.
inline void emit_mps(const MilpModel& m, std::ostream& os) {
  os << "NAME          " << m.name << "\n";
  os << "ROWS\n";
  os << " N  OBJ\n";
  for (const auto& row : m.rows) {
    const char sense = row.sense == Sense::LE ? 'L' : row.sense == Sense::GE ? 'G' : 'E';
    os << " " << sense << "  " << row.name << "\n";
  }

  // Column-wise view of the matrix.
  std::vector<std::vector<std::pair<const std::string*, double>>> entries(m.variables.size());
  for (const auto& term : m.objective)
    entries[term.var].push_back({nullptr, m.natural_coeff(term.units)});
  for (const auto& row : m.rows)
    for (const auto& term : row.terms)
      entries[term.var].push_back({&row.name, static_cast<double>(term.coeff)});

  os << "COLUMNS\n";
  bool in_integer_block = false;
  int marker = 0;
  for (std::size_t v = 0; v < m.variables.size(); ++v) {
    const bool integral = m.variables[v].kind != VarKind::ContinuousNonneg;
    if (integral != in_integer_block) {
      os << "    MARKER" << marker++ << "    'MARKER'    " << (integral ? "'INTORG'" : "'INTEND'")
         << "\n";
      in_integer_block = integral;
    }
    for (const auto& [row_name, value] : entries[v])
      os << "    " << m.variables[v].name << "  " << (row_name ? *row_name : std::string("OBJ"))
         << "  " << detail::fmt_value(value) << "\n";
  }
  if (in_integer_block) os << "    MARKER" << marker++ << "    'MARKER'    'INTEND'\n";

  os << "RHS\n";
  for (const auto& row : m.rows)
    if (row.rhs != 0)
      os << "    RHS  " << row.name << "  " << row.rhs << "\n";

  os << "BOUNDS\n";
  for (const auto& v : m.variables) {
    if (v.kind == VarKind::Binary) {
      os << " BV BND  " << v.name << "\n";
    } else if (v.kind == VarKind::IntegerRange) {
      os << " LI BND  " << v.name << "  " << v.lb << "\n";
      os << " UI BND  " << v.name << "  " << v.ub << "\n";
    }
    // ContinuousNonneg keeps the MPS default bounds [0, +inf).
  }
  os << "ENDATA\n";
}

inline void emit_mps(const MilpModel& m, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path);
  emit_mps(m, os);
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace sdpts
