#pragma once

#include <fstream>
#include <ostream>
#include <string>

#include "sdpts/error.hpp"
#include "sdpts/model.hpp"
#include "sdpts/mps_writer.hpp"

namespace sdpts {

namespace detail {

inline void lp_terms_line(std::ostream& os, const std::string& label,
                          const std::vector<std::pair<std::string, double>>& terms) {
  std::string line = " " + label + ":";
  bool first = true;
  for (const auto& [name, coeff] : terms) {
    std::string piece;
    const double mag = coeff < 0 ? -coeff : coeff;
    piece = (coeff < 0 ? " - " : first ? " " : " + ") + fmt_value(mag) + " " + name;
    if (line.size() + piece.size() > 78) {
      os << line << "\n";
      line = "   ";
    }
    line += piece;
    first = false;
  }
  if (first) line += " 0";
  os << line;
}

}  // namespace detail

// CPLEX-style LP text, same canonical ordering as the MPS writer.
inline void emit_lp(const MilpModel& m, std::ostream& os) {
  os << "\\ " << m.name << "\n";
  os << "Minimize\n";
  std::vector<std::pair<std::string, double>> obj;
  for (const auto& term : m.objective)
    obj.push_back({m.variables[term.var].name, m.natural_coeff(term.units)});
  detail::lp_terms_line(os, "obj", obj);
  os << "\n";

  os << "Subject To\n";
  for (const auto& row : m.rows) {
    std::vector<std::pair<std::string, double>> terms;
    for (const auto& term : row.terms)
      terms.push_back({m.variables[term.var].name, static_cast<double>(term.coeff)});
    detail::lp_terms_line(os, row.name, terms);
    os << (row.sense == Sense::LE ? " <= " : row.sense == Sense::GE ? " >= " : " = ") << row.rhs
       << "\n";
  }

  os << "Bounds\n";
  for (const auto& v : m.variables)
    if (v.kind == VarKind::IntegerRange) os << " " << v.lb << " <= " << v.name << " <= " << v.ub << "\n";

  bool any = false;
  for (const auto& v : m.variables)
    if (v.kind == VarKind::Binary) {
      os << (any ? "" : "Binaries\n") << " " << v.name << "\n";
      any = true;
    }
  any = false;
  for (const auto& v : m.variables)
    if (v.kind == VarKind::IntegerRange) {
      os << (any ? "" : "Generals\n") << " " << v.name << "\n";
      any = true;
    }
  os << "End\n";
}

inline void emit_lp(const MilpModel& m, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path);
  emit_lp(m, os);
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace sdpts
