#pragma once

#include <string>
#include <vector>

namespace lpns {

/// Result of a single inequality or identity check. `pass` means
/// lhs <= rhs * (1 + slack); every report keeps its measured margin so no
/// check is pass/fail without a recorded tolerance.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::string note;

  static CheckReport bound(std::string name, double lhs, double rhs, double slack) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = slack;
    r.pass = lhs <= rhs * (1.0 + slack);
    return r;
  }

  /// Report-only entry (always passes, value recorded in lhs).
  static CheckReport info(std::string name, double value, std::string note = {}) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = value;
    r.pass = true;
    r.note = std::move(note);
    return r;
  }
};

inline bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace lpns
