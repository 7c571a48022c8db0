#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpns/check.hpp"

namespace lpns {

/// One named group of checks, plus the constants it measured. A suite may be
/// skipped with a reason instead of failing (precondition not met).
struct SuiteReport {
  std::string name;
  std::vector<CheckReport> checks;
  std::map<std::string, double> constants;
  bool skipped = false;
  std::string skip_reason;

  bool pass() const { return skipped || all_pass(checks); }
  int failures() const;
};

struct VerificationReport {
  static constexpr int schema_version = 1;

  std::vector<SuiteReport> suites;
  std::map<std::string, std::string> environment;

  bool pass() const;
  nlohmann::json to_json() const;
};

nlohmann::json to_json(const CheckReport& c);

}  // namespace lpns
