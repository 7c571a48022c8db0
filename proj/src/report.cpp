#include "lpns/report.hpp"

namespace lpns {

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

bool VerificationReport::pass() const {
  for (const auto& s : suites)
    if (!s.pass()) return false;
  return true;
}

nlohmann::json to_json(const CheckReport& c) {
  nlohmann::json j{{"name", c.name}, {"lhs", c.lhs},   {"rhs", c.rhs},
                   {"slack", c.slack}, {"pass", c.pass}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json suites_json = nlohmann::json::array();
  for (const auto& s : suites) {
    nlohmann::json js{{"name", s.name}, {"pass", s.pass()}};
    if (s.skipped) {
      js["skipped"] = true;
      js["reason"] = s.skip_reason;
    } else {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : s.checks) checks.push_back(lpns::to_json(c));
      js["checks"] = checks;
      js["failures"] = s.failures();
    }
    if (!s.constants.empty()) js["constants"] = s.constants;
    suites_json.push_back(js);
  }
  return nlohmann::json{{"schema_version", schema_version},
                        {"pass", pass()},
                        {"environment", environment},
                        {"suites", suites_json}};
}

}  // namespace lpns
