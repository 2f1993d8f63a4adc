#pragma once

#include "traced/check/suites.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace traced::check {

inline constexpr const char* kReportSchema = "traced.report/1";

// Wall times are included only on request so that identical configs give
// byte-identical reports.
nlohmann::json to_json(const Report& report, bool timing = false);
std::string to_text(const Report& report, bool timing = false);

SuiteConfig config_from_json(const nlohmann::json& config);

struct ReplayEntry {
  std::string suite;
  std::size_t trial = 0;
  bool reproduced = false;  // the trial fails again with identical inputs
  std::string note;
};

struct ReplayOutcome {
  std::vector<ReplayEntry> entries;
  // Every recorded counterexample reproduced and every replayed suite's
  // verdict matches the recorded one.
  bool ok = true;
};

// Reruns the recorded counterexample trials of a saved report.
ReplayOutcome replay(const nlohmann::json& report);
std::string to_text(const ReplayOutcome& outcome);

}  // namespace traced::check
