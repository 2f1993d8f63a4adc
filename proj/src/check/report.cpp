#include "traced/check/report.hpp"

#include "traced/errors.hpp"

#include <cstdio>
#include <sstream>

namespace traced::check {

using nlohmann::json;

namespace {

std::string outcome(const SuiteResult& r) {
  if (r.suite->expect_counterexample)
    return r.failures > 0 ? "counterexample found" : "no counterexample found";
  return r.failures == 0 ? "holds" : "violated";
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", v);
  return buf;
}

}  // namespace

json to_json(const Report& report, bool timing) {
  const auto& cfg = report.config;
  json out;
  out["schema"] = kReportSchema;
  out["config"] = {{"suites", cfg.suites},     {"seed", cfg.seed},
                   {"trials", cfg.trials},     {"max_dim", cfg.max_dim},
                   {"max_degree", cfg.max_degree}, {"q", to_string(cfg.q)}};
  json suites = json::array();
  for (const auto& r : report.results) {
    json s = {{"id", r.suite->id},
              {"tags", r.suite->tags},
              {"instance", r.suite->instance},
              {"summary", r.suite->summary},
              {"trials", r.trials},
              {"failures", r.failures},
              {"expect_counterexample", r.suite->expect_counterexample},
              {"outcome", outcome(r)},
              {"passed", r.passed()},
              {"first_counterexample", nullptr}};
    if (r.first) s["first_counterexample"] = {{"trial", r.first->trial}, {"inputs", r.first->inputs}};
    if (timing) s["wall_ms"] = r.wall_ms;
    suites.push_back(std::move(s));
  }
  out["suites"] = std::move(suites);
  out["passed"] = report.passed();
  if (timing) out["wall_ms"] = report.wall_ms;
  return out;
}

std::string to_text(const Report& report, bool timing) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : report.results) {
    passed += r.passed();
    out << (r.passed() ? "PASS  " : "FAIL  ") << r.suite->id << "  [";
    for (std::size_t i = 0; i < r.suite->tags.size(); ++i)
      out << (i ? "," : "") << r.suite->tags[i];
    out << "]  " << outcome(r) << ": " << r.failures << "/" << r.trials << " trials";
    if (r.suite->expect_counterexample) out << " produced a counterexample";
    else out << " failed";
    if (timing) out << "  (" << ms(r.wall_ms) << ")";
    out << "\n";
    if (r.first && !r.passed()) out << "      first at trial " << r.first->trial << ": " << r.first->inputs.dump() << "\n";
  }
  out << passed << "/" << report.results.size() << " suites passed (seed " << report.config.seed
      << ", " << report.config.trials << " trials)";
  if (timing) out << " in " << ms(report.wall_ms);
  out << "\n";
  return out.str();
}

SuiteConfig config_from_json(const json& config) {
  SuiteConfig cfg;
  cfg.suites = config.at("suites").get<std::vector<std::string>>();
  cfg.seed = config.at("seed").get<std::uint64_t>();
  cfg.trials = config.at("trials").get<std::size_t>();
  cfg.max_dim = config.at("max_dim").get<std::size_t>();
  cfg.max_degree = config.at("max_degree").get<int>();
  cfg.q = parse_rational(config.at("q").get<std::string>());
  return cfg;
}

ReplayOutcome replay(const json& report) {
  if (report.value("schema", "") != kReportSchema)
    throw InvalidArgument("not a " + std::string(kReportSchema) + " report");
  SuiteConfig cfg = config_from_json(report.at("config"));
  ReplayOutcome outcome;
  for (const auto& entry : report.at("suites")) {
    const auto& recorded = entry.at("first_counterexample");
    if (recorded.is_null()) continue;
    ReplayEntry e;
    e.suite = entry.at("id").get<std::string>();
    e.trial = recorded.at("trial").get<std::size_t>();
    const Suite* suite = find_suite(e.suite);
    if (!suite) {
      e.note = "unknown suite";
    } else if (suite->expect_counterexample != entry.at("expect_counterexample").get<bool>()) {
      e.note = "suite expectation changed";
    } else {
      auto again = run_trial(*suite, cfg, e.trial);
      if (!again) e.note = "property now holds on the recorded inputs";
      else if (*again != recorded.at("inputs")) e.note = "trial fails with different inputs";
      else e.reproduced = true;
    }
    outcome.ok = outcome.ok && e.reproduced;
    outcome.entries.push_back(std::move(e));
  }
  return outcome;
}

std::string to_text(const ReplayOutcome& outcome) {
  std::ostringstream out;
  for (const auto& e : outcome.entries) {
    out << (e.reproduced ? "REPRODUCED  " : "DIVERGED    ") << e.suite << " trial " << e.trial;
    if (!e.note.empty()) out << "  (" << e.note << ")";
    out << "\n";
  }
  out << outcome.entries.size() << " recorded counterexample(s), "
      << (outcome.ok ? "all reproduced" : "some diverged") << "\n";
  return out.str();
}

}  // namespace traced::check
