#pragma once

#include "traced/check/rng.hpp"
#include "traced/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace traced::check {

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::size_t max_dim = 4;
  int max_degree = 4;
  Rational q = 2;
};

// nullopt when the property holds on the trial's inputs; otherwise the
// inputs (and what went wrong) as JSON.
using TrialResult = std::optional<nlohmann::json>;

struct Suite {
  std::string id;
  std::vector<std::string> tags;
  std::string instance;
  std::string summary;
  // Negative controls pass when at least one trial yields a counterexample.
  bool expect_counterexample = false;
  std::function<TrialResult(const SuiteConfig&, Rng&)> trial;
};

const std::vector<Suite>& suites();
const Suite* find_suite(std::string_view id);
// Each selector is "all", an exact id, or a prefix such as "slide" that
// matches every "slide.*" suite. Throws InvalidArgument on an unknown selector.
std::vector<const Suite*> select_suites(const std::vector<std::string>& selectors);

struct Counterexample {
  std::size_t trial;
  nlohmann::json inputs;
};

struct SuiteResult {
  const Suite* suite = nullptr;
  std::size_t trials = 0;
  std::size_t failures = 0;  // trials on which the property did not hold
  std::optional<Counterexample> first;
  double wall_ms = 0;

  bool passed() const {
    return suite->expect_counterexample ? failures > 0 : failures == 0;
  }
};

TrialResult run_trial(const Suite& suite, const SuiteConfig& cfg, std::size_t trial);
SuiteResult run_suite(const Suite& suite, const SuiteConfig& cfg);

struct Report {
  SuiteConfig config;
  std::vector<SuiteResult> results;
  double wall_ms = 0;

  bool passed() const;
};

// Runs the selected suites on up to `jobs` threads. Results are identical for
// any job count.
Report run(const SuiteConfig& cfg, unsigned jobs = 1);

}  // namespace traced::check
