// Acceptance run: one PASS/FAIL line per criterion. Not registered with ctest;
// run it from the build tree as ./tests/acceptance.

#include "corpus_oracle.hpp"

#include "traced/check/report.hpp"
#include "traced/check/suites.hpp"
#include "traced/dsl/interpreter.hpp"
#include "traced/dsl/parser.hpp"
#include "traced/dsl/printer.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <thread>

using namespace traced;
using namespace traced::check;
using namespace traced::test;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kTrials = 200;
constexpr double kRuntimeLimitSeconds = 60.0;
constexpr std::size_t kCorpusSize = 50;

struct Verdict {
  bool pass = true;
  std::string detail;
};

const SuiteResult& result(const Report& report, const std::string& id) {
  for (const auto& r : report.results)
    if (r.suite->id == id) return r;
  throw InvalidArgument("suite missing from report: " + id);
}

// All listed suites must pass; the detail lists failures/trials for each.
Verdict suites_pass(const Report& report, const std::vector<std::string>& ids) {
  Verdict v;
  std::ostringstream out;
  for (const auto& id : ids) {
    const auto& r = result(report, id);
    if (!r.passed()) v.pass = false;
    out << (out.tellp() > 0 ? ", " : "") << id << " " << r.failures << "/" << r.trials
        << (r.suite->expect_counterexample ? " counterexamples" : " failures");
  }
  v.detail = out.str();
  return v;
}

Verdict both(Verdict a, const Verdict& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

struct Captured {
  int exit_code = -1;
  std::string out;
  double seconds = 0;
};

Captured capture(const std::string& command) {
  Captured c;
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  int status = pclose(pipe);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Verdict corpus() {
  Verdict v;
  auto m = manifest();
  std::size_t round_trip = 0, values = 0, run_exit = 0, cli_exit = 0;
  for (const auto& entry : m) {
    std::string file = entry["file"];
    std::string family = entry["family"];
    std::string src = slurp(kCorpus / file);
    int want_exit = entry["exit"];
    try {
      auto p = dsl::parse(src);
      if (dsl::print(p) == src && dsl::parse(dsl::print(p)) == p) ++round_trip;
    } catch (const std::exception&) {
    }
    auto got = dsl::run(src);
    if (got.exit_code == want_exit) ++run_exit;
    bool ok;
    if (family == "error") {
      ok = got.error.rfind(entry["error"].get<std::string>(), 0) == 0;
    } else if (family == "asserts") {
      auto want = entry["params"]["passed"];
      ok = got.result.asserts.size() == want.size();
      for (std::size_t i = 0; ok && i < want.size(); ++i)
        ok = got.result.asserts[i].passed == want[i].get<bool>();
    } else {
      auto want = oracle(family, entry["params"], file);
      ok = got.result.printed.size() == want.size();
      for (std::size_t i = 0; ok && i < want.size(); ++i)
        ok = got.result.printed[i].value == want[i];
      for (const auto& a : got.result.asserts) ok = ok && a.passed;
    }
    if (ok) ++values;
    auto cli = capture(std::string(TRACED_CLI) + " eval " + (kCorpus / file).string() +
                       " >/dev/null 2>&1");
    if (cli.exit_code == want_exit) ++cli_exit;
  }
  std::size_t n = m.size();
  v.pass = n == kCorpusSize && round_trip == n && values == n && run_exit == n && cli_exit == n;
  std::ostringstream out;
  out << n << " programs; round-trip " << round_trip << "/" << n << ", oracle values " << values
      << "/" << n << ", exit codes " << run_exit << "/" << n << " in-process, " << cli_exit << "/"
      << n << " via traced eval";
  v.detail = out.str();
  return v;
}

Verdict runtime_and_determinism() {
  std::string cmd = std::string(TRACED_CLI) + " check --suite all --trials " +
                    std::to_string(kTrials) + " --seed " + std::to_string(kSeed) +
                    " --format json 2>/dev/null";
  auto a = capture(cmd);
  auto b = capture(cmd);
  Verdict v;
  bool parsed = nlohmann::json::accept(a.out);
  v.pass = parsed && a.seconds < kRuntimeLimitSeconds && b.seconds < kRuntimeLimitSeconds &&
           a.out == b.out;
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << "runs took " << a.seconds << " s and " << b.seconds << " s (limit "
      << kRuntimeLimitSeconds << " s); reports " << (a.out == b.out ? "identical" : "differ")
      << " (" << a.out.size() << " bytes)";
  v.detail = out.str();
  return v;
}

}  // namespace

int main() {
  SuiteConfig cfg;
  cfg.seed = kSeed;
  cfg.trials = kTrials;
  Report report = run(cfg, std::max(1u, std::thread::hardware_concurrency()));

  std::vector<std::pair<std::string, Verdict>> rows;
  rows.emplace_back("1 psi/tr_hat invariant under slides, 4 instances",
                    suites_pass(report, {"slide.finvect", "slide.supervect", "slide.graded",
                                         "slide.rbord"}));
  rows.emplace_back(
      "2 tr_hat symmetry and pairing symmetry, 4 instances",
      suites_pass(report, {"symmetry.finvect", "symmetry.supervect", "symmetry.graded",
                           "symmetry.rbord", "pairing-symmetry.finvect",
                           "pairing-symmetry.supervect", "pairing-symmetry.graded",
                           "pairing-symmetry.rbord"}));
  rows.emplace_back("3 additivity and bilinearity, 3 linear instances",
                    suites_pass(report, {"additivity.finvect", "additivity.supervect",
                                         "additivity.graded"}));
  rows.emplace_back(
      "4 multiplicativity (supervect, graded q=2) and plain-swap control",
      both(suites_pass(report, {"multiplicativity.supervect", "multiplicativity.graded"}),
           suites_pass(report, {"balanced.negative-control"})));
  rows.emplace_back("5 tr_hat∘alpha∘Φ⁻¹ is the classical / super trace, dims <= 5",
                    suites_pass(report, {"dual.2.finvect", "dual.2.supervect"}));
  rows.emplace_back("6 glue_trace = tr_hat∘cut; independent cuts agree",
                    suites_pass(report, {"bord.glue", "bord.trace-property"}));
  rows.emplace_back("7 partition function equals the trace pairing of the halves",
                    suites_pass(report, {"sec2.partition"}));
  rows.emplace_back("8 composite witness g satisfies both slide equations",
                    suites_pass(report, {"hatcomp.finvect", "hatcomp.supervect",
                                         "hatcomp.graded"}));
  rows.emplace_back("9 .diag corpus round-trips, matches oracles, exit codes", corpus());
  rows.emplace_back("10 full check under 60 s, identical JSON for identical seeds",
                    runtime_and_determinism());

  std::size_t passed = 0;
  for (const auto& [name, v] : rows) {
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << name << "  [" << v.detail << "]\n";
    passed += v.pass;
  }
  std::cout << passed << "/" << rows.size() << " criteria passed (seed " << kSeed << ", "
            << kTrials << " trials per suite)\n";
  return passed == rows.size() ? 0 : 1;
}
