#include "traced/check/controls.hpp"
#include "traced/check/generators.hpp"
#include "traced/check/report.hpp"
#include "traced/check/suites.hpp"
#include "traced/errors.hpp"
#include "traced/thickened.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

using namespace traced;
using namespace traced::check;

namespace {

SuiteConfig small(std::vector<std::string> selectors, std::size_t trials, std::uint64_t seed = 42) {
  SuiteConfig cfg;
  cfg.suites = std::move(selectors);
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rng streams are deterministic and independent") {
  Rng a(42, "slide.finvect", 3), b(42, "slide.finvect", 3);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42, "slide.finvect", 4), d(42, "slide.graded", 3), e(43, "slide.finvect", 3);
  Rng base(42, "slide.finvect", 3);
  auto x = base.next();
  CHECK(c.next() != x);
  CHECK(d.next() != x);
  CHECK(e.next() != x);
}

TEST_CASE("rng bounded draws stay in range and cover it") {
  Rng r(7);
  std::set<long> seen;
  for (int i = 0; i < 2000; ++i) {
    long v = r.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    seen.insert(v);
    Rational q = r.small_nonzero_rational();
    CHECK(q != 0);
    CHECK(q == Rational(q.get_num(), q.get_den()));
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("suite ids are unique and every suite is tagged") {
  std::set<std::string> ids;
  for (const auto& s : suites()) {
    CAPTURE(s.id);
    CHECK(ids.insert(s.id).second);
    CHECK_FALSE(s.tags.empty());
    CHECK_FALSE(s.summary.empty());
    CHECK(find_suite(s.id) == &s);
  }
  CHECK(find_suite("no.such.suite") == nullptr);
}

TEST_CASE("selectors match all, exact ids and prefixes") {
  CHECK(select_suites({"all"}).size() == suites().size());
  auto slide = select_suites({"slide"});
  CHECK(slide.size() == 4);
  for (const auto* s : slide) CHECK(s->id.rfind("slide.", 0) == 0);
  auto one = select_suites({"slide.graded", "slide.graded"});
  CHECK(one.size() == 1);
  CHECK_THROWS_AS(select_suites({"slid"}), InvalidArgument);
  CHECK_THROWS_AS(select_suites({"nope"}), InvalidArgument);
}

TEST_CASE("every suite passes at seed 42 except the plain-swap control") {
  auto report = run(small({"all"}, 40), 4);
  for (const auto& r : report.results) {
    CAPTURE(r.suite->id);
    if (r.suite->id == "balanced.negative-control") continue;
    CHECK(r.passed());
  }
}

TEST_CASE("plain swap in graded spaces gives no multiplicativity counterexample") {
  // t: I→X⊗Z only reaches degree 0, where the plain swap and s coincide.
  auto report = run(small({"balanced.negative-control"}, 200));
  REQUIRE(report.results.size() == 1);
  CHECK(report.results[0].failures == 0);
  CHECK_FALSE(report.passed());
}

TEST_CASE("untwisted and mutated switchings are caught") {
  auto report = run(small({"balanced.untwisted-control", "supervect.koszul-mutation",
                           "balanced.crossing-over-over", "balanced.crossing-under-under"},
                          200));
  for (const auto& r : report.results) {
    CAPTURE(r.suite->id);
    CHECK(r.suite->expect_counterexample);
    CHECK(r.failures > 0);
    REQUIRE(r.first.has_value());
    CHECK(r.first->inputs.contains("violated"));
  }
}

TEST_CASE("reports are byte-identical across runs and job counts") {
  auto cfg = small({"slide", "multiplicativity", "bord", "sec2"}, 25);
  std::string serial = to_json(run(cfg, 1)).dump();
  CHECK(to_json(run(cfg, 1)).dump() == serial);
  CHECK(to_json(run(cfg, 8)).dump() == serial);
  auto other = cfg;
  other.seed = 43;
  CHECK(to_json(run(other, 1)).dump() != serial);
}

TEST_CASE("report json carries schema, config and one entry per suite") {
  auto report = run(small({"symmetry.finvect", "balanced.untwisted-control"}, 30));
  auto j = to_json(report);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["config"]["trials"] == 30);
  CHECK(j["config"]["q"] == "2");
  REQUIRE(j["suites"].size() == 2);
  CHECK(j["suites"][0]["outcome"] == "holds");
  CHECK(j["suites"][0]["first_counterexample"].is_null());
  CHECK(j["suites"][1]["outcome"] == "counterexample found");
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(to_json(report, true).contains("wall_ms"));
  auto cfg = config_from_json(j["config"]);
  CHECK(cfg.seed == 42);
  CHECK(cfg.trials == 30);
  CHECK(cfg.q == 2);
}

TEST_CASE("replay reproduces recorded counterexamples") {
  auto report = run(small({"balanced.untwisted-control", "supervect.koszul-mutation"}, 200));
  auto j = to_json(report);
  auto outcome = replay(j);
  CHECK(outcome.ok);
  REQUIRE(outcome.entries.size() == 2);
  for (const auto& e : outcome.entries) CHECK(e.reproduced);

  auto tampered = j;
  tampered["suites"][0]["first_counterexample"]["inputs"]["tampered"] = true;
  CHECK_FALSE(replay(tampered).ok);
}

TEST_CASE("stored regression report replays") {
  auto j = nlohmann::json::parse(slurp(TRACED_REGRESSION_REPORT));
  auto outcome = replay(j);
  CHECK(outcome.ok);
  CHECK_FALSE(outcome.entries.empty());
}

TEST_CASE("a throwing trial counts as a failure with the message recorded") {
  Suite s{"test.throws", {"core.1"}, "finvect", "throws", false,
          [](const SuiteConfig&, Rng&) -> TrialResult { throw InvalidArgument("boom"); }};
  auto r = run_suite(s, small({}, 3));
  CHECK(r.failures == 3);
  REQUIRE(r.first.has_value());
  CHECK(r.first->inputs["exception"].get<std::string>().find("boom") != std::string::npos);
}

TEST_CASE("generated graded triples are usually nontrivial") {
  GradedVect v(2);
  std::size_t nonzero = 0;
  const std::size_t n = 200;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(42, "nontrivial", i);
    Generator gen(rng, {});
    auto x = gen.object(v);
    auto tr = gen.triple(v, x, x);
    if (!(psi(v, tr) == v.zero_mor(x, x))) ++nonzero;
  }
  CHECK(nonzero * 2 > n);
}

// Isometry arcs carry length 0; bordism arcs are strictly positive.
TEST_CASE("generated morphisms are perfect matchings") {
  RBord cat;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(1, "bord", i);
    Generator gen(rng, {});
    auto x = gen.points(0, 3);
    auto y = gen.points(x.size() % 2 + 2 * std::size_t(rng.uniform(0, 1)));
    auto f = gen.morphism(cat, x, y);
    std::set<std::pair<int, std::size_t>> ends;
    for (const auto& a : f.arcs()) {
      CHECK(a.length >= 0);
      if (f.is_bordism()) CHECK(a.length > 0);
      CHECK(ends.insert({int(a.a.side), a.a.index}).second);
      CHECK(ends.insert({int(a.b.side), a.b.index}).second);
    }
    CHECK(ends.size() == x.size() + y.size());
  }
}

TEST_CASE("traceability table and suite tags agree") {
  std::string doc = slurp(TRACED_TRACEABILITY_DOC);
  std::regex row(R"(^\| `([a-z0-9.\-]+)` \|)");
  std::set<std::string> documented;
  std::istringstream lines(doc);
  for (std::string line; std::getline(lines, line);) {
    std::smatch m;
    if (std::regex_search(line, m, row)) documented.insert(m[1]);
  }
  std::set<std::string> used;
  for (const auto& s : suites())
    for (const auto& t : s.tags) used.insert(t);
  for (const auto& t : documented) {
    CAPTURE(t);
    CHECK(used.count(t));
  }
  for (const auto& t : used) {
    CAPTURE(t);
    CHECK(documented.count(t));
  }
}
