#include "traced/check/partition.hpp"
#include "traced/check/report.hpp"
#include "traced/check/suites.hpp"
#include "traced/dsl/interpreter.hpp"
#include "traced/dsl/parser.hpp"
#include "traced/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace traced;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CheckArgs {
  check::SuiteConfig cfg;
  std::string format = "text";
  std::string replay;
  std::string q = "2";
  bool timing = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool list = false;
};

int run_check(CheckArgs& args, bool seed_given) {
  if (args.list) {
    for (const auto& s : check::suites()) {
      std::cout << s.id << "  [";
      for (std::size_t i = 0; i < s.tags.size(); ++i) std::cout << (i ? "," : "") << s.tags[i];
      std::cout << "]  " << s.summary << (s.expect_counterexample ? "  (expects a counterexample)" : "")
                << "\n";
    }
    return 0;
  }
  if (!args.replay.empty()) {
    auto outcome = check::replay(nlohmann::json::parse(slurp(args.replay)));
    std::cout << check::to_text(outcome);
    return outcome.ok ? 0 : 1;
  }
  if (!seed_given)
    if (const char* env = std::getenv("TRACED_SEED")) args.cfg.seed = std::stoull(env);
  args.cfg.q = parse_rational(args.q);
  auto report = check::run(args.cfg, args.jobs);
  if (args.format == "json")
    std::cout << check::to_json(report, args.timing).dump(2) << "\n";
  else
    std::cout << check::to_text(report, args.timing);
  return report.passed() ? 0 : 1;
}

int run_eval(const std::string& path, bool types) {
  auto text = slurp(path);
  auto outcome = dsl::run(text);
  if (outcome.exit_code == 2) {
    std::cerr << path << ":" << outcome.error << "\n";
    return 2;
  }
  if (types) {
    for (const auto& b : dsl::typecheck(dsl::parse(text)).bindings)
      std::cout << b.kind << " " << b.name << " : " << b.type << "\n";
  }
  std::cout << outcome.result.transcript();
  return outcome.exit_code;
}

int run_partition(const std::string& matrix_path, const std::string& length, bool use_float) {
  std::ifstream in(matrix_path);
  if (!in) throw InvalidArgument("cannot open " + matrix_path);
  auto a = check::read_matrix(in);
  auto len = parse_rational(length);
  std::cout << "A = " << a.to_string() << ", total length " << to_string(len) << "\n";
  if (use_float) {
    auto rows = check::float_partition_table(a, len);
    std::cout << check::to_text(rows);
    for (const auto& r : rows)
      if (!r.within) return 1;
    return 0;
  }
  auto rows = check::partition_table(a, len);
  std::cout << check::to_text(rows);
  for (const auto& r : rows)
    if (!r.equal()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thickened morphisms and traces: property checks, diagram evaluation, demos"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run seeded property suites");
  check->add_option("--suite", check_args.cfg.suites, "suite id, prefix, or 'all' (repeatable)")
      ->expected(1, -1)
      ->take_all();
  auto* seed = check->add_option("--seed", check_args.cfg.seed, "PRNG seed (TRACED_SEED if unset)");
  check->add_option("--trials", check_args.cfg.trials, "trials per suite")->check(CLI::PositiveNumber);
  check->add_option("--format", check_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--replay", check_args.replay, "rerun the counterexamples of a JSON report")
      ->check(CLI::ExistingFile);
  check->add_option("--max-dim", check_args.cfg.max_dim, "largest generated dimension");
  check->add_option("--max-degree", check_args.cfg.max_degree, "largest generated |degree|");
  check->add_option("--q", check_args.q, "graded braiding parameter");
  check->add_option("--jobs", check_args.jobs, "worker threads")->check(CLI::PositiveNumber);
  check->add_flag("--timing", check_args.timing, "include wall times in the report");
  check->add_flag("--list", check_args.list, "list suites and exit");

  std::string diag;
  bool types = false;
  auto* eval = app.add_subcommand("eval", "evaluate a .diag program");
  eval->add_option("file", diag, "program file")->required()->check(CLI::ExistingFile);
  eval->add_flag("--types", types, "print the inferred type of every binding");

  auto* demo = app.add_subcommand("demo", "demonstrations");
  demo->require_subcommand(1);
  std::string matrix, length;
  bool use_float = false;
  auto* partition = demo->add_subcommand("partition", "E(glued) vs trace pairing over all splits");
  partition->add_option("--matrix", matrix, "square matrix, one row per line")
      ->required()
      ->check(CLI::ExistingFile);
  partition->add_option("--length", length, "total circle length")->required();
  partition->add_flag("--float", use_float, "use exp(-tH) in floating point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors share the error status
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(check_args, seed->count() > 0);
    if (*eval) return run_eval(diag, types);
    if (*partition) return run_partition(matrix, length, use_float);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
