#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "yangian/cli/job.hpp"
#include "yangian/cli/runner.hpp"
#include "yangian/error.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("yangian");
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("YANGIAN_LOG")) logger->set_level(spdlog::level::from_str(env));
  spdlog::set_default_logger(logger);
}

struct Verb {
  const char* name;
  const char* help;
  yangian::cli::JobKind kind;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace yangian::cli;
  configure_logging();

  CLI::App app{"yangian-cli: exact verification of Yangian invariants, Bethe vectors and vertex models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kArtifactVersion));

  std::string job_path;
  std::string out_path;
  int samples = 0;
  int max_degree = -1;
  bool timing = false;

  const Verb verbs[] = {
      {"verify", "check invariance, intertwiner and integral form of an invariant", JobKind::VerifyInvariant},
      {"bethe", "reconstruct an invariant as a Bethe vector", JobKind::BetheReconstruct},
      {"lattice", "contract a Baxter lattice partition function", JobKind::LatticeZ},
      {"relations", "solve and check the functional relations", JobKind::FunctionalRelations},
      {"suite", "run a list of jobs, or the built-in suite", JobKind::FullSuite},
  };
  for (const auto& verb : verbs) {
    auto* sub = app.add_subcommand(verb.name, verb.help);
    auto* job_opt = sub->add_option("--job", job_path, "job description (YAML or JSON)")->check(CLI::ExistingFile);
    if (verb.kind != JobKind::FullSuite) job_opt->required();
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--samples", samples, "number of spectral-parameter samples")->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", max_degree, "degree bound for Q-function solves")->check(CLI::NonNegativeNumber);
    sub->add_flag("--timing", timing, "include wall-clock timing in the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? EXIT_SUCCESS : kExitUsage;
  }

  JobKind verb_kind = JobKind::FullSuite;
  for (const auto& verb : verbs) {
    if (app.got_subcommand(verb.name)) verb_kind = verb.kind;
  }

  JobDescription job;
  job.kind = JobKind::FullSuite;
  try {
    if (!job_path.empty()) job = load_job(job_path);
  } catch (const yangian::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (job.kind != verb_kind) {
    std::cerr << "error: " << job_path << ": job kind '" << kind_name(job.kind) << "' does not match verb (expected '"
              << kind_name(verb_kind) << "')\n";
    return kExitUsage;
  }
  const auto apply_flags = [&](JobDescription& j) {
    if (samples > 0) j.sample_count = samples;
    if (max_degree >= 0) j.max_degree = max_degree;
  };
  apply_flags(job);
  for (auto& sub : job.jobs) apply_flags(sub);

  const auto result = run_job(job, RunOptions{timing});
  const auto text = render_report(result.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  return result.passed ? EXIT_SUCCESS : kExitFailed;
}
