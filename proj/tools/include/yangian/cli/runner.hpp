#pragma once

#include <string>

#include "json.hpp"
#include "yangian/cli/job.hpp"

namespace yangian::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

struct RunOptions {
  bool timing = false;
};

struct RunResult {
  nlohmann::json report;
  bool passed = false;
};

// Deterministic: identical jobs give identical reports unless timing is requested.
RunResult run_job(const JobDescription& job, const RunOptions& options = {});

// Jobs executed by a full-suite job that lists none.
std::vector<JobDescription> default_suite();

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string render_report(const nlohmann::json& report);

}  // namespace yangian::cli
