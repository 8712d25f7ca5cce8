#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "yangian/invariants.hpp"
#include "yangian/lattice.hpp"
#include "yangian/monodromy.hpp"

namespace yangian::cli {

enum class JobKind { VerifyInvariant, BetheReconstruct, LatticeZ, FunctionalRelations, FullSuite };

std::string kind_name(JobKind kind);
JobKind parse_kind(const std::string& name);

struct LatticeParams {
  int n = 2;
  std::vector<std::pair<int, int>> endpoints;
  std::vector<RepLabel> reps;
  std::vector<Rational> theta;
  BoundaryLabels alpha;
  // Optional second boundary realisation for the line-moving check.
  std::vector<Rational> positions;
  std::optional<Rational> expected_z;

  [[nodiscard]] BaxterLattice lattice() const;

  friend bool operator==(const LatticeParams&, const LatticeParams&) = default;
};

struct JobDescription {
  JobKind kind = JobKind::VerifyInvariant;
  std::string name;
  std::optional<InvariantSpec> invariant;
  std::optional<MonodromySpec> monodromy;  // functional-relations without a family
  std::optional<LatticeParams> lattice;
  std::vector<Rational> samples;
  std::optional<int> sample_count;
  std::optional<int> max_degree;
  std::vector<JobDescription> jobs;  // full-suite only

  void validate() const;

  friend bool operator==(const JobDescription&, const JobDescription&) = default;
};

// Parses YAML (or JSON) job text. Errors carry the source name, line and field.
JobDescription parse_job(const std::string& text, const std::string& source = "<job>");
JobDescription load_job(const std::string& path);

nlohmann::json job_to_json(const JobDescription& job);

// Canonical JSON text with sorted keys; itself a valid job file.
std::string serialize_job(const JobDescription& job);

RepLabel parse_rep(const std::string& text, int n);

}  // namespace yangian::cli
