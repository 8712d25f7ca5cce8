#include "yangian/cli/runner.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>

#include "yangian/bethe.hpp"
#include "yangian/error.hpp"

namespace yangian::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultMaxDegree = 16;
constexpr std::size_t kMaxEchoedTerms = 64;
// Largest label for which singular-root Bethe vectors are part of the regular test grid.
constexpr int kTestedSingularLabel = 2;

json checks_json(const CheckReport& report) {
  auto out = json::array();
  for (const auto& r : report.results()) out.push_back({{"name", r.name}, {"passed", r.passed}, {"witness", r.witness}});
  return out;
}

json rationals_json(const std::vector<Rational>& v) {
  auto out = json::array();
  for (const auto& x : v) out.push_back(x.pair_str());
  return out;
}

std::vector<Rational> sample_points(const JobDescription& job, const MonodromySpec& mono) {
  if (!job.samples.empty()) return job.samples;
  if (!job.sample_count) return {};
  std::vector<Rational> vs;
  for (const auto& s : mono.sites) vs.push_back(s.v);
  return default_samples(mono.length(), static_cast<std::size_t>(*job.sample_count), vs);
}

// Points for the functional relations, away from the inhomogeneities.
std::vector<Rational> relation_samples(const JobDescription& job) {
  if (!job.samples.empty()) return job.samples;
  if (!job.sample_count) return {};
  std::vector<Rational> out;
  for (int k = 0; k < *job.sample_count; ++k) out.push_back(Rational(2 * k + 1, 3) + Rational(k, 7));
  return out;
}

int degree_bound(const JobDescription& job) { return job.max_degree.value_or(kDefaultMaxDegree); }

void record_vector(json& results, const std::string& key, const StateVector& v) {
  results[key + "_terms"] = v.size();
  if (v.size() <= kMaxEchoedTerms) results[key] = v.str();
}

void verify_invariant(const JobDescription& job, CheckReport& report, json& results) {
  const auto& spec = *job.invariant;
  const auto mono = monodromy_of(spec);
  const auto samples = sample_points(job, mono);
  results["monodromy"] = mono.str();
  spdlog::debug("building {}", spec.str());
  const auto psi = build_invariant(spec);
  record_vector(results, "invariant", psi);

  report.merge(check_invariance(mono, psi, samples), "invariance");
  report.merge(check_intertwiner(mono, mono.conjugate_count(), psi, samples), "intertwiner");

  spdlog::debug("evaluating the integral form");
  const auto g = grassmannian_eval(spec);
  const auto match = projective_match("projective match", g, psi);
  report.add("grassmannian/" + match.name, match.passed, match.witness);
  if (const auto ratio = projective_ratio(g, psi)) results["grassmannian_ratio"] = ratio->pair_str();

  if (spec.family == Family::FourTwo) {
    const Rational m = Rational(spec.s[0]) - spec.z;
    if (m.is_integer() && m.sign() > 0) {
      report.merge(check_special_point(spec), "special point");
      results["special_point"] = true;
    } else {
      results["special_point"] = false;
    }
  }
}

void bethe_reconstruct(const JobDescription& job, CheckReport& report, json& results) {
  const auto& spec = *job.invariant;
  const auto mono = monodromy_of(spec);
  const auto ev = vacuum_eigenvalues(mono);
  results["alpha"] = ev.alpha().str();
  results["delta"] = ev.delta().str();

  const auto q = solve_q(ev.delta(), degree_bound(job));
  auto catalogue = catalogue_string_roots(spec);
  auto sorted = catalogue;
  std::sort(sorted.begin(), sorted.end());
  results["q_roots"] = rationals_json(q.roots());
  results["string_roots"] = rationals_json(catalogue);
  report.add("string roots", q.roots() == sorted,
             q.roots() == sorted ? std::to_string(sorted.size()) + " roots" : "solver and catalogue disagree");

  report.merge(check_functional_relations_gl2(ev, q, relation_samples(job)), "functional relations");

  const auto equations = check_bethe_equations(ev, catalogue);
  const bool regular = equations.find("regularity")->passed;
  results["regular_roots"] = regular;
  if (regular) {
    report.merge(equations, "bethe equations");
  } else {
    results["bethe_equations"] = "not applicable: " + equations.find("regularity")->witness;
  }

  spdlog::debug("constructing the Bethe vector from {} roots", catalogue.size());
  const auto construction = bethe_construction(mono, catalogue);
  const auto psi = build_invariant(spec);
  const auto match = projective_match("projective match", construction.state, psi);
  report.add("bethe vector/" + match.name, match.passed, match.witness);
  if (const auto ratio = projective_ratio(construction.state, psi)) results["ratio"] = ratio->pair_str();
  results["singular_roots"] = rationals_json(construction.singular_roots);
  results["singular_orders"] = construction.singular_orders;
  if (!construction.singular_roots.empty()) {
    const int top = *std::max_element(spec.s.begin(), spec.s.end());
    results["singular_prescription"] = top <= kTestedSingularLabel ? "tested grid" : "conjectural";
  }
  record_vector(results, "bethe_vector", construction.state);
  report.merge(check_invariance(mono, construction.state, sample_points(job, mono)), "bethe vector invariance");
}

void lattice_z(const JobDescription& job, CheckReport& report, json& results) {
  const auto& p = *job.lattice;
  const auto lat = p.lattice();
  const Rational z = contract_partition_function(lat, p.alpha);
  results["z"] = z.pair_str();
  results["lattice"] = lat.str();
  if (lat.is_spin_half()) {
    std::vector<int> labels;
    for (const auto& st : p.alpha) labels.push_back(st.occupations[0] == 1 ? 1 : 2);
    const bool ice = satisfies_ice_rule(lat, labels);
    results["ice_rule"] = ice;
    if (!ice) report.add("ice rule", z.is_zero(), "Z = " + z.str());
    const Rational closed = perimeter_bethe_z(lat, labels);
    results["perimeter_z"] = closed.pair_str();
    report.add("perimeter formula", closed == z, "closed form " + closed.str() + ", contraction " + z.str());
  }
  if (!p.positions.empty()) {
    report.merge(z_invariance_check(lat, p.alpha, default_positions(lat), BoundaryPositions{p.positions}), "z-invariance");
  }
  if (p.expected_z) {
    report.add("expected value", *p.expected_z == z, "expected " + p.expected_z->str() + ", got " + z.str());
  }
}

void functional_relations(const JobDescription& job, CheckReport& report, json& results) {
  const auto mono = job.monodromy ? *job.monodromy : monodromy_of(*job.invariant);
  results["monodromy"] = mono.str();
  const auto ev = vacuum_eigenvalues(mono);
  auto mu = json::array();
  for (const auto& m : ev.mu) mu.push_back(m.str());
  results["mu"] = mu;
  const auto qs = solve_q_levels(ev.mu, degree_bound(job));
  auto roots = json::array();
  for (const auto& q : qs) roots.push_back(rationals_json(q.roots()));
  results["q_roots"] = roots;
  const auto samples = relation_samples(job);
  const auto gln = check_functional_relations_gln(ev.mu, qs, samples);
  report.merge(gln, "gl(n) relations");
  if (mono.n == 2) {
    const auto gl2 = check_functional_relations_gl2(ev, qs.front(), samples);
    report.merge(gl2, "gl(2) relations");
    report.add("reduction agreement", gl2.passed() == gln.passed(),
               std::string("gl(2) ") + (gl2.passed() ? "pass" : "fail") + ", gl(n) " + (gln.passed() ? "pass" : "fail"));
  }
}

json run_single(const JobDescription& job, bool& passed) {
  json out;
  out["job"] = job_to_json(job);
  CheckReport report(kind_name(job.kind));
  json results = json::object();
  try {
    job.validate();
    switch (job.kind) {
      case JobKind::VerifyInvariant: verify_invariant(job, report, results); break;
      case JobKind::BetheReconstruct: bethe_reconstruct(job, report, results); break;
      case JobKind::LatticeZ: lattice_z(job, report, results); break;
      case JobKind::FunctionalRelations: functional_relations(job, report, results); break;
      case JobKind::FullSuite: throw ConstraintError("suites do not nest");
    }
    passed = report.passed() && !report.results().empty();
  } catch (const Error& e) {
    spdlog::error("{}: {}", kind_name(job.kind), e.what());
    out["error"] = e.what();
    passed = false;
  }
  out["checks"] = checks_json(report);
  out["results"] = results;
  out["passed"] = passed;
  spdlog::info("{} {}: {}", kind_name(job.kind), job.name, passed ? "pass" : "fail");
  return out;
}

}  // namespace

std::vector<JobDescription> default_suite() {
  std::vector<JobDescription> jobs;
  const auto add = [&](JobKind kind, InvariantSpec spec) {
    JobDescription j;
    j.kind = kind;
    j.name = spec.str();
    j.invariant = std::move(spec);
    jobs.push_back(std::move(j));
  };
  const std::vector<InvariantSpec> specs{
      InvariantSpec::two_one(2, 1, 0),
      InvariantSpec::two_one(2, 2, Rational(1, 3)),
      InvariantSpec::three_one(2, 1, 1, 0),
      InvariantSpec::three_two(2, 1, 1, 0),
      InvariantSpec::four_two(2, 1, 1, Rational(5, 2), 0),
      InvariantSpec::four_two(2, 2, 1, Rational(7, 3), 0),
  };
  for (const auto& s : specs) add(JobKind::VerifyInvariant, s);
  for (const auto& s : specs) add(JobKind::BetheReconstruct, s);
  add(JobKind::VerifyInvariant, InvariantSpec::two_one(3, 2, 0));
  add(JobKind::FunctionalRelations, InvariantSpec::two_one(3, 2, 0));
  add(JobKind::FunctionalRelations, InvariantSpec::three_one(2, 1, 1, 0));

  JobDescription lat;
  lat.kind = JobKind::LatticeZ;
  lat.name = "triangle";
  LatticeParams p;
  p.endpoints = {{1, 4}, {2, 5}, {3, 6}};
  p.reps.assign(3, RepLabel::conjugate(1, 2));
  p.theta = {Rational(1, 3), Rational(2, 5), Rational(-7, 4)};
  p.alpha = spin_half_labels({1, 1, 2, 2, 2, 1});
  p.positions = {-5, -1, Rational(-1, 2), Rational(1, 2), 1, 5};
  lat.lattice = p;
  jobs.push_back(std::move(lat));
  return jobs;
}

RunResult run_job(const JobDescription& job, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  json report;
  if (job.kind == JobKind::FullSuite) {
    const auto jobs = job.jobs.empty() ? default_suite() : job.jobs;
    report["job"] = job_to_json(job);
    auto subs = json::array();
    auto checks = json::array();
    bool all = true;
    try {
      job.validate();
    } catch (const Error& e) {
      report["error"] = e.what();
      all = false;
    }
    if (all) {
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        bool ok = false;
        subs.push_back(run_single(jobs[i], ok));
        const auto label = std::to_string(i + 1) + " " + kind_name(jobs[i].kind) +
                           (jobs[i].name.empty() ? std::string() : " " + jobs[i].name);
        checks.push_back({{"name", label}, {"passed", ok}, {"witness", ok ? "" : "sub-job failed"}});
        all = all && ok;
      }
    }
    report["jobs"] = subs;
    report["checks"] = checks;
    report["passed"] = all;
    result.passed = all;
  } else {
    report = run_single(job, result.passed);
  }
  report["schema_version"] = kSchemaVersion;
  report["artifact_version"] = kArtifactVersion;
  if (options.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report["timing"] = {{"wall_seconds", elapsed.count()}};
  }
  result.report = std::move(report);
  return result;
}

std::string render_report(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace yangian::cli
