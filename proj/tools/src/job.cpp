#include "yangian/cli/job.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "yangian/error.hpp"

namespace yangian::cli {

namespace {

constexpr std::array<std::pair<JobKind, const char*>, 5> kKindNames{{
    {JobKind::VerifyInvariant, "verify-invariant"},
    {JobKind::BetheReconstruct, "bethe-reconstruct"},
    {JobKind::LatticeZ, "lattice-z"},
    {JobKind::FunctionalRelations, "functional-relations"},
    {JobKind::FullSuite, "full-suite"},
}};

struct FamilyKeys {
  std::array<const char*, 2> labels;
  const char* base;
};

FamilyKeys family_keys(Family f) {
  switch (f) {
    case Family::TwoOne: return {{"s", nullptr}, "v2"};
    case Family::ThreeOne: return {{"s2", "s3"}, "v1"};
    case Family::ThreeTwo: return {{"s1", "s2"}, "v3"};
    case Family::FourTwo: return {{"s3", "s4"}, "v4"};
  }
  return {{nullptr, nullptr}, nullptr};
}

// Diagnostics carry the source, the 1-based line and the field path.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& msg) const {
    std::ostringstream os;
    os << source_;
    if (node.IsDefined() && node.Mark().line >= 0) os << ":" << node.Mark().line + 1;
    os << ": field '" << field << "': " << msg;
    throw ParseError(os.str());
  }

  void require_map(const YAML::Node& node, const std::string& field) const {
    if (!node.IsMap()) fail(node, field, "expected a mapping");
  }

  void reject_unknown(const YAML::Node& node, const std::string& path, const std::set<std::string>& allowed) const {
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      if (!allowed.count(key)) fail(kv.first, join(path, key), "unknown field");
    }
  }

  int integer(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected an integer");
    Rational r;
    try {
      r = Rational::parse(node.Scalar());
    } catch (const Error&) {
      fail(node, field, "expected an integer, got '" + node.Scalar() + "'");
    }
    if (!r.is_integer() || r.abs() > Rational(1 << 20)) fail(node, field, "expected an integer, got '" + node.Scalar() + "'");
    return static_cast<int>(r.to_long());
  }

  Rational rational(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected a rational \"p/q\"");
    try {
      return Rational::parse(node.Scalar());
    } catch (const Error&) {
      fail(node, field, "expected a rational \"p/q\", got '" + node.Scalar() + "'");
    }
  }

  std::string string(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected a string");
    return node.Scalar();
  }

  RepLabel rep(const YAML::Node& node, const std::string& field, int n) const {
    const auto text = string(node, field);
    try {
      return parse_rep(text, n);
    } catch (const ParseError& e) {
      fail(node, field, e.what());
    }
  }

  std::vector<Rational> rationals(const YAML::Node& node, const std::string& field) const {
    if (!node.IsSequence()) fail(node, field, "expected a list of rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < node.size(); ++i) out.push_back(rational(node[i], indexed(field, i)));
    return out;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
  static std::string indexed(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

 private:
  std::string source_;
};

InvariantSpec read_invariant(const Reader& r, const YAML::Node& node, const std::string& path, int n) {
  const auto name = r.string(node["family"], Reader::join(path, "family"));
  Family family;
  try {
    family = parse_family(name);
  } catch (const ParseError& e) {
    r.fail(node["family"], Reader::join(path, "family"), e.what());
  }
  const auto keys = family_keys(family);
  InvariantSpec spec;
  spec.family = family;
  spec.n = n;
  for (const char* key : keys.labels) {
    if (key == nullptr) continue;
    if (!node[key]) r.fail(node, Reader::join(path, key), "missing for family " + family_name(family));
    spec.s.push_back(r.integer(node[key], Reader::join(path, key)));
  }
  if (node[keys.base]) spec.base = r.rational(node[keys.base], Reader::join(path, keys.base));
  if (family == Family::FourTwo) {
    if (!node["z"]) r.fail(node, Reader::join(path, "z"), "missing for family FourTwo");
    spec.z = r.rational(node["z"], Reader::join(path, "z"));
  }
  try {
    spec.validate();
  } catch (const ConstraintError& e) {
    r.fail(node, Reader::join(path, "family"), e.what());
  }
  return spec;
}

LatticeParams read_lattice(const Reader& r, const YAML::Node& node, const std::string& path, int n) {
  LatticeParams p;
  p.n = n;
  const auto lines = node["lines"];
  const auto lines_path = Reader::join(path, "lines");
  if (!lines || !lines.IsSequence() || lines.size() == 0) r.fail(lines, lines_path, "expected a non-empty list of lines");
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto line = lines[k];
    const auto lp = Reader::indexed(lines_path, k);
    r.require_map(line, lp);
    r.reject_unknown(line, lp, {"i", "j", "rep", "theta"});
    if (!line["i"] || !line["j"]) r.fail(line, lp, "every line needs endpoints i and j");
    p.endpoints.emplace_back(r.integer(line["i"], lp + ".i"), r.integer(line["j"], lp + ".j"));
    p.reps.push_back(line["rep"] ? r.rep(line["rep"], lp + ".rep", n) : RepLabel::conjugate(1, n));
    p.theta.push_back(line["theta"] ? r.rational(line["theta"], lp + ".theta") : Rational(0));
  }
  const auto alpha = node["alpha"];
  const auto alpha_path = Reader::join(path, "alpha");
  if (!alpha || !alpha.IsSequence()) r.fail(alpha, alpha_path, "expected a list of boundary labels");
  const auto lat = p.lattice();
  try {
    lat.validate();
  } catch (const Error& e) {
    r.fail(lines, lines_path, e.what());
  }
  if (alpha.size() != 2 * p.endpoints.size()) {
    r.fail(alpha, alpha_path, "expected " + std::to_string(2 * p.endpoints.size()) + " labels");
  }
  for (std::size_t m = 0; m < alpha.size(); ++m) {
    const auto label = alpha[m];
    const auto ap = Reader::indexed(alpha_path, m);
    const auto& rep = p.reps[lat.line_at(static_cast<int>(m) + 1).first];
    FockState state;
    if (label.IsScalar()) {
      if (rep != RepLabel::conjugate(1, 2)) r.fail(label, ap, "integer labels need a spin-1/2 line");
      const int v = r.integer(label, ap);
      if (v != 1 && v != 2) r.fail(label, ap, "spin-1/2 labels are 1 or 2");
      state.occupations = v == 1 ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
    } else if (label.IsSequence()) {
      for (std::size_t a = 0; a < label.size(); ++a) state.occupations.push_back(r.integer(label[a], Reader::indexed(ap, a)));
      if (static_cast<int>(state.occupations.size()) != n || state.total() != rep.s) {
        r.fail(label, ap, "occupations do not fit the line representation " + rep.str());
      }
      for (int occ : state.occupations) {
        if (occ < 0) r.fail(label, ap, "occupations must be non-negative");
      }
    } else {
      r.fail(label, ap, "expected 1, 2 or an occupation list");
    }
    p.alpha.push_back(std::move(state));
  }
  if (const auto pos = node["positions"]) {
    p.positions = r.rationals(pos, Reader::join(path, "positions"));
    if (p.positions.size() != alpha.size()) r.fail(pos, Reader::join(path, "positions"), "expected one position per endpoint");
    for (std::size_t m = 1; m < p.positions.size(); ++m) {
      if (!(p.positions[m - 1] < p.positions[m])) r.fail(pos, Reader::join(path, "positions"), "must be strictly increasing");
    }
  }
  if (const auto ez = node["expected_z"]) p.expected_z = r.rational(ez, Reader::join(path, "expected_z"));
  return p;
}

MonodromySpec read_sites(const Reader& r, const YAML::Node& node, const std::string& path, int n) {
  if (!node.IsSequence() || node.size() == 0) r.fail(node, path, "expected a non-empty list of sites");
  MonodromySpec spec;
  spec.n = n;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto site = node[i];
    const auto sp = Reader::indexed(path, i);
    r.require_map(site, sp);
    r.reject_unknown(site, sp, {"rep", "v"});
    if (!site["rep"]) r.fail(site, sp + ".rep", "missing");
    spec.sites.push_back({r.rep(site["rep"], sp + ".rep", n),
                          site["v"] ? r.rational(site["v"], sp + ".v") : Rational(0)});
  }
  return spec;
}

JobDescription read_job(const Reader& r, const YAML::Node& node, const std::string& path) {
  r.require_map(node, path.empty() ? "<root>" : path);
  JobDescription job;
  const auto kind_path = Reader::join(path, "kind");
  if (!node["kind"]) r.fail(node, kind_path, "missing");
  const auto kind = r.string(node["kind"], kind_path);
  try {
    job.kind = parse_kind(kind);
  } catch (const ParseError& e) {
    r.fail(node["kind"], kind_path, e.what());
  }
  std::set<std::string> allowed{"kind", "name", "samples", "sample_count", "max_degree"};
  if (node["name"]) job.name = r.string(node["name"], Reader::join(path, "name"));
  if (node["samples"]) job.samples = r.rationals(node["samples"], Reader::join(path, "samples"));
  if (node["sample_count"]) job.sample_count = r.integer(node["sample_count"], Reader::join(path, "sample_count"));
  if (node["max_degree"]) job.max_degree = r.integer(node["max_degree"], Reader::join(path, "max_degree"));
  int n = 2;
  if (job.kind != JobKind::FullSuite) {
    allowed.insert("n");
    if (node["n"]) n = r.integer(node["n"], Reader::join(path, "n"));
    if (n < 2) r.fail(node["n"], Reader::join(path, "n"), "algebra rank must be at least 2");
  }
  switch (job.kind) {
    case JobKind::VerifyInvariant:
    case JobKind::BetheReconstruct:
    case JobKind::FunctionalRelations: {
      if (job.kind == JobKind::FunctionalRelations && node["sites"] && !node["family"]) {
        allowed.insert("sites");
        job.monodromy = read_sites(r, node["sites"], Reader::join(path, "sites"), n);
        break;
      }
      if (!node["family"]) r.fail(node, Reader::join(path, "family"), "missing");
      job.invariant = read_invariant(r, node, path, n);
      allowed.insert("family");
      const auto keys = family_keys(job.invariant->family);
      for (const char* key : keys.labels) {
        if (key != nullptr) allowed.insert(key);
      }
      allowed.insert(keys.base);
      if (job.invariant->family == Family::FourTwo) allowed.insert("z");
      if (job.kind == JobKind::BetheReconstruct && n != 2) {
        r.fail(node["n"], Reader::join(path, "n"), "Bethe reconstruction is gl(2) only");
      }
      break;
    }
    case JobKind::LatticeZ:
      allowed.insert({"lines", "alpha", "positions", "expected_z"});
      job.lattice = read_lattice(r, node, path, n);
      break;
    case JobKind::FullSuite:
      allowed.insert("jobs");
      if (const auto jobs = node["jobs"]) {
        const auto jp = Reader::join(path, "jobs");
        if (!jobs.IsSequence()) r.fail(jobs, jp, "expected a list of jobs");
        for (std::size_t i = 0; i < jobs.size(); ++i) {
          job.jobs.push_back(read_job(r, jobs[i], Reader::indexed(jp, i)));
          if (job.jobs.back().kind == JobKind::FullSuite) r.fail(jobs[i], Reader::indexed(jp, i), "suites do not nest");
        }
      }
      break;
  }
  r.reject_unknown(node, path, allowed);
  return job;
}

nlohmann::json rationals_json(const std::vector<Rational>& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.pair_str());
  return out;
}

}  // namespace

std::string kind_name(JobKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

JobKind parse_kind(const std::string& name) {
  for (const auto& [k, label] : kKindNames) {
    if (name == label) return k;
  }
  throw ParseError("unknown job kind '" + name + "'");
}

RepLabel parse_rep(const std::string& text, int n) {
  const bool conj = text.rfind("sbar=", 0) == 0;
  const bool sym = !conj && text.rfind("s=", 0) == 0;
  if (!conj && !sym) throw ParseError("representation '" + text + "' is not of the form s=K or sbar=K");
  const auto digits = text.substr(conj ? 5 : 2);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) {
    throw ParseError("representation '" + text + "' has an invalid label");
  }
  const int s = std::stoi(digits);
  return conj ? RepLabel::conjugate(s, n) : RepLabel::symmetric(s, n);
}

BaxterLattice LatticeParams::lattice() const { return BaxterLattice{endpoints, reps, theta}; }

void JobDescription::validate() const {
  switch (kind) {
    case JobKind::VerifyInvariant:
    case JobKind::BetheReconstruct:
      if (!invariant) throw ConstraintError(kind_name(kind) + " needs an invariant family");
      invariant->validate();
      if (kind == JobKind::BetheReconstruct && invariant->n != 2) throw ConstraintError("Bethe reconstruction is gl(2) only");
      break;
    case JobKind::FunctionalRelations:
      if (invariant.has_value() == monodromy.has_value()) {
        throw ConstraintError("functional-relations needs exactly one of a family or explicit sites");
      }
      if (invariant) invariant->validate();
      if (monodromy) monodromy->validate();
      break;
    case JobKind::LatticeZ:
      if (!lattice) throw ConstraintError("lattice-z needs a lattice");
      lattice->lattice().validate();
      if (lattice->alpha.size() != 2 * lattice->endpoints.size()) throw ConstraintError("one label per endpoint required");
      break;
    case JobKind::FullSuite:
      for (const auto& j : jobs) {
        if (j.kind == JobKind::FullSuite) throw ConstraintError("suites do not nest");
        j.validate();
      }
      break;
  }
  if (sample_count && *sample_count < 1) throw ConstraintError("sample_count must be positive");
  if (max_degree && *max_degree < 0) throw ConstraintError("max_degree must be non-negative");
}

JobDescription parse_job(const std::string& text, const std::string& source) {
  const Reader r(source);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    std::ostringstream os;
    os << source << ":" << e.mark.line + 1 << ": " << e.msg;
    throw ParseError(os.str());
  }
  return read_job(r, root, "");
}

JobDescription load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open job file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str(), path);
}

nlohmann::json job_to_json(const JobDescription& job) {
  nlohmann::json j;
  j["kind"] = kind_name(job.kind);
  if (!job.name.empty()) j["name"] = job.name;
  if (!job.samples.empty()) j["samples"] = rationals_json(job.samples);
  if (job.sample_count) j["sample_count"] = *job.sample_count;
  if (job.max_degree) j["max_degree"] = *job.max_degree;
  if (job.invariant) {
    const auto& spec = *job.invariant;
    const auto keys = family_keys(spec.family);
    j["n"] = spec.n;
    j["family"] = family_name(spec.family);
    for (std::size_t i = 0; i < spec.s.size(); ++i) j[keys.labels[i]] = spec.s[i];
    j[keys.base] = spec.base.pair_str();
    if (spec.family == Family::FourTwo) j["z"] = spec.z.pair_str();
  }
  if (job.monodromy) {
    j["n"] = job.monodromy->n;
    auto sites = nlohmann::json::array();
    for (const auto& s : job.monodromy->sites) sites.push_back({{"rep", s.rep.str()}, {"v", s.v.pair_str()}});
    j["sites"] = sites;
  }
  if (job.lattice) {
    const auto& p = *job.lattice;
    j["n"] = p.n;
    auto lines = nlohmann::json::array();
    for (std::size_t k = 0; k < p.endpoints.size(); ++k) {
      lines.push_back({{"i", p.endpoints[k].first},
                       {"j", p.endpoints[k].second},
                       {"rep", p.reps[k].str()},
                       {"theta", p.theta[k].pair_str()}});
    }
    j["lines"] = lines;
    const bool spin_half = p.lattice().is_spin_half();
    auto alpha = nlohmann::json::array();
    for (const auto& st : p.alpha) {
      if (spin_half) alpha.push_back(st.occupations[0] == 1 ? 1 : 2);
      else alpha.push_back(st.occupations);
    }
    j["alpha"] = alpha;
    if (!p.positions.empty()) j["positions"] = rationals_json(p.positions);
    if (p.expected_z) j["expected_z"] = p.expected_z->pair_str();
  }
  if (job.kind == JobKind::FullSuite && !job.jobs.empty()) {
    auto jobs = nlohmann::json::array();
    for (const auto& sub : job.jobs) jobs.push_back(job_to_json(sub));
    j["jobs"] = jobs;
  }
  return j;
}

std::string serialize_job(const JobDescription& job) { return job_to_json(job).dump(2) + "\n"; }

}  // namespace yangian::cli
