#include "yangian/report.hpp"

#include <algorithm>
#include <sstream>

namespace yangian {

void CheckReport::add(std::string name, bool passed, std::string witness) {
  results_.push_back({std::move(name), passed, std::move(witness)});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& r : other.results_) {
    results_.push_back({prefix.empty() ? r.name : prefix + "/" + r.name, r.passed, r.witness});
  }
}

bool CheckReport::passed() const {
  return std::all_of(results_.begin(), results_.end(), [](const CheckResult& r) { return r.passed; });
}

const CheckResult* CheckReport::first_failure() const {
  auto it = std::find_if(results_.begin(), results_.end(), [](const CheckResult& r) { return !r.passed; });
  return it == results_.end() ? nullptr : &*it;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  auto it = std::find_if(results_.begin(), results_.end(), [&](const CheckResult& r) { return r.name == name; });
  return it == results_.end() ? nullptr : &*it;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  const auto failed = std::count_if(results_.begin(), results_.end(),
                                    [](const CheckResult& r) { return !r.passed; });
  os << (title_.empty() ? "report" : title_) << ": " << results_.size() - failed << "/"
     << results_.size() << " checks passed";
  if (const auto* f = first_failure()) os << "; first failure " << f->name << " (" << f->witness << ")";
  return os.str();
}

}  // namespace yangian
