#pragma once

#include <string>
#include <vector>

namespace yangian {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // first failure, or a short summary on success
};

// Ordered list of named verdicts produced by a verification routine.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string title) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string witness = {});
  void merge(const CheckReport& other, const std::string& prefix = {});

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const std::vector<CheckResult>& results() const { return results_; }
  [[nodiscard]] const std::string& title() const { return title_; }
  [[nodiscard]] const CheckResult* first_failure() const;
  // First result with this name, or nullptr.
  [[nodiscard]] const CheckResult* find(const std::string& name) const;
  [[nodiscard]] std::string summary() const;

 private:
  std::string title_;
  std::vector<CheckResult> results_;
};

}  // namespace yangian
