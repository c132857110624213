#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dessins {

struct CheckSettings {
  std::size_t workers = 1;
  std::uint64_t seed = 1;
};

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // wall-clock limit; exceeding it fails the criterion
  std::function<CheckOutcome(const CheckSettings&)> run;
};

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  double seconds;
  std::string detail;
};

const std::vector<Criterion>& acceptance_criteria();
CriterionResult run_criterion(const Criterion& c, const CheckSettings& s);

}  // namespace dessins
