// One line per acceptance criterion; exit status 0 iff all pass.
#include <cstdio>
#include <thread>

#include "dessins/acceptance_checks.hpp"

int main() {
  dessins::CheckSettings s;
  s.workers = std::max(1u, std::thread::hardware_concurrency());
  int failed = 0;
  for (const auto& c : dessins::acceptance_criteria()) {
    auto r = dessins::run_criterion(c, s);
    std::printf("%s %2d  %-48s %8.3f s  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(dessins::acceptance_criteria().size()) - failed,
              dessins::acceptance_criteria().size());
  return failed == 0 ? 0 : 1;
}
