#include <cstdio>

#include "schurpos/verify.hpp"

// Runs every acceptance criterion at its pinned scope and prints one
// pass/fail line per criterion. Exit code is the number of failures.
int main() {
  int failed = 0;
  for (const auto& spec : schurpos::criterion_table()) {
    auto result = schurpos::run_criterion(spec.id);
    std::printf("[%s] C%02d %-24s %4zu items, %d failures, %.2fs (budget %.0fs)\n",
                result.pass ? "PASS" : "FAIL", result.id, result.name.c_str(),
                result.items.size(), result.failures(), result.seconds, result.budget_seconds);
    if (!result.pass) {
      ++failed;
      for (const auto& item : result.items)
        if (!item.pass) std::printf("       %s  %s\n", item.input.c_str(), item.detail.c_str());
    }
  }
  return failed;
}
