// Acceptance gate: runs every criterion, prints one pass/fail line each,
// exits nonzero if any failed.

#include <cstdio>
#include <string>

#include "captor/verify.hpp"

int main() {
  captor::verify::VerifyOptions opt;
  const auto run = captor::verify::run_acceptance_with_determinism(opt);
  for (const auto& r : run.results) {
    std::string line = r.detail;
    if (!line.empty()) line += "  ";
    std::printf("criterion %2d %-32s %s  %s(%.1fs)\n", r.index,
                r.name.c_str(), r.passed ? "PASS" : "FAIL", line.c_str(),
                r.seconds);
  }
  std::printf("%s\n",
              run.all_passed ? "all criteria passed" : "ACCEPTANCE FAILURE");
  return run.all_passed ? 0 : 1;
}
