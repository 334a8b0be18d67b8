// Acceptance suite: every criterion at full level, one line each.

#include <cstdio>

#include "geobound/verify.hpp"

int main() {
  const auto results = geobound::run_checks(geobound::VerifyLevel::full);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s %-22s %s  (%.3f s)  %s\n", r.id.c_str(), r.name.c_str(), r.passed ? "PASS" : "FAIL", r.seconds,
                r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
