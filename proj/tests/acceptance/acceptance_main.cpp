// Full-scale randomized verification campaigns, one line per criterion.
// The seed is pinned so reruns are reproducible; exit 0 iff every campaign
// finishes its case count with zero failures.
#include <cstdio>

#include "rihull/verify.hpp"

int main() {
  constexpr std::uint64_t kSeed = 20260814;
  std::printf("campaign seed %llu\n", static_cast<unsigned long long>(kSeed));
  std::vector<rihull::CriterionResult> results = rihull::verify_everything(kSeed);
  bool all_ok = true;
  for (const auto& c : results) {
    bool ok = c.passed();
    all_ok = all_ok && ok;
    std::printf("%-4s %-26s cases=%-6zu failures=%-4zu time=%.1fs\n",
                ok ? "PASS" : "FAIL", c.name.c_str(), c.cases, c.failures, c.seconds);
    for (const auto& n : c.notes) std::printf("     %s\n", n.c_str());
  }
  std::printf("%s\n", all_ok ? "all criteria passed" : "criteria failed");
  return all_ok ? 0 : 1;
}
