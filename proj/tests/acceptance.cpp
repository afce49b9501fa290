// One line per criterion; exits nonzero when any criterion fails.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "towerdepth/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = td::criterion_ids();
  int failed = 0;
  for (int id : ids) {
    auto r = td::run_criterion(id);
    std::printf("%s  criterion %d: %s  [%.2f s / %.0f s]  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
