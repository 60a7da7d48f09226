// Acceptance suite: runs every criterion at the pinned parameters and prints
// one pass/fail line per criterion.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "echkit/verify.hpp"

int main(int argc, char** argv) {
  bool fast = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--fast") == 0) fast = true;
  unsigned long long seed = 0;
  if (const char* env = std::getenv("ECH_KIT_SEED")) seed = std::strtoull(env, nullptr, 10);
  auto results = echkit::verify::run_all(fast, seed);
  bool all = true;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    all = all && r.pass;
    std::printf("[%zu/%zu] %s  %-38s (%6.2fs)  %s\n", i + 1, results.size(),
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria\n", all ? "PASS" : "FAIL",
              (size_t)std::count_if(results.begin(), results.end(),
                                    [](const auto& r) { return r.pass; }),
              results.size());
  return all ? 0 : 1;
}
