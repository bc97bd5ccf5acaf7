// Runs every acceptance criterion and prints one line per criterion.
// Pass --extended to include the optional n = 7 cardinality check.

#include <cstdio>
#include <cstring>

#include "parkfact/verify.hpp"

int main(int argc, char** argv) {
  parkfact::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) options.extended = true;
  }
  int failures = 0;
  int index = 0;
  for (const auto& name : parkfact::suite_names()) {
    ++index;
    const auto r = parkfact::run_suite(name, options);
    std::printf("[%s] criterion %2d %-16s %8lld checks %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", index, r.name.c_str(),
                r.checks, r.seconds, r.title.c_str());
    if (!r.passed) {
      std::printf("       counterexample: %s\n", r.counterexample.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
