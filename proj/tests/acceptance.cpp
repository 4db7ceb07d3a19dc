#include <cstdio>
#include <cstring>

#include "frontstab/acceptance.hpp"

// One PASS/FAIL line per acceptance criterion. Pass --quick to skip 2D runs.
int main(int argc, char** argv) {
  frontstab::AcceptanceOptions opts;
  opts.full = !(argc > 1 && std::strcmp(argv[1], "--quick") == 0);
  opts.on_result = [](const frontstab::CriterionResult& r) {
    std::printf("%s\n", frontstab::format_result(r).c_str());
    std::fflush(stdout);
  };
  const auto results = frontstab::run_acceptance(opts);
  return frontstab::all_passed(results) ? 0 : 1;
}
