#include <cstdio>
#include <string>
#include <vector>

#include "holo/acceptance.hpp"

// Runs the verification suite, one line per case, nonzero exit on failure.
// Case names given as arguments restrict the run to those cases.
int main(int argc, char** argv) {
  std::vector<std::string> wanted;
  if (argc > 1)
    for (int i = 1; i < argc; ++i) wanted.push_back(argv[i]);
  else
    wanted = holo::acceptance_case_names();

  bool all = true;
  for (const std::string& name : wanted) {
    std::vector<holo::AcceptanceCase> got;
    try {
      got = holo::run_acceptance(name);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "%s\n", e.what());
      return 2;
    }
    for (const holo::AcceptanceCase& a : got) {
      std::printf("%s %s: %s\n", a.pass ? "PASS" : "FAIL", a.name.c_str(),
                  a.detail.c_str());
      std::fflush(stdout);
      all = all && a.pass;
    }
  }
  return all ? 0 : 1;
}
