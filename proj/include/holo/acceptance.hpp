#pragma once

#include <optional>
#include <string>
#include <vector>

namespace holo {

// One checked claim of the verification suite. detail carries the measured
// quantities on success and the first failing conditions on failure.
struct AcceptanceCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Case names in suite order. The final entry is a scope statement: it
// exercises the opposite-replacement mechanism on catalog central products
// and says so, because the exotic families it was designed for are not
// constructible from the builtin catalog.
const std::vector<std::string>& acceptance_case_names();

// Runs the whole suite, or a single case when only is set. Unknown names
// throw ParseError. An exception inside a case fails that case with the
// message as detail; the runner itself does not throw for failures.
std::vector<AcceptanceCase> run_acceptance(
    const std::optional<std::string>& only = std::nullopt);

}  // namespace holo
