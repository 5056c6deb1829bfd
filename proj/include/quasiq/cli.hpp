#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasiq {

// One line of the reproduction matrix.
struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// The bundled Z2 suite: cocycle facts, simple modules, the product tables
// of both one-arrow-pair and two-arrow-pair quivers, dimension counts,
// growth obstructions, gauge inequivalence and Hopf detection.
std::vector<CheckResult> reproduce_z2_suite();

// Command dispatcher used by the binary and the tests. Returns the process
// exit code: 0 success, 1 failed validation or failed checks, 2 usage.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasiq
