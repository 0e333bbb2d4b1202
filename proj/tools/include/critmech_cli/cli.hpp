#pragma once

#include <ostream>

namespace critmech::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kCriticalFloor = 3,
  kWrongPhase = 4,
  kOracleBreach = 5,
  kIoFailure = 6,
};

// Entry point shared by main() and the in-process tests. Reports go to
// `out` as key=value lines, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critmech::cli
