#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsc::cli {

enum ExitCode : int {
  kOk = 0,
  kContractViolation = 1,  // invalid scheme, failed certificate, broken invariant
  kUsage = 2,
  kResource = 3,           // budget exceeded or verdict unknown
};

/// Runs one dscomp command. `args` excludes the program name. Reports go to
/// `out` unless -o/--output names a file; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dsc::cli
