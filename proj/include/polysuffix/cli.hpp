#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polysuffix {

// Runs one of sort | factorize | verify | bench over `args` (argv without
// the program name). Returns the process exit code: 0 success or match,
// 1 verification mismatch, 2 I/O or usage error, 3 input-cap violation.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace polysuffix
