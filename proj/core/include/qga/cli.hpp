#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qga {

// full command-line surface of the qga tool; args excludes the program name.
// Returns the process exit status: 0 success / all checks passed,
// 1 a verification check failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qga
