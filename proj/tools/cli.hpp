#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scg::cli {

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scg::cli
