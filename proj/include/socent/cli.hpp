#pragma once

#include <string>
#include <vector>

namespace socent {

/// Dispatches the batch CLI. args excludes the program name. Returns the
/// process exit status: 0 on success, 1 on file/runtime errors, 2 on usage
/// errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace socent
