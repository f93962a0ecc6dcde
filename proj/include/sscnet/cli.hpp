#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sscnet {

/// Command-line entry point, callable in-process for tests. Results go to
/// `out` as a single JSON run record (raw DOT for export-dot); diagnostics go
/// to `err`. Exit codes: 0 property holds, 1 property fails with a witness,
/// 2 usage or validation error, 3 budget exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace sscnet
