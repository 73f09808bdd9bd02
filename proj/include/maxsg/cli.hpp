#pragma once

#include <ostream>

namespace maxsg {

/// Runs the command line and writes its JSON result (or {"error", "message"})
/// to `out`. Returns 0 on a decided result, 2 on an undecided verdict and 1
/// on any error.
int run_cli(int argc, const char* const* argv, std::ostream& out);

}  // namespace maxsg
