#pragma once

namespace eddy::cli {

// Entry point of the command-line tool.  Exit codes: 0 success, 1 invalid
// input or configuration, 2 numerical or verification failure.
int run(int argc, const char* const* argv);

}  // namespace eddy::cli
