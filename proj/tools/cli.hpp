#pragma once

#include <iosfwd>

namespace netrep {

/// Entry point of the `netrep` command. Returns the process exit code:
/// 0 on success, 1 for input/configuration/runtime errors, and CLI11's code
/// for usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netrep
