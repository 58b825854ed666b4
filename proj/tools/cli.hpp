#pragma once

#include <iosfwd>

namespace symlen::cli {

/// Runs one command line. Returns the exit code: 0 success, 1 usage, config
/// or parse errors, 2 budget exhausted or bound not reached.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symlen::cli
