#pragma once

#include <iosfwd>

namespace jhkit::cli {

/// Runs one command line; returns the process exit code (0 ok, 1 a failed
/// verification, 2 bad input).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jhkit::cli
