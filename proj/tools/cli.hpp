#pragma once

#include <iosfwd>

namespace galcore::cli {

/// Runs one invocation. Returns 0 on success, 1 on a domain error and 2 on a
/// usage error; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace galcore::cli
