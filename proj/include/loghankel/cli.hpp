#pragma once

#include <iosfwd>

namespace loghankel {

/// Entry point of the `loghankel` command line tool.
///
/// Exit codes: 0 on success, 1 when a bound or certification check fails,
/// 2 on argument errors. Results go to `out` (or the --output file),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace loghankel
