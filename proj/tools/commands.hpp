#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfzeta::cli {

/**
 * Full command-line entry point, shaped as a library call so tests can
 * drive it in process. `args` excludes the program name. Writes reports to
 * `out` and diagnostics to `err`.
 *
 * Exit codes: 0 on success (including all identities passing), 1 when a
 * verification ran and failed, 2 on input or usage errors.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cfzeta::cli
