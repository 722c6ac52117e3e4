#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aesring {

/// Dispatches one subcommand. Exit status 0 on success, 1 on a domain error
/// (bad hex, wrong length, unknown flag), 2 when a verify check fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aesring
