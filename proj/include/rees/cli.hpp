// The command-line driver, callable in-process for testing: parses arguments,
// loads the instance, dispatches subcommands, writes reports to `out`, errors
// to `err`.  Exit status: 0 = pass, 1 = certified failure (a verification ran
// and said no), 2 = input/usage/resource error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rees {

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rees
